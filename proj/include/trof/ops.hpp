#pragma once

#include <Eigen/Dense>

#include "trof/types.hpp"

namespace trof {

/// Forward differences, zero at the far boundary (replication / Neumann).
inline Field gradient(const Image& u) {
  const Eigen::Index h = u.rows(), w = u.cols();
  Field g{Image::Zero(h, w), Image::Zero(h, w)};
  if (w > 1) g.dx.leftCols(w - 1) = u.rightCols(w - 1) - u.leftCols(w - 1);
  if (h > 1) g.dy.topRows(h - 1) = u.bottomRows(h - 1) - u.topRows(h - 1);
  return g;
}

/// Negative adjoint of gradient: <gradient(u), p> + <u, divergence(p)> = 0.
/// The far column of p.dx and far row of p.dy are ignored, mirroring the
/// zeros gradient places there.
inline Image divergence(const Field& p) {
  require(same_shape(p.dx, p.dy), "divergence: field components differ in shape");
  const Eigen::Index h = p.dx.rows(), w = p.dx.cols();
  Image d = Image::Zero(h, w);
  if (w > 1) {
    d.leftCols(w - 1) += p.dx.leftCols(w - 1);
    d.rightCols(w - 1) -= p.dx.leftCols(w - 1);
  }
  if (h > 1) {
    d.topRows(h - 1) += p.dy.topRows(h - 1);
    d.bottomRows(h - 1) -= p.dy.topRows(h - 1);
  }
  return d;
}

/// Discrete total variation; zero iff u is constant.
inline double tv(const Image& u, TvVariant variant) {
  const Field g = gradient(u);
  if (variant == TvVariant::Isotropic)
    return (g.dx.square() + g.dy.square()).sqrt().sum();
  return (g.dx.abs() + g.dy.abs()).sum();
}

/// Perimeter of a pixel set: the total variation of its indicator image.
inline double perimeter(const Mask& a, TvVariant variant) {
  return tv(a.cast<double>(), variant);
}

/// Mean of f over the pixels of a; zero for an empty set.
inline double mean_over(const Image& f, const Mask& a) {
  require(same_shape(f, a), "mean_over: shape mismatch");
  const auto n = a.count();
  if (n == 0) return 0.0;
  return a.select(f, 0.0).sum() / static_cast<double>(n);
}

/// Strict super-level set {x : u(x) > tau}. Ties go below.
inline Mask threshold_set(const Image& u, double tau) { return u > tau; }

/// Label each pixel with the number of thresholds it exceeds. The induced
/// super-level sets {label >= i} are nested by construction.
inline Partition partition_from_thresholds(const Image& u, const Eigen::VectorXd& taus) {
  require(strictly_increasing(taus), "thresholds must be strictly increasing");
  Partition p;
  p.labels = Labels::Zero(u.rows(), u.cols());
  for (Eigen::Index i = 0; i < taus.size(); ++i)
    p.labels += (u > taus[i]).cast<int>();
  p.num_phases = static_cast<int>(taus.size()) + 1;
  return p;
}

}  // namespace trof
