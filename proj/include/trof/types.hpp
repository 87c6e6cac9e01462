#pragma once

#include <Eigen/Dense>
#include <stdexcept>

namespace trof {

/// Grayscale image with intensities in [0,1]; (row, col) indexing.
using Image = Eigen::ArrayXXd;

/// Pixel set, same shape as the image it refers to.
using Mask = Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic>;

/// Per-pixel phase labels in [0, K-1].
using Labels = Eigen::ArrayXXi;

/// Discretization of the total variation.
enum class TvVariant { Isotropic, Anisotropic };

/// Forward-difference field: dx along columns, dy along rows.
struct Field {
  Image dx;
  Image dy;
};

/// Labeling of the domain into K phases. Labels are intensity-ordered:
/// phase i collects pixels above exactly i of the thresholds, so the
/// super-level sets {label >= i} are nested.
struct Partition {
  Labels labels;
  int num_phases = 1;

  Eigen::Index rows() const { return labels.rows(); }
  Eigen::Index cols() const { return labels.cols(); }
};

inline bool same_shape(const Image& a, const Image& b) {
  return a.rows() == b.rows() && a.cols() == b.cols();
}

inline bool same_shape(const Image& a, const Mask& b) {
  return a.rows() == b.rows() && a.cols() == b.cols();
}

inline void require(bool cond, const char* what) {
  if (!cond) throw std::invalid_argument(what);
}

inline bool strictly_increasing(const Eigen::VectorXd& v) {
  for (Eigen::Index i = 1; i < v.size(); ++i)
    if (!(v[i] > v[i - 1])) return false;
  return true;
}

}  // namespace trof
