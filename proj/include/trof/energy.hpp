#pragma once

#include <utility>
#include <vector>

#include "trof/types.hpp"

namespace trof {

/// Per(Sigma) + mu * sum_{x in Sigma} (tau - f(x)). Zero for the empty set.
double energy_single(const Mask& sigma, double tau, const Image& f, double mu,
                     TvVariant variant);

/// Sum of energy_single over a nested family Sigma_1 >= ... >= Sigma_{K-1}
/// with strictly increasing thresholds.
double energy_trof(const std::vector<Mask>& sigmas, const Eigen::VectorXd& taus,
                   const Image& f, double mu, TvVariant variant);

/// Two-phase piecewise-constant energy with fixed region means m0, m1.
double energy_chan_vese(const Mask& sigma, double m0, double m1, const Image& f,
                        double lambda, TvVariant variant);

/// Half-sum of phase perimeters plus lambda-weighted squared misfit.
double energy_pcms(const Partition& part, const Eigen::VectorXd& codebook, const Image& f,
                   double lambda, TvVariant variant);

/// Variant with union-of-upper-phases perimeters and per-phase weights.
double energy_pcms_v(const Partition& part, const Eigen::VectorXd& codebook, const Image& f,
                     const Eigen::VectorXd& weights, TvVariant variant);

/// mu / (2 (m1 - m0)); requires m1 > m0.
double lambda_from_mu(double mu, double m0, double m1);

/// Per-phase weights mu_i derived from consecutive gaps of the means:
/// end phases get mu/(2 gap), middle phases the sum of both gap terms.
Eigen::VectorXd pcms_v_weights(const Eigen::VectorXd& means, double mu);

/// Exact minimizer of energy_single (anisotropic perimeter) over all
/// 2^(w*h) masks of a tiny image; ties go to the lexicographically
/// smallest mask in row-major order. Requires w*h <= 16.
std::pair<Mask, double> brute_force_min_energy(const Image& f, double tau, double mu);

/// Exact minimizer of energy_pcms over all K^(w*h) labelings; tiny grids only.
std::pair<Partition, double> brute_force_min_pcms(const Image& f,
                                                  const Eigen::VectorXd& codebook,
                                                  double lambda, TvVariant variant);

enum class MoveClass { AllLabels, NeighborLabels };

struct PartialMinReport {
  bool means_match = false;     // codebook equals per-phase means of f
  bool no_improving_move = false;
  double worst_mean_error = 0.0;
  // first improving single-pixel relabel, if any
  int pixel_row = -1, pixel_col = -1, from_label = -1, to_label = -1;
  double improvement = 0.0;

  bool passes() const { return means_match && no_improving_move; }
};

/// Checks the two partial-minimizer conditions for the plain PCMS energy:
/// the codebook must equal the per-phase means, and no single-pixel
/// relabeling may decrease the energy.
PartialMinReport is_partial_minimizer(const Partition& part, const Eigen::VectorXd& codebook,
                                      const Image& f, double lambda, TvVariant variant,
                                      MoveClass moves = MoveClass::AllLabels);

/// Same checks against the weighted union-perimeter energy.
PartialMinReport is_partial_minimizer(const Partition& part, const Eigen::VectorXd& codebook,
                                      const Image& f, const Eigen::VectorXd& weights,
                                      TvVariant variant, MoveClass moves = MoveClass::AllLabels);

}  // namespace trof
