#pragma once

#include <vector>

#include "trof/types.hpp"

namespace trof {

struct RofParams {
  double mu = 1.0;        // fidelity weight
  double rho = 2.0;       // ADMM penalty
  double eps_u = 1e-4;    // relative-change stopping tolerance
  int max_iter = 2000;
  TvVariant variant = TvVariant::Isotropic;
  double cg_tol = 1e-8;   // inner linear-solve relative tolerance
  int cg_max_iter = 200;
};

struct RofSolution {
  Image u;                // clamped to [min f, max f]
  int iterations = 0;
  bool converged = false;
  std::vector<double> relative_change_history;
  double final_energy = 0.0;
  double pre_clamp_min = 0.0;  // extrema of u before the final clamp
  double pre_clamp_max = 0.0;
};

/// ADMM on the splitting z = grad(u): z-update is per-pixel shrinkage with
/// threshold 1/rho, u-update solves (mu*I + rho*grad^T grad) u = mu*f +
/// rho*grad^T(z - b) by conjugate gradient. Stops when the relative change
/// of u drops below eps_u; hitting max_iter is reported, not an error.
RofSolution solve_rof(const Image& f, const RofParams& params);

/// tv(u) + (mu/2) * sum (u - f)^2
double rof_energy(const Image& u, const Image& f, double mu, TvVariant variant);

/// Exact minimizer of sum |u_{k+1} - u_k| + (mu/2) sum (u - f)^2 by the
/// taut-string walk. Serves as an independent 1D oracle for the ADMM solver.
Eigen::VectorXd taut_string_1d(const Eigen::VectorXd& f, double mu);

}  // namespace trof
