#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trof/rof.hpp"
#include "trof/types.hpp"

namespace trof {

struct TrofParams {
  int phases = 2;            // requested phase count K
  double eps_tau = 1e-5;     // threshold-change stopping tolerance
  int max_outer_iter = 100;
  int min_phase_pixels = 0;  // phases at or below this size count as empty
  RofParams rof;
};

struct PhaseStats {
  Eigen::VectorXd means;   // mean of f over each phase, 0 for empty phases
  Eigen::VectorXi counts;  // pixels per phase
};

struct TraceEntry {
  Eigen::VectorXd taus;   // thresholds after cleanup at this iteration
  Eigen::VectorXd means;  // m_0 .. m_{K-1}
  Eigen::VectorXi zeta;   // per-threshold direction of change; empty if undefined
  int sign_changes = -1;  // s_k over the extended sign sequence; -1 if undefined
  int phase_count = 1;
  double tau_delta = -1.0;  // ||tau_k - tau_{k-1}||_2; -1 if undefined
};

struct TrofResult {
  Partition partition;
  Eigen::VectorXd final_taus;
  Eigen::VectorXd final_means;
  RofSolution rof;
  std::vector<TraceEntry> trace;
  bool converged = false;
  int outer_iterations = 0;  // threshold updates performed
};

/// Mean of f over each phase of the threshold partition of u, with the
/// empty-set mean equal to zero. Thresholds slice u; means are taken on f.
Eigen::VectorXd phase_means(const Image& u, const Image& f, const Eigen::VectorXd& taus);

PhaseStats phase_stats(const Image& u, const Image& f, const Eigen::VectorXd& taus);

/// Midpoints of consecutive phase means: tau_i = (m_{i-1} + m_i) / 2.
Eigen::VectorXd update_thresholds(const Eigen::VectorXd& means);

/// Direction-of-change signs between consecutive threshold vectors. Ties
/// copy the first changed component's sign at the front and the left
/// neighbor elsewhere; an all-tied vector is +1 by convention. The count s
/// includes the boundary extension, which repeats the end signs.
std::pair<Eigen::VectorXi, int> sign_sequence(const Eigen::VectorXd& tau_now,
                                              const Eigen::VectorXd& tau_prev);

struct CleanupResult {
  Eigen::VectorXd taus;
  PhaseStats stats;
  int dropped = 0;
  int replaced = 0;
};

/// Repairs a threshold vector against the fixed restoration u: drops
/// thresholds bounding empty phases, and where a phase mean escapes its
/// threshold bracket either restores values from the previous iterate or
/// drops the offending threshold. On return all phases are nonempty and
/// every mean lies between its neighboring thresholds.
CleanupResult cleanup(const Image& u, const Image& f, Eigen::VectorXd taus,
                      const std::optional<Eigen::VectorXd>& prev_taus,
                      int min_phase_pixels = 0);

/// Full pipeline: solve the restoration once, then iterate threshold /
/// cleanup / midpoint update until the thresholds settle.
TrofResult segment(const Image& f, const TrofParams& params, const Eigen::VectorXd& tau0);

/// Same iteration against an already computed restoration (shared across
/// several phase counts).
TrofResult segment_with_solution(const RofSolution& sol, const Image& f,
                                 const TrofParams& params, const Eigen::VectorXd& tau0);

}  // namespace trof
