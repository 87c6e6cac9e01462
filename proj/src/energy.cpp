#include "trof/energy.hpp"

#include <cmath>
#include <functional>

#include "trof/ops.hpp"

namespace trof {

double energy_single(const Mask& sigma, double tau, const Image& f, double mu,
                     TvVariant variant) {
  require(same_shape(f, sigma), "energy_single: shape mismatch");
  const double integral = sigma.select(tau - f, 0.0).sum();
  return perimeter(sigma, variant) + mu * integral;
}

double energy_trof(const std::vector<Mask>& sigmas, const Eigen::VectorXd& taus,
                   const Image& f, double mu, TvVariant variant) {
  require(static_cast<Eigen::Index>(sigmas.size()) == taus.size(),
          "energy_trof: mask/threshold count mismatch");
  require(strictly_increasing(taus), "energy_trof: thresholds must be strictly increasing");
  for (size_t i = 1; i < sigmas.size(); ++i)
    require(!(sigmas[i] && !sigmas[i - 1]).any(), "energy_trof: masks must be nested");
  double e = 0.0;
  for (size_t i = 0; i < sigmas.size(); ++i)
    e += energy_single(sigmas[i], taus[static_cast<Eigen::Index>(i)], f, mu, variant);
  return e;
}

double energy_chan_vese(const Mask& sigma, double m0, double m1, const Image& f,
                        double lambda, TvVariant variant) {
  require(same_shape(f, sigma), "energy_chan_vese: shape mismatch");
  const double inside = sigma.select((m1 - f).square(), 0.0).sum();
  const double outside = sigma.select(0.0, (m0 - f).square()).sum();
  return perimeter(sigma, variant) + lambda * (inside + outside);
}

double energy_pcms(const Partition& part, const Eigen::VectorXd& codebook, const Image& f,
                   double lambda, TvVariant variant) {
  require(codebook.size() == part.num_phases, "energy_pcms: codebook length must equal K");
  require(part.rows() == f.rows() && part.cols() == f.cols(), "energy_pcms: shape mismatch");
  double per_sum = 0.0, misfit = 0.0;
  for (int i = 0; i < part.num_phases; ++i) {
    const Mask omega = part.labels == i;
    per_sum += perimeter(omega, variant);
    misfit += omega.select((codebook[i] - f).square(), 0.0).sum();
  }
  return 0.5 * per_sum + lambda * misfit;
}

double energy_pcms_v(const Partition& part, const Eigen::VectorXd& codebook, const Image& f,
                     const Eigen::VectorXd& weights, TvVariant variant) {
  require(codebook.size() == part.num_phases, "energy_pcms_v: codebook length must equal K");
  require(weights.size() == part.num_phases, "energy_pcms_v: weights length must equal K");
  require(part.rows() == f.rows() && part.cols() == f.cols(), "energy_pcms_v: shape mismatch");
  double e = 0.0;
  for (int i = 0; i < part.num_phases; ++i) {
    e += perimeter(part.labels >= i, variant);
    e += weights[i] * (part.labels == i).select((codebook[i] - f).square(), 0.0).sum();
  }
  return e;
}

double lambda_from_mu(double mu, double m0, double m1) {
  require(m1 > m0, "lambda_from_mu: means must satisfy m1 > m0");
  return mu / (2.0 * (m1 - m0));
}

Eigen::VectorXd pcms_v_weights(const Eigen::VectorXd& means, double mu) {
  require(means.size() >= 2, "pcms_v_weights: need at least two means");
  require(strictly_increasing(means), "pcms_v_weights: means must be strictly increasing");
  const Eigen::Index k = means.size();
  Eigen::VectorXd w(k);
  w[0] = mu / (2.0 * (means[1] - means[0]));
  for (Eigen::Index i = 1; i + 1 < k; ++i)
    w[i] = mu / (2.0 * (means[i] - means[i - 1])) + mu / (2.0 * (means[i + 1] - means[i]));
  w[k - 1] = mu / (2.0 * (means[k - 1] - means[k - 2]));
  return w;
}

namespace {

// Anisotropic perimeter of a bitmask: differing 4-neighbor pairs.
int bit_perimeter(uint32_t bits, int h, int w) {
  int per = 0;
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < w; ++j) {
      const int p = i * w + j;
      const int b = (bits >> p) & 1;
      if (j + 1 < w) per += b ^ ((bits >> (p + 1)) & 1);
      if (i + 1 < h) per += b ^ ((bits >> (p + w)) & 1);
    }
  return per;
}

// True if a precedes b lexicographically in row-major pixel order.
bool lex_less(uint32_t a, uint32_t b, int n) {
  for (int p = 0; p < n; ++p) {
    const int ba = (a >> p) & 1, bb = (b >> p) & 1;
    if (ba != bb) return ba < bb;
  }
  return false;
}

}  // namespace

std::pair<Mask, double> brute_force_min_energy(const Image& f, double tau, double mu) {
  const int h = static_cast<int>(f.rows()), w = static_cast<int>(f.cols());
  const int n = h * w;
  require(n >= 1 && n <= 16, "brute_force_min_energy: grid must have at most 16 pixels");

  Eigen::VectorXd cost(n);  // per-pixel membership cost
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < w; ++j) cost[i * w + j] = mu * (tau - f(i, j));

  uint32_t best = 0;
  double best_e = 0.0;
  for (uint32_t m = 1; m < (1u << n); ++m) {
    double e = bit_perimeter(m, h, w);
    for (int p = 0; p < n; ++p)
      if ((m >> p) & 1) e += cost[p];
    if (e < best_e || (e == best_e && lex_less(m, best, n))) {
      best_e = e;
      best = m;
    }
  }

  Mask mask(h, w);
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < w; ++j) mask(i, j) = (best >> (i * w + j)) & 1;
  return {mask, best_e};
}

std::pair<Partition, double> brute_force_min_pcms(const Image& f,
                                                  const Eigen::VectorXd& codebook,
                                                  double lambda, TvVariant variant) {
  const int h = static_cast<int>(f.rows()), w = static_cast<int>(f.cols());
  const int n = h * w;
  const int k = static_cast<int>(codebook.size());
  double combos = std::pow(static_cast<double>(k), n);
  require(n >= 1 && combos <= 4e6, "brute_force_min_pcms: instance too large");

  Partition cur{Labels::Zero(h, w), k};
  Partition best = cur;
  double best_e = energy_pcms(cur, codebook, f, lambda, variant);
  std::vector<int> digits(n, 0);
  while (true) {
    int pos = 0;
    while (pos < n && digits[pos] == k - 1) digits[pos++] = 0;
    if (pos == n) break;
    ++digits[pos];
    for (int p = 0; p < n; ++p) cur.labels(p / w, p % w) = digits[p];
    const double e = energy_pcms(cur, codebook, f, lambda, variant);
    if (e < best_e) {
      best_e = e;
      best = cur;
    }
  }
  return {best, best_e};
}

namespace {

PartialMinReport check_partial_min(const Partition& part, const Eigen::VectorXd& codebook,
                                   const Image& f, MoveClass moves,
                                   const std::function<double(const Partition&)>& energy) {
  PartialMinReport rep;
  const int k = part.num_phases;
  const int h = static_cast<int>(part.rows()), w = static_cast<int>(part.cols());

  rep.means_match = true;
  for (int i = 0; i < k; ++i) {
    const double m = mean_over(f, part.labels == i);
    const double err = std::abs(m - codebook[i]);
    rep.worst_mean_error = std::max(rep.worst_mean_error, err);
    if (err > 1e-9) rep.means_match = false;
  }

  const double base = energy(part);
  rep.no_improving_move = true;
  Partition probe = part;
  for (int i = 0; i < h && rep.no_improving_move; ++i)
    for (int j = 0; j < w && rep.no_improving_move; ++j) {
      const int from = part.labels(i, j);
      for (int to = 0; to < k; ++to) {
        if (to == from) continue;
        if (moves == MoveClass::NeighborLabels) {
          bool adjacent = false;
          if (i > 0) adjacent |= part.labels(i - 1, j) == to;
          if (i + 1 < h) adjacent |= part.labels(i + 1, j) == to;
          if (j > 0) adjacent |= part.labels(i, j - 1) == to;
          if (j + 1 < w) adjacent |= part.labels(i, j + 1) == to;
          if (!adjacent) continue;
        }
        probe.labels(i, j) = to;
        const double delta = energy(probe) - base;
        probe.labels(i, j) = from;
        if (delta < -1e-9) {
          rep.no_improving_move = false;
          rep.pixel_row = i;
          rep.pixel_col = j;
          rep.from_label = from;
          rep.to_label = to;
          rep.improvement = -delta;
          break;
        }
      }
    }
  return rep;
}

}  // namespace

PartialMinReport is_partial_minimizer(const Partition& part, const Eigen::VectorXd& codebook,
                                      const Image& f, double lambda, TvVariant variant,
                                      MoveClass moves) {
  require(codebook.size() == part.num_phases, "is_partial_minimizer: codebook length");
  return check_partial_min(part, codebook, f, moves, [&](const Partition& p) {
    return energy_pcms(p, codebook, f, lambda, variant);
  });
}

PartialMinReport is_partial_minimizer(const Partition& part, const Eigen::VectorXd& codebook,
                                      const Image& f, const Eigen::VectorXd& weights,
                                      TvVariant variant, MoveClass moves) {
  require(codebook.size() == part.num_phases, "is_partial_minimizer: codebook length");
  return check_partial_min(part, codebook, f, moves, [&](const Partition& p) {
    return energy_pcms_v(p, codebook, f, weights, variant);
  });
}

}  // namespace trof
