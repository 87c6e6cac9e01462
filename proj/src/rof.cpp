#include "trof/rof.hpp"

#include <cmath>
#include <limits>

#include "trof/ops.hpp"

namespace trof {

namespace {

void validate(const Image& f, const RofParams& p) {
  require(f.size() > 0, "solve_rof: empty image");
  require((f >= 0.0).all() && (f <= 1.0).all(), "solve_rof: intensities must lie in [0,1]");
  require(p.mu > 0 && p.rho > 0 && p.cg_tol > 0, "solve_rof: parameters must be positive");
  require(p.eps_u > 0 && p.eps_u < 1, "solve_rof: eps_u must lie in (0,1)");
  require(p.max_iter > 0 && p.cg_max_iter > 0, "solve_rof: iteration limits must be positive");
}

// mu*u - rho*div(grad(u)); symmetric positive definite for mu > 0.
Image apply_system(const Image& u, double mu, double rho) {
  return mu * u - rho * divergence(gradient(u));
}

// Matrix-free CG with warm start; relative residual tolerance.
Image cg_solve(const Image& rhs, const Image& x0, double mu, double rho, double tol,
               int max_iter) {
  Image x = x0;
  Image r = rhs - apply_system(x, mu, rho);
  Image p = r;
  double rs = r.square().sum();
  const double stop = tol * tol * rhs.square().sum();
  if (rs <= stop) return x;
  for (int it = 0; it < max_iter; ++it) {
    const Image ap = apply_system(p, mu, rho);
    const double alpha = rs / (p * ap).sum();
    x += alpha * p;
    r -= alpha * ap;
    const double rs_next = r.square().sum();
    if (rs_next <= stop) break;
    p = r + (rs_next / rs) * p;
    rs = rs_next;
  }
  return x;
}

void shrink(Field& z, const Field& v, double thresh, TvVariant variant) {
  if (variant == TvVariant::Isotropic) {
    const Image norm = (v.dx.square() + v.dy.square()).sqrt();
    const Image scale =
        (norm > thresh).select((norm - thresh) / norm.max(1e-300), Image::Zero(norm.rows(), norm.cols()));
    z.dx = scale * v.dx;
    z.dy = scale * v.dy;
  } else {
    z.dx = v.dx.sign() * (v.dx.abs() - thresh).max(0.0);
    z.dy = v.dy.sign() * (v.dy.abs() - thresh).max(0.0);
  }
}

}  // namespace

RofSolution solve_rof(const Image& f, const RofParams& params) {
  validate(f, params);
  const double mu = params.mu, rho = params.rho;

  RofSolution sol;
  Image u = f;
  Field z = gradient(f);
  Field b{Image::Zero(f.rows(), f.cols()), Image::Zero(f.rows(), f.cols())};
  Field v = z;

  for (int it = 0; it < params.max_iter; ++it) {
    const Image rhs = mu * f - rho * divergence({z.dx - b.dx, z.dy - b.dy});
    const Image u_next = cg_solve(rhs, u, mu, rho, params.cg_tol, params.cg_max_iter);

    const Field gu = gradient(u_next);
    v.dx = gu.dx + b.dx;
    v.dy = gu.dy + b.dy;
    shrink(z, v, 1.0 / rho, params.variant);
    b.dx = v.dx - z.dx;
    b.dy = v.dy - z.dy;

    const double den = std::sqrt(u_next.square().sum());
    const double num = std::sqrt((u_next - u).square().sum());
    const double rel = den > 0.0 ? num / den : 0.0;
    sol.relative_change_history.push_back(rel);
    u = u_next;
    if (rel <= params.eps_u) {
      sol.converged = true;
      break;
    }
  }
  sol.iterations = static_cast<int>(sol.relative_change_history.size());

  sol.pre_clamp_min = u.minCoeff();
  sol.pre_clamp_max = u.maxCoeff();
  sol.u = u.min(f.maxCoeff()).max(f.minCoeff());
  sol.final_energy = rof_energy(sol.u, f, mu, params.variant);
  return sol;
}

double rof_energy(const Image& u, const Image& f, double mu, TvVariant variant) {
  require(same_shape(u, f), "rof_energy: shape mismatch");
  return tv(u, variant) + 0.5 * mu * (u - f).square().sum();
}

Eigen::VectorXd taut_string_1d(const Eigen::VectorXd& f, double mu) {
  require(f.size() >= 1, "taut_string_1d: empty signal");
  require(mu > 0, "taut_string_1d: mu must be positive");
  const int n = static_cast<int>(f.size());
  Eigen::VectorXd u(n);
  if (n == 1) {
    u[0] = f[0];
    return u;
  }
  const double lam = 1.0 / mu;

  // Taut string through the tube of radius lam around the running sums:
  // r_0 = 0, r_k = f_0 + ... + f_{k-1}, endpoints pinned, and the solution
  // is the sequence of string slopes. Each pass scans forward from the
  // current anchor shrinking the feasible slope interval; when it empties,
  // the string bends at the binding bound and the straight piece is emitted.
  Eigen::VectorXd r(n + 1);
  r[0] = 0.0;
  for (int k = 0; k < n; ++k) r[k + 1] = r[k] + f[k];
  const auto upper = [&](int k) { return k == n ? r[n] : r[k] + lam; };
  const auto lower = [&](int k) { return k == n ? r[n] : r[k] - lam; };

  int a = 0;          // anchor index
  double sa = 0.0;    // string value at the anchor
  while (a < n) {
    double hi = std::numeric_limits<double>::infinity();
    double lo = -std::numeric_limits<double>::infinity();
    int k_hi = -1, k_lo = -1;
    bool bent = false;
    for (int k = a + 1; k <= n; ++k) {
      const double shi = (upper(k) - sa) / (k - a);
      const double slo = (lower(k) - sa) / (k - a);
      if (shi < hi) {
        hi = shi;
        k_hi = k;
      }
      if (slo > lo) {
        lo = slo;
        k_lo = k;
      }
      if (lo > hi) {
        // The newcomer conflicts with an earlier bound; bend there.
        if (k_lo == k) {
          for (int i = a; i < k_hi; ++i) u[i] = hi;
          sa += hi * (k_hi - a);
          a = k_hi;
        } else {
          for (int i = a; i < k_lo; ++i) u[i] = lo;
          sa += lo * (k_lo - a);
          a = k_lo;
        }
        bent = true;
        break;
      }
    }
    if (!bent) {
      const double slope = (r[n] - sa) / (n - a);
      for (int i = a; i < n; ++i) u[i] = slope;
      break;
    }
  }
  return u;
}

}  // namespace trof
