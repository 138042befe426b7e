#pragma once

// Finite-difference oracle for the drift heat equation on the Gaussian
// shrinker: dv/dt = v'' - (y/2) v' on [-L, L] (1D) or, for radially
// symmetric data in n dimensions, dv/dt = v'' + ((n-1)/r) v' - (r/2) v' on
// [0, L]. Crank-Nicolson in time (unconditionally stable), Dirichlet zero at
// the artificial outer boundary. The report carries boundary diagnostics so
// domain-truncation error is visible instead of hidden.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

#include "driftlab/errors.hpp"

namespace driftlab {

struct FDGrid {
  double extent = 12.0;  // [-L, L] or [0, L]
  int nodes = 2001;
  double dt = 1e-3;

  FDGrid refined() const {
    FDGrid g = *this;
    g.nodes = 2 * nodes - 1;
    g.dt = 0.5 * dt;
    return g;
  }
};

struct FDResult {
  std::vector<double> points;
  std::vector<double> values;
  double max_boundary_value = 0.0;      // largest |v| seen next to the boundary
  double integrated_boundary_flux = 0.0;  // sum dt * |diffusive flux| at the boundary

  /// Linear interpolation of the solution.
  double at(double y) const {
    const double lo = points.front(), hi = points.back();
    if (y <= lo) return values.front();
    if (y >= hi) return values.back();
    const double h = points[1] - points[0];
    const auto i = static_cast<std::size_t>((y - lo) / h);
    const std::size_t j = std::min(i, points.size() - 2);
    const double s = (y - points[j]) / h;
    return (1.0 - s) * values[j] + s * values[j + 1];
  }
};

namespace detail {

// Solve the tridiagonal system (lower, diag, upper) x = rhs in place.
inline void thomas_solve(const std::vector<double>& lower, const std::vector<double>& diag,
                         const std::vector<double>& upper, std::vector<double>& rhs) {
  const std::size_t n = diag.size();
  std::vector<double> c(n, 0.0);
  c[0] = upper[0] / diag[0];
  rhs[0] /= diag[0];
  for (std::size_t i = 1; i < n; ++i) {
    const double m = diag[i] - lower[i] * c[i - 1];
    c[i] = upper[i] / m;
    rhs[i] = (rhs[i] - lower[i] * rhs[i - 1]) / m;
  }
  for (std::size_t i = n - 1; i-- > 0;) rhs[i] -= c[i] * rhs[i + 1];
}

struct Tridiag {
  std::vector<double> lower, diag, upper;
};

inline FDResult cn_run(const Tridiag& op, std::vector<double> v, std::vector<double> pts,
                       double dt_default, double t, double h) {
  const std::size_t M = v.size();
  Tridiag lhs{std::vector<double>(M), std::vector<double>(M), std::vector<double>(M)};
  std::vector<double> rhs(M);
  FDResult res;
  double remaining = t;
  while (remaining > 1e-15) {
    const double dt = std::min(dt_default, remaining);
    remaining -= dt;
    for (std::size_t i = 0; i < M; ++i) {
      lhs.lower[i] = -0.5 * dt * op.lower[i];
      lhs.diag[i] = 1.0 - 0.5 * dt * op.diag[i];
      lhs.upper[i] = -0.5 * dt * op.upper[i];
    }
    for (std::size_t i = 0; i < M; ++i) {
      double acc = (1.0 + 0.5 * dt * op.diag[i]) * v[i];
      if (i > 0) acc += 0.5 * dt * op.lower[i] * v[i - 1];
      if (i + 1 < M) acc += 0.5 * dt * op.upper[i] * v[i + 1];
      rhs[i] = acc;
    }
    thomas_solve(lhs.lower, lhs.diag, lhs.upper, rhs);
    v.swap(rhs);
    res.max_boundary_value = std::max(res.max_boundary_value, std::abs(v[M - 2]));
    res.integrated_boundary_flux += dt * std::abs(v[M - 2] - v[M - 1]) / h;
  }
  res.points = std::move(pts);
  res.values = std::move(v);
  return res;
}

}  // namespace detail

/// 1D Crank-Nicolson evolution of dv/dt = v'' - (y/2) v' with v(+-L) = 0.
inline FDResult fd_evolve(const std::function<double(double)>& v0, double t, const FDGrid& grid) {
  if (t < 0.0) throw DomainError("evolution time must be >= 0");
  if (grid.nodes < 5) throw ConfigError("FD grid needs at least 5 nodes");
  const int M = grid.nodes;
  const double L = grid.extent;
  const double h = 2.0 * L / (M - 1);
  std::vector<double> pts(M), v(M);
  for (int i = 0; i < M; ++i) {
    pts[i] = -L + i * h;
    v[i] = v0(pts[i]);
  }
  v[0] = v[M - 1] = 0.0;  // Dirichlet
  detail::Tridiag op{std::vector<double>(M, 0.0), std::vector<double>(M, 0.0),
                     std::vector<double>(M, 0.0)};
  for (int i = 1; i + 1 < M; ++i) {
    const double drift = 0.5 * pts[i];
    op.lower[i] = 1.0 / (h * h) + drift / (2.0 * h);
    op.diag[i] = -2.0 / (h * h);
    op.upper[i] = 1.0 / (h * h) - drift / (2.0 * h);
  }
  // boundary rows: identity (value pinned at 0)
  return detail::cn_run(op, std::move(v), std::move(pts), grid.dt, t, h);
}

/// Radially symmetric n-dimensional evolution on [0, L]:
/// dv/dt = v'' + ((n-1)/r) v' - (r/2) v', regular at r = 0 (lap v = n v''(0)).
inline FDResult fd_evolve_radial(const std::function<double(double)>& v0, double t, int n,
                                 const FDGrid& grid) {
  if (t < 0.0) throw DomainError("evolution time must be >= 0");
  if (n < 1) throw ConfigError("dimension must be >= 1");
  if (grid.nodes < 5) throw ConfigError("FD grid needs at least 5 nodes");
  const int M = grid.nodes;
  const double L = grid.extent;
  const double h = L / (M - 1);
  std::vector<double> pts(M), v(M);
  for (int i = 0; i < M; ++i) {
    pts[i] = i * h;
    v[i] = v0(pts[i]);
  }
  v[M - 1] = 0.0;
  detail::Tridiag op{std::vector<double>(M, 0.0), std::vector<double>(M, 0.0),
                     std::vector<double>(M, 0.0)};
  // r = 0: by symmetry v'(0) = 0 and lap v = n v''(0) with v(-h) = v(h)
  op.diag[0] = -2.0 * n / (h * h);
  op.upper[0] = 2.0 * n / (h * h);
  for (int i = 1; i + 1 < M; ++i) {
    const double r = pts[i];
    const double adv = (n - 1) / r - 0.5 * r;  // first-derivative coefficient
    op.lower[i] = 1.0 / (h * h) - adv / (2.0 * h);
    op.diag[i] = -2.0 / (h * h);
    op.upper[i] = 1.0 / (h * h) + adv / (2.0 * h);
  }
  return detail::cn_run(op, std::move(v), std::move(pts), grid.dt, t, h);
}

}  // namespace driftlab
