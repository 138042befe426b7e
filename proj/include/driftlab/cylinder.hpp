#pragma once

// Truncated expansions on the round-cylinder model S^{n-1} x R. Modes are
// indexed by (l, k): sphere eigenmode l paired with axial Hermite degree k.
// Sphere eigenfunctions are never evaluated pointwise; their L^2(dA)
// orthonormality and the analytic eigenvalue
//     lambda_sphere(l) = l (l + n - 2) / (2 (n - 2))
// (Laplace spectrum of the (n-1)-sphere of radius sqrt(2(n-2))) are all the
// norm monitors need. Total eigenvalue: lambda = lambda_sphere(l) + k/2.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <utility>
#include <vector>

#include "driftlab/errors.hpp"
#include "driftlab/hermite.hpp"

namespace driftlab {

/// Surface area of the sphere factor S^{n-1}(sqrt(2(n-2))).
inline double cylinder_sphere_area(int n) {
  if (n < 3) throw ConfigError("round cylinder needs dimension >= 3");
  const int m = n - 1;  // sphere dimension
  const double unit = 2.0 * std::pow(std::numbers::pi, 0.5 * (m + 1)) / std::tgamma(0.5 * (m + 1));
  return unit * std::pow(std::sqrt(2.0 * (n - 2)), m);
}

inline double cylinder_sphere_eigenvalue(int l, int n) {
  if (l < 0) throw ConfigError("sphere mode must be >= 0");
  return static_cast<double>(l) * (l + n - 2) / (2.0 * (n - 2));
}

class CylinderField {
public:
  explicit CylinderField(int n) : n_(n) {
    if (n < 3) throw ConfigError("round cylinder needs dimension >= 3");
  }

  int dim() const { return n_; }
  std::size_t term_count() const { return coefs_.size(); }

  /// Coefficient of Y_l(theta) h_k(z) with Y_l normalized in L^2(dA).
  void set(int l, int k, double a) {
    if (l < 0 || k < 0) throw ConfigError("mode indices must be >= 0");
    for (std::size_t t = 0; t < modes_.size(); ++t) {
      if (modes_[t].first == l && modes_[t].second == k) {
        coefs_[t] = a;
        return;
      }
    }
    modes_.emplace_back(l, k);
    coefs_.push_back(a);
  }

  /// The constant function 1 = sqrt(Area) * Y_0.
  static CylinderField constant(int n, double value = 1.0) {
    CylinderField f(n);
    f.set(0, 0, value * std::sqrt(cylinder_sphere_area(n)));
    return f;
  }

  /// f - n/2 = z^2/4 - 1/2 = (1/2) h_2(z); purely axial.
  static CylinderField potential_minus_half_dim(int n) {
    CylinderField f(n);
    f.set(0, 2, 0.5 * std::sqrt(cylinder_sphere_area(n)));
    return f;
  }

  double eigenvalue(std::size_t term) const {
    return cylinder_sphere_eigenvalue(modes_[term].first, n_) + 0.5 * modes_[term].second;
  }

  CylinderField evolved(double t) const {
    if (t < 0.0) throw DomainError("evolution time must be >= 0");
    CylinderField out = *this;
    for (std::size_t i = 0; i < out.coefs_.size(); ++i)
      out.coefs_[i] *= std::exp(-eigenvalue(i) * t);
    return out;
  }

  /// integral of v^2 e^{-f/gamma} dVol. Sphere modes are orthonormal and the
  /// sphere part of f is the constant (n-1)/2, so the integral reduces to
  /// axial 1D Gaussian moments: e^{-(n-1)/(2 gamma)} sum a^2 |h_k|^2_gamma.
  double weighted_norm_sq(double gamma, int order = 0) const {
    if (!(gamma > 0.0)) throw DomainError("gamma must be positive");
    int kmax = 0;
    for (const auto& m : modes_) kmax = std::max(kmax, m.second);
    const int need = kmax + 2;
    const int m = order > 0 ? order : need;
    if (m < need) throw ConfigError("quadrature order insufficient for the axial degree");
    const QuadratureRule rule = QuadratureRule::for_gamma(m, 1, gamma);
    const double sphere_weight = std::exp(-0.5 * (n_ - 1) / gamma);
    double sum = 0.0;
    for (std::size_t t = 0; t < modes_.size(); ++t) {
      const int k = modes_[t].second;
      const double axial = rule.integrate([&](std::span<const double> z) {
        const double h = hermite_he(k, z[0] / std::numbers::sqrt2);
        return h * h;
      });
      sum += coefs_[t] * coefs_[t] * axial;
    }
    return sphere_weight * sum;
  }

  double norm_sq_unit_gamma() const { return weighted_norm_sq(1.0); }

private:
  int n_;
  std::vector<std::pair<int, int>> modes_;  // (l, k)
  std::vector<double> coefs_;
};

}  // namespace driftlab
