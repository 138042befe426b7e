#pragma once

// Model normalized shrinking solitons. Both models are closed-form with the
// soliton constant fixed at 1/2 and the potential normalized so that the
// three pointwise identities
//     R + lap f          = n/2
//     R + |df|^2         = f
//     lap f - |df|^2     = n/2 - f
// hold exactly:
//   * Gaussian shrinker: flat R^n, f(y) = |y|^2/4.
//   * Round cylinder:    S^{n-1}(sqrt(2(n-2))) x R, f = z^2/4 + (n-1)/2,
//     with z the axial coordinate (last entry of the point vector; the
//     leading n-1 entries are orthonormal-frame sphere coordinates that f
//     does not see).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "driftlab/errors.hpp"

namespace driftlab {

enum class SolitonKind { EuclideanGaussian, RoundCylinder };

/// Full second-order jet of the potential plus scalar curvature at a point.
struct PointProbe {
  std::vector<double> point;
  double f_value = 0.0;
  std::vector<double> f_gradient;
  std::vector<double> f_hessian;  // row-major n x n, symmetric
  double f_laplacian = 0.0;
  double r_value = 0.0;
};

struct IdentityReport {
  double max_residual = 0.0;
  // max |residual| per identity: {R+lap f-n/2, R+|df|^2-f, lap f-|df|^2-(n/2-f)}
  double residual_trace = 0.0;
  double residual_gradient = 0.0;
  double residual_defect = 0.0;
  double min_scalar_curvature = 0.0;
};

class SolitonModel {
public:
  static SolitonModel make(SolitonKind kind, int n) {
    if (kind == SolitonKind::EuclideanGaussian) {
      if (n < 1) throw ConfigError("Gaussian shrinker needs dimension >= 1");
    } else {
      if (n < 3) throw ConfigError("round cylinder needs dimension >= 3");
    }
    SolitonModel m;
    m.kind_ = kind;
    m.n_ = n;
    return m;
  }

  static SolitonModel euclidean(int n) { return make(SolitonKind::EuclideanGaussian, n); }
  static SolitonModel cylinder(int n) { return make(SolitonKind::RoundCylinder, n); }

  /// Fault-injection control: shifts f by a constant, which breaks two of the
  /// three normalized identities by exactly that amount. Used by negative
  /// controls to prove the identity checker can fail.
  SolitonModel with_potential_offset(double offset) const {
    SolitonModel m = *this;
    m.f_offset_ = offset;
    return m;
  }

  SolitonKind kind() const { return kind_; }
  int dim() const { return n_; }
  double potential_offset() const { return f_offset_; }

  double potential(std::span<const double> y) const {
    if (kind_ == SolitonKind::EuclideanGaussian) {
      double q = 0.0;
      for (double c : y) q += c * c;
      return 0.25 * q + f_offset_;
    }
    const double z = y[static_cast<std::size_t>(n_ - 1)];
    return 0.25 * z * z + 0.5 * (n_ - 1) + f_offset_;
  }

  void gradient(std::span<const double> y, std::span<double> out) const {
    if (kind_ == SolitonKind::EuclideanGaussian) {
      for (int i = 0; i < n_; ++i) out[i] = 0.5 * y[i];
      return;
    }
    for (int i = 0; i + 1 < n_; ++i) out[i] = 0.0;
    out[n_ - 1] = 0.5 * y[static_cast<std::size_t>(n_ - 1)];
  }

  double gradient_norm_sq(std::span<const double> y) const {
    if (kind_ == SolitonKind::EuclideanGaussian) {
      double s = 0.0;
      for (double c : y) s += (0.5 * c) * (0.5 * c);
      return s;
    }
    const double z = y[static_cast<std::size_t>(n_ - 1)];
    return (0.5 * z) * (0.5 * z);
  }

  double laplacian(std::span<const double>) const {
    return kind_ == SolitonKind::EuclideanGaussian ? 0.5 * n_ : 0.5;
  }

  double scalar_curvature(std::span<const double>) const {
    return kind_ == SolitonKind::EuclideanGaussian ? 0.0 : 0.5 * (n_ - 1);
  }

  PointProbe probe(std::span<const double> y) const {
    PointProbe p;
    p.point.assign(y.begin(), y.end());
    p.f_value = potential(y);
    p.f_gradient.assign(static_cast<std::size_t>(n_), 0.0);
    gradient(y, p.f_gradient);
    p.f_hessian.assign(static_cast<std::size_t>(n_) * n_, 0.0);
    if (kind_ == SolitonKind::EuclideanGaussian) {
      for (int i = 0; i < n_; ++i) p.f_hessian[static_cast<std::size_t>(i) * n_ + i] = 0.5;
    } else {
      p.f_hessian[static_cast<std::size_t>(n_ - 1) * n_ + (n_ - 1)] = 0.5;
    }
    p.f_laplacian = laplacian(y);
    p.r_value = scalar_curvature(y);
    return p;
  }

private:
  SolitonKind kind_ = SolitonKind::EuclideanGaussian;
  int n_ = 1;
  double f_offset_ = 0.0;
};

/// Max absolute residual of the three normalized identities over a point set.
inline IdentityReport check_identities(const SolitonModel& model,
                                       std::span<const std::vector<double>> points) {
  if (points.empty()) throw DomainError("check_identities needs at least one point");
  IdentityReport rep;
  rep.min_scalar_curvature = std::numeric_limits<double>::infinity();
  const double half_n = 0.5 * model.dim();
  for (const auto& pt : points) {
    const double f = model.potential(pt);
    const double df2 = model.gradient_norm_sq(pt);
    const double lap = model.laplacian(pt);
    const double r = model.scalar_curvature(pt);
    const double e1 = std::abs(r + lap - half_n);
    const double e2 = std::abs(r + df2 - f);
    const double e3 = std::abs(lap - df2 - (half_n - f));
    rep.residual_trace = std::max(rep.residual_trace, e1);
    rep.residual_gradient = std::max(rep.residual_gradient, e2);
    rep.residual_defect = std::max(rep.residual_defect, e3);
    rep.min_scalar_curvature = std::min(rep.min_scalar_curvature, r);
  }
  rep.max_residual = std::max({rep.residual_trace, rep.residual_gradient, rep.residual_defect});
  return rep;
}

inline std::string to_string(SolitonKind k) {
  return k == SolitonKind::EuclideanGaussian ? "euclidean" : "cylinder";
}

}  // namespace driftlab
