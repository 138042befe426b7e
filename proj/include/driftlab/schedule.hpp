#pragma once

// Weight/normalization schedules (gamma(t), mu(t), alpha) for the monitored
// quantity mu(t)^{n/2} |P_t v|^2_{L^2(e^{-f/gamma(t)})}.
//
// gamma families:
//   Constant(g0)     gamma = g0
//   Critical         gamma = (e^t + 1)/2, the solution of gdot = gamma - 1/2
//                    with gamma(0) = 1
//   SubCritical(eps) gamma = (1 + e^t - eps (e^t - 1))/2
// mu families: Constant (1) and ExpDecay (e^{-t}).
//
// gamma_dot and mu_dot/mu are supplied analytically so that the two ansatz
// coefficients cancel to machine precision on the exact schedules.

#include <cmath>
#include <string>

#include "driftlab/errors.hpp"

namespace driftlab {

/// Closed-form solution of gdot = gamma - 1/2: (g0 - 1/2) e^t + 1/2.
inline double gamma_ode_solution(double gamma0, double t) {
  return (gamma0 - 0.5) * std::exp(t) + 0.5;
}

struct Schedule {
  enum class GammaKind { Constant, Critical, SubCritical };
  enum class MuKind { Constant, ExpDecay };

  GammaKind gamma_kind = GammaKind::Constant;
  double gamma0 = 1.0;  // Constant only
  double eps = 0.0;     // SubCritical only
  MuKind mu_kind = MuKind::Constant;
  double alpha = 0.0;

  static Schedule classical() { return Schedule{GammaKind::Constant, 1.0, 0.0, MuKind::Constant, 0.0}; }
  static Schedule critical() { return Schedule{GammaKind::Critical, 1.0, 0.0, MuKind::ExpDecay, 1.0}; }
  static Schedule subcritical(double eps, double alpha = 1.0) {
    return Schedule{GammaKind::SubCritical, 1.0, eps, MuKind::ExpDecay, alpha};
  }

  double gamma(double t) const {
    switch (gamma_kind) {
      case GammaKind::Constant:
        return gamma0;
      case GammaKind::Critical:
        return 0.5 + 0.5 * std::exp(t);
      case GammaKind::SubCritical: {
        const double et = std::exp(t);
        return 0.5 * (1.0 + et - eps * (et - 1.0));
      }
    }
    throw DomainError("unknown gamma kind");
  }

  double gamma_dot(double t) const {
    switch (gamma_kind) {
      case GammaKind::Constant:
        return 0.0;
      case GammaKind::Critical:
        return 0.5 * std::exp(t);
      case GammaKind::SubCritical:
        return 0.5 * (1.0 - eps) * std::exp(t);
    }
    throw DomainError("unknown gamma kind");
  }

  double mu(double t) const { return mu_kind == MuKind::Constant ? 1.0 : std::exp(-t); }

  double mu_dot_over_mu(double) const { return mu_kind == MuKind::Constant ? 0.0 : -1.0; }

  std::string describe() const {
    std::string g;
    switch (gamma_kind) {
      case GammaKind::Constant:
        g = "gamma=const(" + std::to_string(gamma0) + ")";
        break;
      case GammaKind::Critical:
        g = "gamma=critical";
        break;
      case GammaKind::SubCritical:
        g = "gamma=subcritical(eps=" + std::to_string(eps) + ")";
        break;
    }
    g += mu_kind == MuKind::Constant ? ", mu=const" : ", mu=expdecay";
    g += ", alpha=" + std::to_string(alpha);
    return g;
  }
};

}  // namespace driftlab
