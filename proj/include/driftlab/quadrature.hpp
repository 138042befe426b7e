#pragma once

// Scaled tensorized Gauss-Hermite quadrature.
//
// A rule of order m and scale sigma integrates
//     integral of g(y) * prod_i exp(-y_i^2 / (2 sigma^2)) dy   over R^dim
// and is exact for polynomial g of per-axis degree <= 2m-1. Nodes and
// weights come from Newton iteration on the orthonormal Hermite recurrence;
// they are symmetric about 0 and the weights are positive.
//
// On the Gaussian model the weight e^{-f/gamma} = e^{-|y|^2/(4 gamma)} is a
// rule with sigma^2 = 2*gamma.

#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "driftlab/errors.hpp"

namespace driftlab {

namespace detail {

struct GaussHermiteTable {
  std::vector<double> nodes;    // descending, symmetric about 0
  std::vector<double> weights;  // for weight exp(-x^2)
  std::vector<double> log_weights;
};

// Newton iteration on the orthonormal Hermite recurrence (weight e^{-x^2}).
inline GaussHermiteTable gauss_hermite_nodes(int m) {
  if (m < 1) throw ConfigError("quadrature order must be >= 1");
  GaussHermiteTable tab;
  tab.nodes.resize(m);
  tab.weights.resize(m);
  tab.log_weights.resize(m);
  const double pim4 = 0.7511255444649425;  // pi^{-1/4}
  const int half = (m + 1) / 2;
  double z = 0.0;
  for (int i = 0; i < half; ++i) {
    if (i == 0) {
      z = std::sqrt(2.0 * m + 1.0) - 1.85575 * std::pow(2.0 * m + 1.0, -1.0 / 6.0);
    } else if (i == 1) {
      z -= 1.14 * std::pow(static_cast<double>(m), 0.426) / z;
    } else if (i == 2) {
      z = 1.86 * z - 0.86 * tab.nodes[0];
    } else if (i == 3) {
      z = 1.91 * z - 0.91 * tab.nodes[1];
    } else {
      z = 2.0 * z - tab.nodes[i - 2];
    }
    if (2 * i == m - 1) z = 0.0;  // middle root of an odd-order rule
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = pim4;
      double p2 = 0.0;
      for (int j = 1; j <= m; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = z * std::sqrt(2.0 / j) * p2 - std::sqrt((j - 1.0) / j) * p3;
      }
      pp = std::sqrt(2.0 * m) * p2;
      const double dz = p1 / pp;
      z -= dz;
      if (std::abs(dz) <= 1e-15 * (1.0 + std::abs(z))) break;
    }
    tab.nodes[i] = z;
    tab.nodes[m - 1 - i] = -z;
    const double w = 2.0 / (pp * pp);
    tab.weights[i] = tab.weights[m - 1 - i] = w;
    const double lw = std::log(2.0) - 2.0 * std::log(std::abs(pp));
    tab.log_weights[i] = tab.log_weights[m - 1 - i] = lw;
  }
  return tab;
}

}  // namespace detail

class QuadratureRule {
public:
  /// Rule with per-axis weight exp(-y^2/(2 sigma^2)).
  static QuadratureRule gauss_hermite(int order, int dim, double sigma) {
    if (dim < 1) throw ConfigError("quadrature dimension must be >= 1");
    if (!(sigma > 0.0)) throw ConfigError("quadrature scale must be positive");
    QuadratureRule r;
    r.order_ = order;
    r.dim_ = dim;
    r.sigma_ = sigma;
    r.tab_ = detail::gauss_hermite_nodes(order);
    return r;
  }

  /// Rule matched to the pseudo-Gaussian weight e^{-|y|^2/(4 gamma)}.
  static QuadratureRule for_gamma(int order, int dim, double gamma) {
    if (!(gamma > 0.0)) throw DomainError("gamma must be positive");
    return gauss_hermite(order, dim, std::sqrt(2.0 * gamma));
  }

  int order() const { return order_; }
  int dim() const { return dim_; }
  double sigma() const { return sigma_; }
  std::span<const double> axis_nodes() const { return tab_.nodes; }
  std::span<const double> axis_weights() const { return tab_.weights; }

  /// Physical abscissa of 1D node i (axis weight exp(-y^2/(2 sigma^2))).
  double axis_point(int i) const { return sigma_ * std::sqrt(2.0) * tab_.nodes[i]; }

  /// Visit every tensor node: fn(per-axis node indices, abscissa, GH weight
  /// product). Iteration order is fixed, so reductions are deterministic.
  template <class Fn>
  void for_each_node(Fn&& fn, std::span<const double> center = {}) const {
    const double scale = sigma_ * std::sqrt(2.0);
    std::vector<int> idx(static_cast<std::size_t>(dim_), 0);
    std::vector<double> y(static_cast<std::size_t>(dim_), 0.0);
    for (;;) {
      double w = 1.0;
      for (int a = 0; a < dim_; ++a) {
        w *= tab_.weights[idx[a]];
        y[a] = (center.empty() ? 0.0 : center[a]) + scale * tab_.nodes[idx[a]];
      }
      fn(std::span<const int>(idx), std::span<const double>(y), w);
      int a = 0;
      for (; a < dim_; ++a) {
        if (++idx[a] < order_) break;
        idx[a] = 0;
      }
      if (a == dim_) break;
    }
  }

  /// integral of g(y) * weight(y) dy over R^dim.
  template <class F>
  double integrate(F&& g) const {
    std::vector<double> zeros(static_cast<std::size_t>(dim_), 0.0);
    return integrate_shifted(std::forward<F>(g), zeros);
  }

  /// Same with the weight recentered: weight(y - center).
  template <class F>
  double integrate_shifted(F&& g, std::span<const double> center) const {
    const double scale = sigma_ * std::sqrt(2.0);
    const double jac = std::pow(scale, dim_);
    double sum = 0.0;
    for_each_node([&](std::span<const int>, std::span<const double> y,
                      double w) { sum += w * g(y); },
                  center);
    return jac * sum;
  }

  /// Log-domain path for integrands supplied as log g(y); returns
  /// log(integral). Keeps rules usable when g spans hundreds of e-folds.
  template <class LogF>
  double integrate_log_shifted(LogF&& log_g, std::span<const double> center) const {
    const double scale = sigma_ * std::sqrt(2.0);
    std::vector<int> idx(static_cast<std::size_t>(dim_), 0);
    std::vector<double> y(static_cast<std::size_t>(dim_), 0.0);
    std::vector<double> terms;
    double max_term = -std::numeric_limits<double>::infinity();
    for (;;) {
      double lw = 0.0;
      for (int a = 0; a < dim_; ++a) {
        lw += tab_.log_weights[idx[a]];
        y[a] = center[a] + scale * tab_.nodes[idx[a]];
      }
      const double t = lw + log_g(std::span<const double>(y));
      terms.push_back(t);
      if (t > max_term) max_term = t;
      int a = 0;
      for (; a < dim_; ++a) {
        if (++idx[a] < order_) break;
        idx[a] = 0;
      }
      if (a == dim_) break;
    }
    double sum = 0.0;
    for (double t : terms) sum += std::exp(t - max_term);
    return max_term + std::log(sum) + dim_ * std::log(scale);
  }

  template <class LogF>
  double integrate_log(LogF&& log_g) const {
    std::vector<double> zeros(static_cast<std::size_t>(dim_), 0.0);
    return integrate_log_shifted(std::forward<LogF>(log_g), zeros);
  }

private:
  int order_ = 0;
  int dim_ = 0;
  double sigma_ = 1.0;
  detail::GaussHermiteTable tab_;
};

/// (integral |v|^q * weight dy)^{1/q} against the rule's own weight. With the
/// rule built via for_gamma this is the L^q norm under e^{-f/gamma} on the
/// Gaussian model.
template <class F>
double lq_norm(F&& v, double q, const QuadratureRule& rule) {
  if (q < 1.0) throw DomainError("lq_norm requires q >= 1");
  const double s = rule.integrate(
      [&](std::span<const double> y) { return std::pow(std::abs(v(y)), q); });
  return std::pow(s, 1.0 / q);
}

}  // namespace driftlab
