#pragma once

#include <stdexcept>
#include <string>

namespace driftlab {

/// Invalid scenario/rule configuration (bad dimension, unknown key, ...).
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Argument outside an operation's mathematical domain (negative time, ...).
class DomainError : public std::runtime_error {
public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// A weighted integral diverges. Carries the critical weight parameter at
/// which integrability is lost, so monitors can report it.
class DivergenceError : public std::runtime_error {
public:
  DivergenceError(const std::string& what, double critical_gamma)
      : std::runtime_error(what), critical_gamma_(critical_gamma) {}
  double critical_gamma() const { return critical_gamma_; }

private:
  double critical_gamma_;
};

}  // namespace driftlab
