#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace eit2des {

// Invalid configuration or parameter values. CLI exit code 1.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Numerical failure: NaN/overflow during propagation, degenerate closed form,
// non-convergent fit. CLI exit code 2.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

// Non-convergent least-squares fit; carries the residual history of the
// abandoned iteration.
class FitError : public NumericalError {
 public:
  FitError(const std::string& what, std::vector<double> residual_history)
      : NumericalError(what), residual_history_(std::move(residual_history)) {}

  const std::vector<double>& residual_history() const { return residual_history_; }

 private:
  std::vector<double> residual_history_;
};

}  // namespace eit2des
