#pragma once

#include <stdexcept>
#include <string>

namespace lwlab {

// Raised when a computation fails numerically (factorization breakdown,
// quadrature non-convergence, unreliable estimator). The CLI maps these to
// exit code 3; configuration/argument problems use the standard
// std::invalid_argument / std::domain_error and map to exit code 2.
class numerical_error : public std::runtime_error {
 public:
  explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lwlab
