#pragma once

#include <stdexcept>
#include <string>

namespace bergman {

// A numerical routine failed to produce a trustworthy value
// (non-convergence, non-finite sample, heavy-tailed estimator).
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The requested quantity provably diverges for these parameters.
class DivergenceError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace bergman
