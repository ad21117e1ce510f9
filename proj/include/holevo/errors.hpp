#pragma once

#include <stdexcept>
#include <string>

namespace holevo {

// Rejected input: malformed matrices, bad probabilities, schema violations.
// The CLI maps this to exit code 1.
class ValidationError : public std::runtime_error {
  public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Internal numerical failure (e.g. eigensolver did not reach its target).
class NumericError : public std::runtime_error {
  public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace holevo
