#pragma once

#include <stdexcept>
#include <string>

namespace mgof {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition was violated by the caller.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Quadrature, tail growth or sup search failed to converge.
class NumericalError : public Error {
 public:
  NumericalError(const std::string& what, double last_estimate, double gap)
      : Error(what), last_estimate_(last_estimate), gap_(gap) {}
  explicit NumericalError(const std::string& what)
      : NumericalError(what, 0.0, 0.0) {}

  double last_estimate() const noexcept { return last_estimate_; }
  double gap() const noexcept { return gap_; }

 private:
  double last_estimate_;
  double gap_;
};

/// A required moment or norm is infinite for the configured problem.
class DivergenceError : public Error {
 public:
  using Error::Error;
};

/// Input data (observations, files, density specs) is malformed.
class DataError : public Error {
 public:
  using Error::Error;
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw PreconditionError(message);
}

}  // namespace mgof
