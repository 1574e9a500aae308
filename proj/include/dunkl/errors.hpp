#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace dunkl {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Raised for arguments in the pole set of the multivariate Gamma function.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// Raised when an exact computation produces a result that is impossible
/// for correct arithmetic (nonzero remainder, singular triangular solve).
class InternalError : public Error {
 public:
  using Error::Error;
};

/// Raised when a series cannot reach the requested tolerance within the
/// available degree. `bound` is the certified tail bound that was reached.
class TruncationError : public Error {
 public:
  TruncationError(const std::string& what, double bound, int degree)
      : Error(what), bound(bound), degree(degree) {}
  double bound;
  int degree;
};

/// Raised when adaptive quadrature exhausts its subdivision budget.
class QuadratureError : public Error {
 public:
  QuadratureError(const std::string& what, std::complex<double> best, double error)
      : Error(what), best_estimate(best), error_estimate(error) {}
  std::complex<double> best_estimate;
  double error_estimate;
};

/// Raised when a Riesz object outside the function regime is evaluated
/// pointwise.
class DistributionOnly : public Error {
 public:
  using Error::Error;
};

}  // namespace dunkl
