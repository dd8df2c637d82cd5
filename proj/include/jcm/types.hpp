#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace jcm {

using Complex = std::complex<double>;
using VecX = Eigen::VectorXd;
using VecXc = Eigen::VectorXcd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// Error hierarchy. Every failure the library reports derives from jcm::Error.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Fock-space truncation would exceed the configured hard cap.
class TruncationError : public Error {
 public:
  using Error::Error;
};

class QuadratureError : public Error {
 public:
  QuadratureError(const std::string& what, double achieved)
      : Error(what + " (achieved error estimate " + std::to_string(achieved) + ")"),
        achieved_error(achieved) {}
  double achieved_error;
};

// The sampled profile cannot be interpolated smoothly (parity-structured data).
class EnvelopeError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line_no)
      : Error(what + " at line " + std::to_string(line_no)), line(line_no) {}
  int line;
};

/// Model and truncation parameters shared by every state constructor.
///
/// Times are scaled, tau = lambda * t; `lambda` is carried only for labelling
/// output. `n_max` is the minimum Fock truncation: constructors grow it until
/// the discarded probability tail drops below `eps_tail`, and fail with
/// TruncationError past `hard_cap`.
struct ModelParams {
  double lambda = 1.0;
  int n_max = 1;
  double eps_tail = 1e-12;
  int hard_cap = 4096;

  void validate() const {
    if (!(lambda > 0.0)) throw DomainError("coupling lambda must be positive");
    if (n_max < 1) throw DomainError("n_max must be at least 1");
    if (!(eps_tail > 0.0 && eps_tail <= 1e-6)) throw DomainError("eps_tail must lie in (0, 1e-6]");
    if (hard_cap < n_max) throw DomainError("hard_cap must not be below n_max");
  }
};

}  // namespace jcm
