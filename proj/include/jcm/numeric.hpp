#pragma once

#include <cmath>
#include <functional>

#include "jcm/types.hpp"

namespace jcm {

/// Neumaier-compensated accumulator.
template <typename Scalar>
class CompensatedSum {
 public:
  void add(Scalar x) {
    const Scalar t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  CompensatedSum& operator+=(Scalar x) {
    add(x);
    return *this;
  }
  Scalar value() const { return sum_ + comp_; }

 private:
  Scalar sum_ = Scalar(0);
  Scalar comp_ = Scalar(0);
};

template <typename Derived>
typename Derived::Scalar compensated_sum(const Eigen::DenseBase<Derived>& v) {
  CompensatedSum<typename Derived::Scalar> acc;
  for (Eigen::Index i = 0; i < v.size(); ++i) acc.add(v(i));
  return acc.value();
}

/// Maps any finite angle to [0, 2pi).
double wrap_angle(double x);

/// (a * b) mod 2pi, with the product carried in double-double and reduced
/// against a three-part split of 2pi. Used for the precession angles
/// Omega_n * tau where the product reaches a few 10^4 rad.
double product_mod_two_pi(double a, double b);

/// Natural log of the Poisson weight e^{-m} m^x / Gamma(x + 1) for real x >= 0,
/// with mean m = |alpha|^2. Returns -inf for m == 0 and x > 0.
double log_poisson(double x, double mean);

/// x ln x with the 0 ln 0 = 0 convention.
inline double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  bool converged = false;
  int intervals = 0;
};

struct QuadratureOptions {
  double abs_tol = 1e-9;
  double rel_tol = 0.0;
  int initial_intervals = 1;
  int max_intervals = 200000;
};

/// Globally adaptive Gauss-Kronrod (7/15) integration over [lo, hi].
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double lo, double hi,
                                    const QuadratureOptions& opts = {});

/// Monotone piecewise-cubic Hermite interpolant on the integer grid
/// x = 0, 1, ..., n-1 (Fritsch-Carlson slopes). Never overshoots the data
/// between adjacent samples.
class MonotoneCubic {
 public:
  MonotoneCubic() = default;
  explicit MonotoneCubic(VecX values);

  double operator()(double x) const;
  Eigen::Index size() const { return y_.size(); }

 private:
  VecX y_;
  VecX slope_;
};

}  // namespace jcm
