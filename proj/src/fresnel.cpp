#include <cmath>
#include <complex>

#include "jcm/revival.hpp"

namespace jcm {

namespace {

// Fresnel integrals in the pi u^2 / 2 normalization: power series for small
// t, continued fraction for erfc beyond (modified Lentz).
FresnelPair fresnel_std(double t) {
  constexpr double kEps = 1e-16;
  constexpr double kTiny = 1e-300;
  constexpr int kMaxIter = 2000;
  const double ax = std::abs(t);
  FresnelPair r;
  if (ax < 1e-150) {
    r.C = ax;
  } else if (ax <= 1.5) {
    const double fact = 0.5 * kPi * ax * ax;
    double sum = 0.0, sums = 0.0, sumc = ax, sign = 1.0, term = ax;
    bool odd = true;
    int n = 3;
    for (int k = 1; k <= kMaxIter; ++k) {
      term *= fact / k;
      sum += sign * term / n;
      const double test = std::abs(sum) * kEps;
      if (odd) {
        sign = -sign;
        sums = sum;
        sum = sumc;
      } else {
        sumc = sum;
        sum = sums;
      }
      if (term < test) break;
      odd = !odd;
      n += 2;
    }
    r.C = sumc;
    r.S = sums;
  } else {
    const double pix2 = kPi * ax * ax;
    std::complex<double> b(1.0, -pix2);
    std::complex<double> cc = 1.0 / kTiny;
    std::complex<double> d = 1.0 / b, h = d;
    int n = -1;
    for (int k = 2; k <= kMaxIter; ++k) {
      n += 2;
      const double a = -static_cast<double>(n) * (n + 1);
      b += 4.0;
      d = 1.0 / (a * d + b);
      cc = b + a / cc;
      const std::complex<double> del = cc * d;
      h *= del;
      if (std::abs(del.real() - 1.0) + std::abs(del.imag()) < kEps) break;
    }
    h *= std::complex<double>(ax, -ax);
    const std::complex<double> cs =
        std::complex<double>(0.5, 0.5) * (1.0 - std::polar(1.0, 0.5 * pix2) * h);
    r.C = cs.real();
    r.S = cs.imag();
  }
  if (t < 0.0) {
    r.C = -r.C;
    r.S = -r.S;
  }
  return r;
}

}  // namespace

FresnelPair fresnel(double x) { return fresnel_std(x * std::sqrt(2.0 / kPi)); }

FresnelPair fresnel_asymptotic(double x) {
  if (!(x > 0.0)) throw DomainError("fresnel_asymptotic needs x > 0");
  const double scale = 1.0 / (x * std::sqrt(kTwoPi));
  const double x2 = x * x;
  return {0.5 + std::sin(x2) * scale, 0.5 - std::cos(x2) * scale};
}

}  // namespace jcm
