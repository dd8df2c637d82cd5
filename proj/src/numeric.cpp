#include "jcm/numeric.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <queue>
#include <vector>

namespace jcm {

double wrap_angle(double x) {
  double r = std::fmod(x, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r -= kTwoPi;
  return r;
}

namespace {
// 2pi = kTwoPiHi + kTwoPiLo, kTwoPiHi exactly representable in 24 bits so that
// k * kTwoPiHi is exact for |k| < 2^29.
constexpr double kTwoPiHi = 6.28318548202514648437500;
constexpr double kTwoPiLo = -1.74845560007449713233441e-07;
}  // namespace

double product_mod_two_pi(double a, double b) {
  const double p = a * b;
  const double e = std::fma(a, b, -p);
  const double k = std::nearbyint(p / kTwoPi);
  const double r = ((p - k * kTwoPiHi) - k * kTwoPiLo) + e;
  return wrap_angle(r);
}

double log_poisson(double x, double mean) {
  if (mean == 0.0) return x == 0.0 ? 0.0 : -std::numeric_limits<double>::infinity();
  return -mean + x * std::log(mean) - std::lgamma(x + 1.0);
}

namespace {

constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double lo, hi, value, error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gk15(const std::function<double(double)>& f, double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double fc = f(center);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double fsum = f(center - dx) + f(center + dx);
    kronrod += kWgk[j] * fsum;
    if (j % 2 == 1) gauss += kWg[j / 2] * fsum;
  }
  kronrod *= half;
  gauss *= half;
  return {lo, hi, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double lo, double hi,
                                    const QuadratureOptions& opts) {
  QuadratureResult out;
  if (!(hi > lo)) {
    out.converged = true;
    return out;
  }
  const int n0 = std::max(1, opts.initial_intervals);
  std::priority_queue<Segment> heap;
  const double step = (hi - lo) / n0;
  for (int i = 0; i < n0; ++i) {
    const double a = lo + i * step;
    const double b = (i + 1 == n0) ? hi : lo + (i + 1) * step;
    heap.push(gk15(f, a, b));
  }

  auto totals = [&heap]() {
    CompensatedSum<double> v, e;
    auto copy = heap;
    while (!copy.empty()) {
      v.add(copy.top().value);
      e.add(copy.top().error);
      copy.pop();
    }
    return std::pair{v.value(), e.value()};
  };

  double value = 0.0, error = 0.0;
  std::tie(value, error) = totals();
  // Running totals are updated incrementally; a full recount is done at exit.
  while (error > std::max(opts.abs_tol, opts.rel_tol * std::abs(value)) &&
         static_cast<int>(heap.size()) < opts.max_intervals) {
    const Segment worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (!(mid > worst.lo && mid < worst.hi)) {
      heap.push(worst);
      break;
    }
    const Segment left = gk15(f, worst.lo, mid);
    const Segment right = gk15(f, mid, worst.hi);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }
  std::tie(value, error) = totals();
  out.value = value;
  out.error = error;
  out.intervals = static_cast<int>(heap.size());
  out.converged = error <= std::max(opts.abs_tol, opts.rel_tol * std::abs(value));
  return out;
}

MonotoneCubic::MonotoneCubic(VecX values) : y_(std::move(values)), slope_(VecX::Zero(y_.size())) {
  const Eigen::Index n = y_.size();
  if (n < 2) return;
  const VecX delta = y_.tail(n - 1) - y_.head(n - 1);
  if (n == 2) {
    slope_.setConstant(delta(0));
    return;
  }
  for (Eigen::Index i = 1; i + 1 < n; ++i) {
    const double d0 = delta(i - 1), d1 = delta(i);
    slope_(i) = (d0 * d1 <= 0.0) ? 0.0 : 2.0 / (1.0 / d0 + 1.0 / d1);
  }
  auto edge = [](double d0, double d1) {
    double d = 0.5 * (3.0 * d0 - d1);
    if (d * d0 <= 0.0) return 0.0;
    if (d0 * d1 < 0.0 && std::abs(d) > 3.0 * std::abs(d0)) return 3.0 * d0;
    return d;
  };
  slope_(0) = edge(delta(0), delta(1));
  slope_(n - 1) = edge(delta(n - 2), delta(n - 3));
}

double MonotoneCubic::operator()(double x) const {
  const Eigen::Index n = y_.size();
  if (n == 0 || x < 0.0 || x > static_cast<double>(n - 1)) return 0.0;
  if (n == 1) return y_(0);
  Eigen::Index i = static_cast<Eigen::Index>(std::floor(x));
  if (i >= n - 1) i = n - 2;
  const double t = x - static_cast<double>(i);
  const double t2 = t * t, t3 = t2 * t;
  const double h00 = 2 * t3 - 3 * t2 + 1;
  const double h10 = t3 - 2 * t2 + t;
  const double h01 = -2 * t3 + 3 * t2;
  const double h11 = t3 - t2;
  return h00 * y_(i) + h10 * slope_(i) + h01 * y_(i + 1) + h11 * slope_(i + 1);
}

}  // namespace jcm
