#include "jcm/state.hpp"

#include <cmath>
#include <functional>
#include <limits>

#include "jcm/numeric.hpp"

namespace jcm {

AtomState AtomState::make(Complex p, Complex q) {
  const double n = std::norm(p) + std::norm(q);
  if (std::abs(n - 1.0) > 1e-12) throw DomainError("atom state must satisfy |p|^2 + |q|^2 = 1");
  return {p, q};
}

AtomState AtomState::normalized(Complex p, Complex q) {
  const double n = std::sqrt(std::norm(p) + std::norm(q));
  if (!(n > 0.0)) throw DomainError("atom state has zero norm");
  return {p / n, q / n};
}

void JointState::validate(double tol) const {
  if (a.size() != b.size() || a.size() < 2) throw DomainError("joint state arrays must share a length >= 2");
  if (std::abs(norm_sq() - 1.0) > tol) throw DomainError("joint state is not normalized");
}

namespace {

using LogProb = std::function<double(int)>;

// Smallest N >= params.n_max whose discarded tail sum_{n >= N} P_n is below
// eps_tail. `log_prob` must describe a normalized distribution.
int choose_truncation(const LogProb& log_prob, const ModelParams& params, const char* what) {
  params.validate();
  const int limit = params.hard_cap + 1;
  std::vector<double> suffix(static_cast<std::size_t>(limit) + 2, 0.0);
  for (int n = limit; n >= 0; --n) suffix[n] = suffix[n + 1] + std::exp(log_prob(n));
  double beyond = 1.0 - suffix[0];
  if (beyond < 1e-14) beyond = 0.0;
  for (int N = params.n_max; N <= params.hard_cap; ++N) {
    if (suffix[N] + beyond < params.eps_tail) return N;
  }
  throw TruncationError(std::string(what) + ": required truncation exceeds hard cap " +
                        std::to_string(params.hard_cap));
}

double cat_log_norm(double mean, Parity parity) {
  // log(1 +- e^{-2 mean}), accurate for small mean in the odd case.
  return parity == Parity::even ? std::log1p(std::exp(-2.0 * mean))
                                : std::log(-std::expm1(-2.0 * mean));
}

bool parity_allows(int n, Parity parity) { return (n % 2 == 0) == (parity == Parity::even); }

LogProb cat_log_prob(double mean, Parity parity) {
  if (parity == Parity::odd && mean == 0.0) throw DomainError("odd cat state is undefined at alpha = 0");
  const double lnorm = cat_log_norm(mean, parity);
  return [=](int n) {
    if (!parity_allows(n, parity)) return -std::numeric_limits<double>::infinity();
    return std::log(2.0) + log_poisson(n, mean) - lnorm;
  };
}

VecXc amplitudes_from_log_prob(const LogProb& log_prob, double phase_per_n, int N) {
  VecXc c(N + 1);
  for (int n = 0; n <= N; ++n) {
    const double mag = std::exp(0.5 * log_prob(n));
    c(n) = std::polar(mag, product_mod_two_pi(static_cast<double>(n), phase_per_n));
  }
  const double norm = c.norm();
  if (!(norm > 0.0)) throw DomainError("field state has zero norm after truncation");
  return c / norm;
}

JointState padded(const VecXc& a, const VecXc& b) {
  JointState s;
  s.a = VecXc::Zero(a.size() + 1);
  s.b = VecXc::Zero(b.size() + 1);
  s.a.head(a.size()) = a;
  s.b.head(b.size()) = b;
  return s;
}

}  // namespace

FieldState coherent_field(Complex alpha, const ModelParams& params) {
  const double mean = std::norm(alpha);
  const LogProb lp = [mean](int n) { return log_poisson(n, mean); };
  const int N = choose_truncation(lp, params, "coherent_field");
  return {amplitudes_from_log_prob(lp, std::arg(alpha), N)};
}

FieldState phase_field(Complex z, std::span<const int> signs, const ModelParams& params) {
  const double r = std::abs(z);
  if (!(r < 1.0)) throw DomainError("|z| must be less than 1 for the state to be normalizable");
  for (int j : signs)
    if (j != 1 && j != -1) throw DomainError("sign pattern entries must be +1 or -1");
  const LogProb lp = [r](int n) {
    if (r == 0.0) return n == 0 ? 0.0 : -std::numeric_limits<double>::infinity();
    return std::log1p(-r * r) + 2.0 * n * std::log(r);
  };
  const int N = choose_truncation(lp, params, "phase_field");
  VecXc c = amplitudes_from_log_prob(lp, std::arg(z), N);
  for (int n = 0; n <= N && n < static_cast<int>(signs.size()); ++n) c(n) *= static_cast<double>(signs[n]);
  return {c};
}

FieldState cat_field(Complex alpha, Parity parity, const ModelParams& params) {
  const double mean = std::norm(alpha);
  const LogProb lp = cat_log_prob(mean, parity);
  const int N = choose_truncation(lp, params, "cat_field");
  return {amplitudes_from_log_prob(lp, std::arg(alpha), N)};
}

JointState product_state(const AtomState& atom, const FieldState& field) {
  return padded(atom.p * field.c, atom.q * field.c);
}

void check_zz_angles(double gamma, double xi) {
  if (!(gamma >= 0.0 && gamma <= 0.5 * kPi + 1e-12)) throw DomainError("gamma must lie in [0, pi/2]");
  if (!(xi >= 0.0 && xi < kTwoPi)) throw DomainError("xi must lie in [0, 2pi)");
}

AtomState zz_atom(double gamma, double xi) {
  check_zz_angles(gamma, xi);
  return {Complex(std::cos(gamma), 0.0), std::polar(std::sin(gamma), -xi)};
}

JointState eo_state(Complex alpha, double gamma, double xi, const ModelParams& params) {
  check_zz_angles(gamma, xi);
  const double mean = std::norm(alpha);
  const double cg = std::cos(gamma), sg = std::sin(gamma);
  const bool need_even = cg != 0.0, need_odd = sg != 0.0;

  int N = params.n_max;
  LogProb even_lp, odd_lp;
  if (need_even) {
    even_lp = cat_log_prob(mean, Parity::even);
    N = std::max(N, choose_truncation(even_lp, params, "eo_state"));
  }
  if (need_odd) {
    odd_lp = cat_log_prob(mean, Parity::odd);
    N = std::max(N, choose_truncation(odd_lp, params, "eo_state"));
  }
  VecXc a = VecXc::Zero(N + 1), b = VecXc::Zero(N + 1);
  if (need_even) a = cg * amplitudes_from_log_prob(even_lp, std::arg(alpha), N);
  if (need_odd) b = std::polar(sg, xi) * amplitudes_from_log_prob(odd_lp, std::arg(alpha), N);
  return padded(a, b);
}

JointState trapping_state(Complex z, std::span<const int> signs, const ModelParams& params) {
  const FieldState field = phase_field(z, signs, params);
  return product_state(AtomState::normalized(z, 1.0), field);
}

}  // namespace jcm
