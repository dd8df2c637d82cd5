#include "jcm/revival.hpp"

#include <cmath>
#include <memory>

#include "jcm/numeric.hpp"

namespace jcm {

double EnvelopeFn::phi0(double n) const {
  const double a = d1(n), b = d2(n);
  return (a == 0.0 && b == 0.0) ? 0.0 : wrap_angle(std::atan2(b, a));
}

namespace {

// D-weighted mean and spread of the sample index.
void set_moments(EnvelopeFn& env, const VecX& D) {
  CompensatedSum<double> m0, m1;
  for (Eigen::Index i = 0; i < D.size(); ++i) {
    m0.add(D(i));
    m1.add(D(i) * static_cast<double>(i));
  }
  if (!(m0.value() > 0.0)) return;
  env.mean = m1.value() / m0.value();
  CompensatedSum<double> m2;
  for (Eigen::Index i = 0; i < D.size(); ++i) m2.add(D(i) * std::pow(i - env.mean, 2));
  env.sigma = std::sqrt(m2.value() / m0.value());
}

EnvelopeFn sampled(const VecX& D, const VecX& phi0, int stride, double w_minus1_sq) {
  auto c = std::make_shared<MonotoneCubic>(VecX(D.array() * phi0.array().cos()));
  auto s = std::make_shared<MonotoneCubic>(VecX(D.array() * phi0.array().sin()));
  EnvelopeFn env;
  env.d1 = [c](double n) { return (*c)(n); };
  env.d2 = [s](double n) { return (*s)(n); };
  env.n_hi = static_cast<double>(std::max<Eigen::Index>(D.size() - 1, 0));
  env.stride = stride;
  env.w_minus1_sq = w_minus1_sq;
  set_moments(env, D);
  return env;
}

// Continued ZZ profile; `log_p` is the log photon distribution at real n.
template <typename LogP>
EnvelopeFn zz_analytic(const DressednessProfile& profile, Complex alpha, double gamma, double xi, LogP log_p) {
  check_zz_angles(gamma, xi);
  const double cg = std::cos(gamma), sg = std::sin(gamma);
  const double sd = std::sin(std::arg(alpha) - xi);
  EnvelopeFn env;
  env.d1 = [=](double n) { return std::exp(log_p(n)) * cg * cg - std::exp(log_p(n + 1)) * sg * sg; };
  env.d2 = [=](double n) { return 2.0 * std::exp(0.5 * (log_p(n) + log_p(n + 1))) * cg * sg * sd; };
  env.n_hi = static_cast<double>(std::max<Eigen::Index>(profile.D.size() - 1, 0));
  env.w_minus1_sq = profile.w_minus1_sq;
  set_moments(env, profile.D);
  return env;
}

void check_lengths(const DressednessProfile& profile, const VecX& phi0) {
  if (profile.D.size() != phi0.size()) throw DomainError("profile and phase arrays differ in length");
}

}  // namespace

EnvelopeFn interp_envelope(const DressednessProfile& profile, const VecX& phi0, const EnvelopeMode& mode) {
  check_lengths(profile, phi0);
  if (const auto* zz = std::get_if<LogGammaZZ>(&mode)) {
    const double m = std::norm(zz->alpha);
    return zz_analytic(profile, zz->alpha, zz->gamma, zz->xi, [m](double n) { return log_poisson(n, m); });
  }
  if (const auto* zz = std::get_if<GaussianZZ>(&mode)) {
    const double m = std::norm(zz->alpha);
    if (!(m > 0.0)) throw DomainError("gaussian envelope needs alpha != 0");
    return zz_analytic(profile, zz->alpha, zz->gamma, zz->xi, [m](double n) {
      return -0.5 * (n - m) * (n - m) / m - 0.5 * std::log(kTwoPi * m);
    });
  }

  // A profile living on one parity only has phi jumping between adjacent
  // shells through D = 0; no smooth interpolant describes it.
  CompensatedSum<double> even, odd;
  int nonzero = 0;
  for (Eigen::Index n = 0; n < profile.D.size(); ++n) {
    (n % 2 == 0 ? even : odd).add(profile.D(n));
    if (profile.D(n) > 0.0) ++nonzero;
  }
  const double total = even.value() + odd.value();
  if (nonzero >= 2 && std::min(even.value(), odd.value()) <= 1e-9 * total)
    throw EnvelopeError("profile is carried by a single shell parity; use even_envelope");
  return sampled(profile.D, phi0, 1, profile.w_minus1_sq);
}

EnvelopeFn even_envelope(const DressednessProfile& profile, const VecX& phi0) {
  check_lengths(profile, phi0);
  const Eigen::Index m = (profile.D.size() + 1) / 2;
  VecX D(m), phi(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    D(i) = profile.D(2 * i);
    phi(i) = phi0(2 * i);
  }
  return sampled(D, phi, 2, profile.w_minus1_sq);
}

double stationary_point(int k, double tau) {
  if (k == 0) throw DomainError("no stationary point for k = 0: the phase is stationary everywhere");
  if (!(tau > 0.0)) throw DomainError("stationary point needs tau > 0");
  const double x = tau / (kTwoPi * k);
  return x * x - 1.0;
}

namespace {

// Stationary-phase value of int dn D(n) cos(phi(n) - 2 tau sqrt(s n + 1)) e^{2 pi i k n},
// summed with its k -> -k partner.
double stationary_term(int k, double tau, const EnvelopeFn& env, int s) {
  if (k == 0) throw DomainError("revival terms are undefined for k = 0");
  if (k < 0 || !(tau > 0.0)) return 0.0;
  const double kk = static_cast<double>(k);
  const double x = s * tau / (kTwoPi * kk);
  const double n_k = (x * x - 1.0) / s;
  if (n_k < env.n_lo || n_k > env.n_hi) return 0.0;
  const double amp = tau / kPi * std::sqrt(s / (2.0 * kk * kk * kk));
  // Carrier s tau^2 / (2 pi k) plus the constant 2 pi k / s, reduced mod 2 pi.
  double carrier = product_mod_two_pi(tau, s * tau / (kTwoPi * kk));
  if (s == 2 && k % 2 != 0) carrier = wrap_angle(carrier + kPi);
  const double ph = kPi / 4.0 - carrier;
  return amp * (env.d1(n_k) * std::cos(ph) - env.d2(n_k) * std::sin(ph));
}

}  // namespace

double revival_term(int k, double tau, const EnvelopeFn& env) {
  if (env.stride != 1) throw DomainError("revival_term needs a standard (stride 1) envelope");
  return stationary_term(k, tau, env, 1);
}

double revival_term_eo(int k, double tau, const EnvelopeFn& env_even) {
  if (env_even.stride != 2) throw DomainError("revival_term_eo needs an even-shell envelope");
  return stationary_term(k, tau, env_even, 2);
}

double collapse_term(double tau, const EnvelopeFn& env, double w_minus1_sq, double D0, double phi00) {
  const double boundary = 0.5 * D0 * std::cos(phi00 - product_mod_two_pi(2.0, tau)) - w_minus1_sq;
  if (!(env.sigma > 0.0)) {
    // Single-point or empty envelope: the integral has no extent.
    return boundary;
  }
  const double s = env.stride;
  const double lo = std::max(env.n_lo, env.mean - 12.0 * env.sigma);
  const double hi = std::min(env.n_hi, env.mean + 12.0 * env.sigma);
  if (!(hi > lo)) return boundary;

  auto f = [&](double n) {
    const double arg = product_mod_two_pi(2.0 * tau, std::sqrt(s * n + 1.0));
    return env.d1(n) * std::cos(arg) + env.d2(n) * std::sin(arg);
  };
  QuadratureOptions opts;
  const double turns = 2.0 * tau * (std::sqrt(s * hi + 1.0) - std::sqrt(s * lo + 1.0)) / kTwoPi;
  opts.initial_intervals = std::max(8, static_cast<int>(std::ceil(2.0 * turns)));
  const QuadratureResult r = integrate_adaptive(f, lo, hi, opts);
  if (!r.converged) throw QuadratureError("collapse integral did not converge", r.error);
  return boundary + r.value;
}

double approx_inversion(double tau, const EnvelopeFn& env, int k_max) {
  if (k_max < 1) throw DomainError("k_max must be at least 1");
  CompensatedSum<double> acc;
  acc.add(collapse_term(tau, env, env.w_minus1_sq, env.D(0.0), env.phi0(0.0)));
  for (int k = 1; k <= k_max; ++k) {
    acc.add(stationary_term(k, tau, env, env.stride));
    acc.add(stationary_term(-k, tau, env, env.stride));
  }
  return acc.value();
}

ValidityReport validity(int k, const DressednessProfile& profile) {
  if (k == 0) throw DomainError("validity is undefined for k = 0");
  const double ak = std::abs(static_cast<double>(k));
  ValidityReport r;
  r.k = k;
  r.tau_min = 2.0 * (std::sqrt(kPi * ak) + std::sqrt(kTwoPi * ak + 4.0 * kPi * kPi * ak * ak));
  const double x = r.tau_min / (kTwoPi * ak);
  r.n_bound = x * x;

  const double M = compensated_sum(profile.D);
  if (M > 0.0) {
    CompensatedSum<double> above;
    for (Eigen::Index n = profile.D.size() - 1; n >= 0; --n) {
      above.add(profile.D(n));
      if (above.value() >= 0.99 * M) {
        r.dominant_n = static_cast<int>(n);
        break;
      }
    }
    r.condition_b_ok = r.dominant_n + 1 > r.n_bound;
  }
  return r;
}

}  // namespace jcm
