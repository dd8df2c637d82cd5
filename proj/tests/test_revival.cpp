#include <doctest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <random>

#include "jcm/dynamics.hpp"
#include "jcm/numeric.hpp"
#include "jcm/revival.hpp"

using namespace jcm;
using boost::math::quadrature::gauss_kronrod;

namespace {
const ModelParams kDefault;

double gk(const std::function<double(double)>& f, double a, double b) {
  return gauss_kronrod<double, 61>::integrate(f, a, b, 15, 1e-13);
}

FresnelPair fresnel_oracle(double x) {
  const double s = std::sqrt(2.0 / kPi);
  return {s * gk([](double y) { return std::cos(y * y); }, 0.0, x),
          s * gk([](double y) { return std::sin(y * y); }, 0.0, x)};
}

struct Case {
  JointState state;
  DressedCoordinates coords;
  DressednessProfile profile;
};

Case make(const JointState& s) {
  Case c{s, to_dressed(s), {}};
  c.profile = dressedness_profile(c.coords);
  return c;
}

Case zz(double gamma, double delta) {
  return make(product_state(zz_atom(gamma, wrap_angle(-delta)), coherent_field(7.0, kDefault)));
}

// tau of the largest |f| on a dense grid over [lo, hi].
double argmax_abs(const std::function<double(double)>& f, double lo, double hi, double step = 0.005) {
  double best = -1.0, at = lo;
  for (double t = lo; t <= hi; t += step) {
    const double v = std::abs(f(t));
    if (v > best) {
      best = v;
      at = t;
    }
  }
  return at;
}

double max_abs(const std::function<double(double)>& f, double lo, double hi, double step = 0.01) {
  double best = 0.0;
  for (double t = lo; t <= hi; t += step) best = std::max(best, std::abs(f(t)));
  return best;
}
}  // namespace

TEST_CASE("Fresnel integrals against quadrature") {
  const FresnelPair z = fresnel(0.0);
  CHECK(z.C == 0.0);
  CHECK(z.S == 0.0);
  for (double x : {0.1, 0.5, 1.0, 1.5, 1.6, 2.0, 5.0, 10.0, 30.0}) {
    const FresnelPair a = fresnel(x), o = fresnel_oracle(x);
    CHECK(std::abs(a.C - o.C) < 1e-12);
    CHECK(std::abs(a.S - o.S) < 1e-12);
    const FresnelPair m = fresnel(-x);
    CHECK(m.C == -a.C);
    CHECK(m.S == -a.S);
  }
  const FresnelPair far = fresnel(1e4);
  CHECK(far.C == doctest::Approx(0.5).epsilon(1e-4));
  CHECK(far.S == doctest::Approx(0.5).epsilon(1e-4));

  double last = 1.0;
  for (double x : {10.0, 20.0, 40.0}) {
    const FresnelPair f = fresnel(x);
    const double dev = std::max(std::abs(f.C - 0.5), std::abs(f.S - 0.5));
    CHECK(dev < last);
    last = dev;
  }
}

TEST_CASE("Fresnel asymptotics") {
  const FresnelPair a10 = fresnel_asymptotic(10.0), f10 = fresnel(10.0);
  CHECK(std::abs(a10.C - f10.C) <= 1.0 / 100.0);
  CHECK(std::abs(a10.S - f10.S) <= 1.0 / 100.0);
  const FresnelPair a100 = fresnel_asymptotic(100.0);
  const double lead = 1.0 / (std::sqrt(kTwoPi) * 100.0);
  CHECK(std::abs(a100.C - 0.5) <= lead + 1e-4);
  CHECK(std::abs(a100.S - 0.5) <= lead + 1e-4);
  CHECK(std::abs(fresnel_asymptotic(1e8).C - 0.5) < 1e-8);
  CHECK_THROWS_AS(fresnel_asymptotic(0.0), DomainError);
}

TEST_CASE("envelope interpolation") {
  const Case e = zz(0.0, 0.0);
  const EnvelopeFn sampled = interp_envelope(e.profile, e.coords.phi);
  const EnvelopeFn lg = interp_envelope(e.profile, e.coords.phi, LogGammaZZ{7.0, 0.0, 0.0});
  for (int n = 0; n < e.profile.D.size(); ++n) {
    const double P = std::exp(log_poisson(n, 49.0));
    CHECK(std::abs(sampled.D(n) - P) < 1e-9);
    CHECK(std::abs(lg.D(n) - P) < 1e-9);
  }
  for (double n = 0.0; n < e.profile.D.size() - 1; n += 0.1) CHECK(sampled.D(n) >= 0.0);
  CHECK(sampled.mean == doctest::Approx(49.0).epsilon(1e-6));
  CHECK(sampled.sigma == doctest::Approx(7.0).epsilon(1e-6));

  // Gaussian form: Q1 - Q2 changes sign at n = |alpha|^2 - 1/2.
  const Case d = zz(kPi / 4, 0.0);
  const EnvelopeFn g = interp_envelope(d.profile, d.coords.phi, GaussianZZ{7.0, kPi / 4, 0.0});
  double lo = 40.0, hi = 56.0;
  REQUIRE(g.d1(lo) * g.d1(hi) < 0.0);
  for (int i = 0; i < 60; ++i) {
    const double mid = 0.5 * (lo + hi);
    (g.d1(lo) * g.d1(mid) <= 0.0 ? hi : lo) = mid;
  }
  CHECK(std::abs(lo - 48.5) < 0.5);

  const EnvelopeFn l = interp_envelope(d.profile, d.coords.phi, LogGammaZZ{7.0, kPi / 4, 0.0});
  double worst = 0.0;
  for (double n = 30.0; n <= 70.0; n += 0.05) worst = std::max(worst, std::abs(l.D(n) - g.D(n)));
  CHECK(worst < 0.003);

  // Sampled and analytic modes agree at the samples, including the phase.
  for (int n = 30; n <= 70; ++n) {
    CHECK(std::abs(l.d1(n) - interp_envelope(d.profile, d.coords.phi).d1(n)) < 1e-12);
  }

  const Case eo = make(eo_state(7.0, kPi / 4, 0.0, kDefault));
  CHECK_THROWS_AS(interp_envelope(eo.profile, eo.coords.phi), EnvelopeError);
  const EnvelopeFn even = even_envelope(eo.profile, eo.coords.phi);
  CHECK(even.stride == 2);
  CHECK(even.D(10) == doctest::Approx(eo.profile.D(20)));
  CHECK(even.mean == doctest::Approx(24.5).epsilon(0.02));
}

TEST_CASE("stationary points") {
  CHECK(stationary_point(1, kTwoPi * std::sqrt(50.0)) == doctest::Approx(49.0));
  CHECK(stationary_point(2, 2 * kTwoPi * std::sqrt(50.0)) == doctest::Approx(49.0));
  CHECK(stationary_point(1, kTwoPi) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK_THROWS_AS(stationary_point(0, 10.0), DomainError);
  CHECK_THROWS_AS(stationary_point(1, 0.0), DomainError);
}

TEST_CASE("revival term reduces to the ground-state coherent result") {
  // phi = pi and D(n) = P_{n+1}
  EnvelopeFn env;
  env.d1 = [](double n) { return -std::exp(log_poisson(n + 1.0, 49.0)); };
  env.d2 = [](double) { return 0.0; };
  env.n_hi = 200.0;
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> ut(18.0, 100.0);
  for (int i = 0; i < 200; ++i) {
    const double t = ut(rng);
    for (int k = 1; k <= 3; ++k) {
      const long double tl = t, kl = k, pi = 3.141592653589793238462643383279502884L;
      const long double P = std::exp(static_cast<long double>(log_poisson(static_cast<double>(tl * tl / (4 * pi * pi * kl * kl)), 49.0)));
      const long double expect = -P * tl / (pi * std::sqrt(2 * kl * kl * kl)) * std::cos(tl * tl / (2 * pi * kl) - pi / 4);
      CHECK(std::abs(revival_term(k, t, env) - static_cast<double>(expect)) < 1e-12);
    }
  }
  CHECK(revival_term(-1, 40.0, env) == 0.0);
  CHECK_THROWS_AS(revival_term(0, 40.0, env), DomainError);
}

TEST_CASE("revival terms are localized") {
  const Case z = zz(kPi / 4, kPi / 2);
  const EnvelopeFn env = interp_envelope(z.profile, z.coords.phi);
  // n_k ten spreads past the peak
  const double n_far = env.mean + 10.0 * env.sigma;
  const double t_far = kTwoPi * std::sqrt(n_far + 1.0);
  CHECK(std::abs(revival_term(1, t_far, env)) < 1e-8);
  CHECK(revival_term(1, 1.0, env) == 0.0);

  const double t1 = argmax_abs([&](double t) { return revival_term(1, t, env); }, 25.0, 70.0);
  CHECK(std::abs(t1 / (kTwoPi * std::sqrt(50.0)) - 1.0) < 0.02);

  const Case eo = make(eo_state(7.0, kPi / 4, wrap_angle(-kPi / 2), kDefault));
  const EnvelopeFn even = even_envelope(eo.profile, eo.coords.phi);
  const double te = argmax_abs([&](double t) { return revival_term_eo(1, t, even); }, 12.0, 35.0);
  CHECK(std::abs(te / (kPi * std::sqrt(50.0)) - 1.0) < 0.02);
  CHECK(te / t1 >= 0.48);
  CHECK(te / t1 <= 0.52);
  CHECK(revival_term_eo(1, 200.0, even) == 0.0);
  CHECK_THROWS_AS(revival_term_eo(1, 20.0, env), DomainError);
  CHECK_THROWS_AS(revival_term(1, 20.0, even), DomainError);
}

TEST_CASE("collapse term") {
  const Case e = make(product_state({1.0, 0.0}, coherent_field(7.0, kDefault)));
  const EnvelopeFn env = interp_envelope(e.profile, e.coords.phi);
  const double boundary0 = 0.5 * env.D(0.0) * std::cos(env.phi0(0.0));
  const double omega0 = collapse_term(0.0, env, 0.0, env.D(0.0), env.phi0(0.0)) - boundary0;
  double discrete = 0.0;
  for (int n = 0; n < e.profile.D.size(); ++n) discrete += e.profile.D(n) * std::cos(e.coords.phi(n));
  CHECK(std::abs(omega0 - discrete) < 1e-3);

  const double t = 30.0;
  const double omega30 = collapse_term(t, env, 0.0, env.D(0.0), env.phi0(0.0)) -
                         0.5 * env.D(0.0) * std::cos(env.phi0(0.0) - 2.0 * t);
  const double oracle = gk([&](double n) {
    const double a = 2.0 * t * std::sqrt(n + 1.0);
    return env.d1(n) * std::cos(a) + env.d2(n) * std::sin(a);
  }, 0.0, env.n_hi);
  CHECK(std::abs(omega30) < 0.02);
  CHECK(std::abs(omega30 - oracle) < 1e-8);

  EnvelopeFn zero;
  zero.d1 = zero.d2 = [](double) { return 0.0; };
  zero.n_hi = 50.0;
  CHECK(collapse_term(12.0, zero, 0.3, 0.0, 0.0) == doctest::Approx(-0.3));
}

TEST_CASE("approximate inversion") {
  const Case e = make(product_state({1.0, 0.0}, coherent_field(7.0, kDefault)));
  const EnvelopeFn env = interp_envelope(e.profile, e.coords.phi);
  CHECK_THROWS_AS(approx_inversion(10.0, env, 0), DomainError);

  const double t0 = 0.01;
  const double c = collapse_term(t0, env, 0.0, env.D(0.0), env.phi0(0.0));
  CHECK(std::abs(approx_inversion(t0, env, 6) - c) < 1e-8);

  // First revival window of |e>|alpha = 7>.
  const double lo = kPi * std::sqrt(50.0), hi = 3.0 * kPi * std::sqrt(50.0);
  double worst_locality = 0.0;
  for (double t = lo; t <= hi; t += 0.5)
    worst_locality = std::max(worst_locality, std::abs(approx_inversion(t, env, 3) - approx_inversion(t, env, 6)));
  CHECK(worst_locality < 1e-6);

  const double exact = max_abs([&](double t) { return inversion_dressed(e.coords, t); }, lo, hi);
  const double approx = max_abs([&](double t) { return approx_inversion(t, env, 3); }, lo, hi);
  CHECK(std::abs(approx / exact - 1.0) <= 0.15);
}

TEST_CASE("stationary phase agrees with the brute-force Poisson terms") {
  for (double delta : {kPi / 2, 0.0}) {
    const Case z = zz(kPi / 4, delta);
    const EnvelopeFn env = interp_envelope(z.profile, z.coords.phi, LogGammaZZ{7.0, kPi / 4, wrap_angle(-delta)});
    for (int k = 1; k <= 2; ++k) {
      const double c = kTwoPi * std::sqrt(50.0);
      // core of the k-th window, where the term is not negligible
      const double lo = c * k - 10.0, hi = c * k + 10.0;
      // omega_k + omega_{-k} = 2 int dn f(n) cos(2 pi k n)
      auto brute = [&](double t) {
        return 2.0 * gk([&](double n) {
          const double a = 2.0 * t * std::sqrt(n + 1.0);
          return (env.d1(n) * std::cos(a) + env.d2(n) * std::sin(a)) * std::cos(kTwoPi * k * n);
        }, 0.0, 140.0);
      };
      const double exact = max_abs(brute, lo, hi, 0.05);
      const double sp = max_abs([&](double t) { return revival_term(k, t, env); }, lo, hi, 0.05);
      CHECK(std::abs(sp / exact - 1.0) <= 0.05);
    }
  }
}

TEST_CASE("validity thresholds") {
  const ValidityReport r1 = validity(1, zz(kPi / 4, kPi / 2).profile);
  CHECK(r1.tau_min == doctest::Approx(17.07).epsilon(1e-3));
  CHECK(r1.condition_b_ok);
  CHECK(r1.dominant_n > 20);
  const ValidityReport r2 = validity(2, zz(kPi / 4, kPi / 2).profile);
  CHECK(r2.tau_min == doctest::Approx(2 * (std::sqrt(2 * kPi) + std::sqrt(4 * kPi + 16 * kPi * kPi))));
  CHECK(validity(-1, zz(kPi / 4, 0.0).profile).tau_min == r1.tau_min);
  CHECK_THROWS_AS(validity(0, zz(kPi / 4, 0.0).profile), DomainError);

  // a few photons only: the envelope sits below the bound
  const DressednessProfile few = dressedness_profile(to_dressed(product_state({1.0, 0.0}, coherent_field(1.0, kDefault))));
  CHECK_FALSE(validity(1, few).condition_b_ok);
}
