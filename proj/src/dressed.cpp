#include "jcm/dressed.hpp"

#include <cmath>

#include "jcm/numeric.hpp"

namespace jcm {

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

// Fills shell n from its dressed amplitudes u = <n+|Psi>, v = <n-|Psi>.
void set_shell(DressedCoordinates& c, Eigen::Index n, Complex u, Complex v) {
  const double au = std::abs(u), av = std::abs(v);
  const double w = std::hypot(au, av);
  if (w < kDegenerateWeight) {
    c.w(n) = c.theta(n) = c.chi(n) = c.phi(n) = 0.0;
    return;
  }
  c.w(n) = w;
  c.theta(n) = 2.0 * std::atan2(av, au);
  if (au > 0.0) {
    c.chi(n) = wrap_angle(std::arg(u));
    c.phi(n) = av > 0.0 ? wrap_angle(std::arg(u) - std::arg(v)) : 0.0;
  } else {
    c.chi(n) = wrap_angle(std::arg(v));
    c.phi(n) = 0.0;
  }
}

DressedCoordinates with_shells(int shells) {
  DressedCoordinates c;
  c.w = VecX::Zero(shells);
  c.theta = VecX::Zero(shells);
  c.chi = VecX::Zero(shells);
  c.phi = VecX::Zero(shells);
  return c;
}
}  // namespace

DressedCoordinates to_dressed(const JointState& state) {
  const int N = state.n_max();
  DressedCoordinates c = with_shells(N);
  c.w_minus1 = std::abs(state.b(0));
  c.b0_phase = c.w_minus1 > 0.0 ? wrap_angle(std::arg(state.b(0))) : 0.0;
  for (int n = 0; n < N; ++n) {
    const Complex u = (state.a(n) + state.b(n + 1)) * kInvSqrt2;
    const Complex v = (state.a(n) - state.b(n + 1)) * kInvSqrt2;
    set_shell(c, n, u, v);
  }
  c.a_top = state.a(N);
  return c;
}

JointState from_dressed(const DressedCoordinates& coords) {
  const int N = coords.shells();
  JointState s;
  s.a = VecXc::Zero(N + 1);
  s.b = VecXc::Zero(N + 1);
  s.b(0) = std::polar(coords.w_minus1, coords.b0_phase);
  for (int n = 0; n < N; ++n) {
    const double half = 0.5 * coords.theta(n);
    const Complex u = std::polar(coords.w(n) * std::cos(half), coords.chi(n));
    const Complex v = std::polar(coords.w(n) * std::sin(half), coords.chi(n) - coords.phi(n));
    s.a(n) = (u + v) * kInvSqrt2;
    s.b(n + 1) = (u - v) * kInvSqrt2;
  }
  s.a(N) = coords.a_top;
  return s;
}

DressednessProfile dressedness_profile(const DressedCoordinates& coords) {
  DressednessProfile p;
  p.D = coords.w.array().square() * coords.theta.array().sin();
  p.D = p.D.cwiseMax(0.0);
  p.M = compensated_sum(p.D);
  p.w_minus1_sq = coords.w_minus1 * coords.w_minus1;
  return p;
}

namespace {

struct ZzShell {
  double q1, q2, root;  // Q1, Q2, sqrt(Q1 Q2)
};

ZzShell zz_shell(int n, double mean, double cg, double sg) {
  const double lp1 = log_poisson(n, mean);
  const double lp2 = log_poisson(n + 1, mean);
  ZzShell s;
  s.q1 = std::exp(lp1) * cg * cg;
  s.q2 = std::exp(lp2) * sg * sg;
  s.root = std::exp(0.5 * (lp1 + lp2)) * cg * sg;
  return s;
}

int zz_shell_count(Complex alpha, const ModelParams& params) {
  return coherent_field(alpha, params).n_max() + 1;
}

}  // namespace

DressedCoordinates zz_coords(Complex alpha, double gamma, double xi, const ModelParams& params) {
  check_zz_angles(gamma, xi);
  const double mean = std::norm(alpha);
  const double nu = std::arg(alpha);
  const double delta = nu - xi;
  const double cg = std::cos(gamma), sg = std::sin(gamma);
  const Complex rel = std::polar(1.0, delta);

  const int S = zz_shell_count(alpha, params);
  DressedCoordinates c = with_shells(S);
  c.w_minus1 = sg * std::exp(-0.5 * mean);
  c.b0_phase = c.w_minus1 > 0.0 ? wrap_angle(-xi) : 0.0;

  for (int n = 0; n < S; ++n) {
    const ZzShell q = zz_shell(n, mean, cg, sg);
    const double w2 = q.q1 + q.q2;
    const double w = std::sqrt(w2);
    if (w < kDegenerateWeight) continue;
    // |a_n^2 - b_{n+1}^2| written as a sum of squares to avoid cancellation.
    const double d1 = q.q1 - q.q2;
    const double d2 = 2.0 * q.root * std::sin(delta);
    const double D = std::hypot(d1, d2);
    c.w(n) = w;
    c.theta(n) = std::atan2(D, 2.0 * q.root * std::cos(delta));
    c.phi(n) = D > 0.0 ? wrap_angle(std::atan2(d2, d1)) : 0.0;

    const double pn = std::exp(0.5 * log_poisson(n, mean));
    const double pn1 = std::exp(0.5 * log_poisson(n + 1, mean));
    const Complex u_rel = cg * pn + rel * (sg * pn1);
    const Complex v_rel = cg * pn - rel * (sg * pn1);
    const double base = product_mod_two_pi(static_cast<double>(n), nu);
    c.chi(n) = std::abs(u_rel) > 0.0 ? wrap_angle(base + std::arg(u_rel)) : wrap_angle(base + std::arg(v_rel));
  }
  return c;
}

DressednessProfile zz_profile(Complex alpha, double gamma, double xi, const ModelParams& params) {
  check_zz_angles(gamma, xi);
  const double mean = std::norm(alpha);
  const double delta = std::arg(alpha) - xi;
  const double cg = std::cos(gamma), sg = std::sin(gamma);
  const int S = zz_shell_count(alpha, params);

  DressednessProfile p;
  p.D = VecX::Zero(S);
  const double s2 = std::sin(delta) * std::sin(delta);
  for (int n = 0; n < S; ++n) {
    const ZzShell q = zz_shell(n, mean, cg, sg);
    p.D(n) = std::sqrt((q.q1 - q.q2) * (q.q1 - q.q2) + 4.0 * q.root * q.root * s2);
  }
  p.M = compensated_sum(p.D);
  p.w_minus1_sq = sg * sg * std::exp(-mean);
  return p;
}

TrappingDiagnostics zz_diagnostics(const DressedCoordinates& coords, Complex alpha, double gamma) {
  TrappingDiagnostics d;
  d.n_min_estimate = std::norm(alpha) * std::tan(gamma) * std::tan(gamma) - 1.0;
  d.sin_theta_min = 2.0;
  double best_w = -1.0;
  for (int n = 0; n < coords.shells(); ++n) {
    if (coords.w(n) < kDegenerateWeight) continue;
    const double s = std::sin(coords.theta(n));
    if (s < d.sin_theta_min) {
      d.sin_theta_min = s;
      d.n_min = n;
    }
    if (coords.w(n) > best_w) {
      best_w = coords.w(n);
      d.n_max_weight = n;
    }
  }
  return d;
}

double entropy_floor(double M) {
  if (!(M >= 0.0 && M <= 1.0)) throw DomainError("entropy_floor requires M in [0, 1]");
  return -xlogx(0.5 * (1.0 - M)) - xlogx(0.5 * (1.0 + M));
}

}  // namespace jcm
