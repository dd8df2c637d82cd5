#include "jcm/dynamics.hpp"

#include <cmath>

#include "jcm/numeric.hpp"

namespace jcm {

TimeGrid::TimeGrid(VecX tau) : tau_(std::move(tau)) {
  for (Eigen::Index i = 0; i < tau_.size(); ++i) {
    if (!std::isfinite(tau_(i)) || tau_(i) < 0.0) throw DomainError("time grid values must be finite and >= 0");
    if (i > 0 && !(tau_(i) > tau_(i - 1))) throw DomainError("time grid must be strictly increasing");
  }
}

TimeGrid TimeGrid::uniform(double tau_max, int samples) { return linspace(0.0, tau_max, samples); }

TimeGrid TimeGrid::linspace(double lo, double hi, int samples) {
  if (samples < 1) throw DomainError("time grid needs at least one sample");
  if (samples == 1) return TimeGrid(VecX::Constant(1, lo));
  if (!(hi > lo)) throw DomainError("time grid upper bound must exceed the lower bound");
  VecX t(samples);
  const double step = (hi - lo) / (samples - 1);
  for (int i = 0; i < samples; ++i) t(i) = lo + step * i;
  t(samples - 1) = hi;
  return TimeGrid(std::move(t));
}

std::string to_string(SeriesRoute route) {
  return route == SeriesRoute::exact_dressed ? "exact-dressed" : "exact-bare";
}

double rabi_frequency(int n) {
  if (n < 0) throw DomainError("Rabi frequency needs n >= 0");
  return 2.0 * std::sqrt(static_cast<double>(n) + 1.0);
}

DressedCoordinates evolve(const DressedCoordinates& coords, double tau) {
  DressedCoordinates out = coords;
  for (int n = 0; n < coords.shells(); ++n) {
    if (coords.w(n) < kDegenerateWeight) continue;
    const double half_turn = product_mod_two_pi(std::sqrt(n + 1.0), tau);
    const double turn = product_mod_two_pi(rabi_frequency(n), tau);
    out.chi(n) = wrap_angle(coords.chi(n) - half_turn);
    out.phi(n) = wrap_angle(coords.phi(n) - turn);
  }
  return out;
}

JointState evolve_bare(const JointState& state, double tau) {
  JointState out = state;
  const int N = state.n_max();
  const Complex i(0.0, 1.0);
  for (int n = 0; n < N; ++n) {
    const double angle = product_mod_two_pi(std::sqrt(n + 1.0), tau);
    const double c = std::cos(angle), s = std::sin(angle);
    const Complex a = state.a(n), b = state.b(n + 1);
    out.a(n) = a * c - i * b * s;
    out.b(n + 1) = b * c - i * a * s;
  }
  return out;
}

double inversion_dressed(const DressedCoordinates& coords0, double tau) {
  CompensatedSum<double> acc;
  acc.add(-coords0.w_minus1 * coords0.w_minus1);
  acc.add(std::norm(coords0.a_top));
  for (int n = 0; n < coords0.shells(); ++n) {
    const double D = coords0.w(n) * coords0.w(n) * std::sin(coords0.theta(n));
    if (D == 0.0) continue;
    const double phase = coords0.phi(n) - product_mod_two_pi(rabi_frequency(n), tau);
    acc.add(D * std::cos(phase));
  }
  return acc.value();
}

double inversion_bare(const JointState& state0, double tau) {
  const JointState s = evolve_bare(state0, tau);
  CompensatedSum<double> acc;
  for (int n = 0; n <= s.n_max(); ++n) {
    acc.add(std::norm(s.a(n)));
    acc.add(-std::norm(s.b(n)));
  }
  return acc.value();
}

AtomDensity atom_density(const DressedCoordinates& coords0, double tau) {
  const DressedCoordinates c = evolve(coords0, tau);
  const int N = c.shells();
  const double top = std::norm(c.a_top);

  CompensatedSum<double> ee;
  ee.add(0.5 * (1.0 - c.w_minus1 * c.w_minus1 - top) + top);
  for (int n = 0; n < N; ++n) ee.add(0.5 * c.w(n) * c.w(n) * std::sin(c.theta(n)) * std::cos(c.phi(n)));

  // e-side and g-side projections of shell n, without the w_n e^{i chi_n} factor.
  auto e_side = [&c](int n) {
    return std::cos(0.5 * c.theta(n)) + std::polar(std::sin(0.5 * c.theta(n)), -c.phi(n));
  };
  auto g_side = [&c](int n) {
    return std::cos(0.5 * c.theta(n)) - std::polar(std::sin(0.5 * c.theta(n)), c.phi(n));
  };

  CompensatedSum<double> eg_re, eg_im;
  auto add = [&](Complex z) {
    eg_re.add(z.real());
    eg_im.add(z.imag());
  };
  if (N > 0) {
    add(c.w_minus1 * c.w(0) / std::sqrt(2.0) * std::polar(1.0, c.chi(0) - c.b0_phase) * e_side(0));
  }
  for (int n = 0; n + 1 < N; ++n) {
    add(0.5 * c.w(n) * c.w(n + 1) * std::polar(1.0, c.chi(n + 1) - c.chi(n)) * e_side(n + 1) *
        g_side(n));
  }
  if (N > 0 && top > 0.0) {
    // |e,N> pairs with |g,N> from the last shell.
    const Complex bN = c.w(N - 1) * std::polar(1.0, c.chi(N - 1)) / std::sqrt(2.0) *
                       (std::cos(0.5 * c.theta(N - 1)) -
                        std::polar(std::sin(0.5 * c.theta(N - 1)), -c.phi(N - 1)));
    add(c.a_top * std::conj(bN));
  }
  return {ee.value(), Complex(eg_re.value(), eg_im.value())};
}

AtomDensity atom_density_bare(const JointState& state) {
  CompensatedSum<double> ee, re, im;
  for (int n = 0; n <= state.n_max(); ++n) {
    ee.add(std::norm(state.a(n)));
    const Complex z = state.a(n) * std::conj(state.b(n));
    re.add(z.real());
    im.add(z.imag());
  }
  return {ee.value(), Complex(re.value(), im.value())};
}

double entropy(const AtomDensity& rho) {
  const double ee = rho.rho_ee;
  const double coh = std::norm(rho.rho_eg);
  if (!(ee >= -1e-12 && ee <= 1.0 + 1e-12) || coh > ee * (1.0 - ee) + 1e-12)
    throw DomainError("atomic density matrix is not positive");
  const double r = std::sqrt((ee - 0.5) * (ee - 0.5) + coh);
  const double hi = std::min(1.0, 0.5 + r);
  const double lo = std::max(0.0, 0.5 - r);
  return -xlogx(hi) - xlogx(lo);
}

InversionSeries series(const JointState& state0, const TimeGrid& grid, SeriesRoute route) {
  VecX sz(grid.size());
  if (route == SeriesRoute::exact_dressed) {
    const DressedCoordinates coords = to_dressed(state0);
    for (Eigen::Index i = 0; i < grid.size(); ++i) sz(i) = inversion_dressed(coords, grid[i]);
  } else {
    for (Eigen::Index i = 0; i < grid.size(); ++i) sz(i) = inversion_bare(state0, grid[i]);
  }
  return {grid, std::move(sz), to_string(route)};
}

}  // namespace jcm
