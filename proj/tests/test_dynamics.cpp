#include <doctest.h>

#include <cmath>
#include <random>

#include "jcm/dynamics.hpp"
#include "jcm/numeric.hpp"
#include "support.hpp"

using namespace jcm;

namespace {
const ModelParams kDefault;

JointState excited_coherent(double alpha) { return product_state({1.0, 0.0}, coherent_field(alpha, kDefault)); }

JointState single(bool excited, int n, int n_max = 4) {
  JointState s;
  s.a = VecXc::Zero(n_max + 1);
  s.b = VecXc::Zero(n_max + 1);
  (excited ? s.a : s.b)(n) = 1.0;
  return s;
}

// Partial trace of the bare state over the field.
AtomDensity traced(const JointState& s) {
  AtomDensity r;
  r.rho_ee = s.a.squaredNorm();
  r.rho_eg = s.b.dot(s.a);  // sum conj(b_n) a_n
  return r;
}
}  // namespace

TEST_CASE("time grids") {
  const TimeGrid g = TimeGrid::uniform(100.0, 4000);
  CHECK(g.size() == 4000);
  CHECK(g[0] == 0.0);
  CHECK(g[3999] == 100.0);
  CHECK(TimeGrid::uniform(5.0, 1).size() == 1);
  CHECK_THROWS_AS(TimeGrid(VecX::LinSpaced(3, 1.0, 0.0)), DomainError);
  CHECK_THROWS_AS(TimeGrid(VecX::Constant(2, 1.0)), DomainError);
  VecX bad(2);
  bad << 0.0, NAN;
  CHECK_THROWS_AS(TimeGrid{bad}, DomainError);
}

TEST_CASE("Rabi frequencies") {
  CHECK(rabi_frequency(0) == 2.0);
  CHECK(rabi_frequency(3) == 4.0);
  CHECK(rabi_frequency(48) == 14.0);
  CHECK_THROWS_AS(rabi_frequency(-1), DomainError);
}

TEST_CASE("precession") {
  std::mt19937_64 rng(3);
  const DressedCoordinates c = to_dressed(testing::random_state(rng, 12));
  const DressedCoordinates same = evolve(c, 0.0);
  CHECK((same.phi - c.phi).norm() == 0.0);
  CHECK((same.chi - c.chi).norm() == 0.0);

  for (int n : {0, 4, 11}) {
    const DressedCoordinates turned = evolve(c, kPi / std::sqrt(n + 1.0));
    double d = std::abs(turned.phi(n) - c.phi(n));
    CHECK(std::min(d, kTwoPi - d) < 1e-12);
    CHECK(turned.w(n) == c.w(n));
    CHECK(turned.theta(n) == c.theta(n));
  }

  const JointState s = excited_coherent(7.0);
  const JointState a = from_dressed(evolve(to_dressed(s), 1.0));
  const JointState b = evolve_bare(s, 1.0);
  CHECK((a.a - b.a).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((a.b - b.b).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("inversion examples") {
  const DressedCoordinates e0 = to_dressed(single(true, 0));
  for (double t : {0.0, 0.3, 7.1, 99.0}) CHECK(inversion_dressed(e0, t) == doctest::Approx(std::cos(2 * t)));
  CHECK(inversion_bare(single(false, 0), 12.3) == -1.0);
  CHECK(inversion_bare(single(true, 0), 0.5 * kPi) == doctest::Approx(-1.0));

  const JointState trap = trapping_state(0.6, {}, kDefault);
  const DressedCoordinates tc = to_dressed(trap);
  for (double t : {0.0, 5.0, 50.0, 150.0}) {
    CHECK(inversion_dressed(tc, t) == doctest::Approx(-0.64 / 1.36).epsilon(1e-12));
    CHECK(inversion_bare(trap, t) == doctest::Approx(-0.64 / 1.36).epsilon(1e-10));
  }

  DressedCoordinates flat = tc;
  flat.theta.setZero();
  CHECK(inversion_dressed(flat, 3.0) == doctest::Approx(-flat.w_minus1 * flat.w_minus1));

  std::mt19937_64 rng(9);
  const JointState r = testing::random_state(rng, 20);
  CHECK(std::abs(inversion_bare(r, 3.7) - inversion_dressed(to_dressed(r), 3.7)) < 1e-10);
}

TEST_CASE("properties on random states") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> ut(0.0, 100.0);
  for (int trial = 0; trial < 30; ++trial) {
    const JointState s = testing::random_state(rng, 2 + trial);
    const DressedCoordinates c = to_dressed(s);
    const DressednessProfile p = dressedness_profile(c);
    const double top = std::norm(c.a_top);
    for (int k = 0; k < 10; ++k) {
      const double t = ut(rng);
      const JointState e = evolve_bare(s, t);
      CHECK(std::abs(e.norm_sq() - 1.0) < 1e-12);
      const double sz = inversion_dressed(c, t);
      CHECK(std::abs(inversion_bare(s, t) - sz) < 1e-10);
      CHECK(std::abs(sz + p.w_minus1_sq - top) <= p.M + 1e-9);

      const AtomDensity rho = atom_density(c, t);
      CHECK(std::abs(rho.sigma_z() - sz) < 1e-12);
      const AtomDensity oracle = traced(e);
      CHECK(std::abs(rho.rho_ee - oracle.rho_ee) < 1e-12);
      CHECK(std::abs(rho.rho_eg - oracle.rho_eg) < 1e-12);
      CHECK(std::abs(atom_density_bare(e).rho_eg - oracle.rho_eg) < 1e-14);
    }
  }
}

TEST_CASE("atomic density examples") {
  JointState plus = single(true, 2);
  plus.a(2) = plus.b(3) = 1.0 / std::sqrt(2.0);
  const AtomDensity r = atom_density(to_dressed(plus), 1.3);
  CHECK(r.rho_ee == doctest::Approx(0.5));
  CHECK(std::abs(r.rho_eg) < 1e-15);

  const AtomDensity e = atom_density(to_dressed(excited_coherent(7.0)), 0.0);
  CHECK(e.rho_ee == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(e.rho_eg) < 1e-12);

  const JointState eo = eo_state(7.0, kPi / 4, 0.0, kDefault);
  const AtomDensity d = atom_density(to_dressed(eo), 2.0);
  CHECK(std::abs(d.rho_eg) < 1e-12);
  CHECK(std::abs(traced(evolve_bare(eo, 2.0)).rho_eg) < 1e-12);
}

TEST_CASE("entropy") {
  CHECK(entropy({0.5, 0.0}) == doctest::Approx(std::log(2.0)));
  CHECK(entropy({1.0, 0.0}) == 0.0);
  CHECK(entropy({0.5 * (1 - 0.01), 0.0}) == doctest::Approx(entropy_floor(0.01)).epsilon(1e-14));
  CHECK(entropy({0.5, Complex(0.5, 0.0)}) == doctest::Approx(0.0).epsilon(1e-7));
  CHECK_THROWS_AS(entropy({0.5, Complex(0.6, 0.0)}), DomainError);

  // Even-odd states never drop below the floor set by M.
  const JointState eo = eo_state(7.0, kPi / 4, 0.0, kDefault);
  const DressedCoordinates c = to_dressed(eo);
  const double floor = entropy_floor(dressedness_profile(c).M);
  for (double t = 0.0; t < 100.0; t += 0.37) CHECK(entropy(atom_density(c, t)) >= floor - 1e-9);
}

TEST_CASE("trapping never holds population inverted") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> ur(-0.9, 0.9);
  for (int trial = 0; trial < 20; ++trial) {
    const Complex z(ur(rng), ur(rng) * 0.4);
    std::vector<int> signs(300);
    for (int& j : signs) j = (rng() & 1) ? 1 : -1;
    const DressedCoordinates c = to_dressed(trapping_state(z, signs, kDefault));
    CHECK(inversion_dressed(c, 17.0) <= 0.0);
  }
}

TEST_CASE("series") {
  const JointState s = excited_coherent(7.0);
  const InversionSeries a = series(s, TimeGrid::uniform(100.0, 4000));
  const InversionSeries b = series(s, TimeGrid::uniform(100.0, 4000));
  CHECK(a.label == "exact-dressed");
  CHECK((a.sigma_z.array() == b.sigma_z.array()).all());
  CHECK(a.sigma_z.cwiseAbs().maxCoeff() <= 1.0 + 1e-9);

  // Largest |sigma_z| past the collapse sits at the first revival near 2 pi sqrt(50).
  Eigen::Index peak = 0;
  double best = 0.0;
  for (Eigen::Index i = 0; i < a.grid.size(); ++i)
    if (a.grid[i] > 25.0 && a.grid[i] < 70.0 && std::abs(a.sigma_z(i)) > best) {
      best = std::abs(a.sigma_z(i));
      peak = i;
    }
  CHECK(std::abs(a.grid[peak] - kTwoPi * std::sqrt(50.0)) < 0.05 * kTwoPi * std::sqrt(50.0));

  const InversionSeries bare = series(s, TimeGrid::uniform(100.0, 50), SeriesRoute::exact_bare);
  CHECK(bare.label == "exact-bare");
  CHECK(series(s, TimeGrid::uniform(0.0, 1)).sigma_z(0) == doctest::Approx(1.0));
}
