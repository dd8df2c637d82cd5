#pragma once

#include <string>

#include "jcm/dressed.hpp"

namespace jcm {

/// Strictly increasing, finite, non-negative scaled times tau = lambda t.
class TimeGrid {
 public:
  explicit TimeGrid(VecX tau);
  /// `samples` equally spaced points on [0, tau_max].
  static TimeGrid uniform(double tau_max, int samples);
  static TimeGrid linspace(double lo, double hi, int samples);

  const VecX& tau() const { return tau_; }
  Eigen::Index size() const { return tau_.size(); }
  double operator[](Eigen::Index i) const { return tau_(i); }

 private:
  VecX tau_;
};

/// Reduced atomic state [[rho_ee, rho_eg], [conj(rho_eg), 1 - rho_ee]].
struct AtomDensity {
  double rho_ee = 0.0;
  Complex rho_eg{0.0, 0.0};
  double rho_gg() const { return 1.0 - rho_ee; }
  double sigma_x() const { return 2.0 * rho_eg.real(); }
  double sigma_y() const { return -2.0 * rho_eg.imag(); }
  double sigma_z() const { return 2.0 * rho_ee - 1.0; }
};

enum class SeriesRoute { exact_dressed, exact_bare };

std::string to_string(SeriesRoute route);

struct InversionSeries {
  TimeGrid grid;
  VecX sigma_z;
  std::string label;
};

/// Omega_n / lambda = 2 sqrt(n + 1).
double rabi_frequency(int n);

/// Precession of the dressed angles; w and theta are constants of motion.
DressedCoordinates evolve(const DressedCoordinates& coords, double tau);

/// Bare-basis evolution by the exact 2x2 rotation of each (|e,n>, |g,n+1>) pair.
JointState evolve_bare(const JointState& state, double tau);

/// <sigma_z>(tau) = -w_{-1}^2 + sum_n D_n cos(phi_n(0) - Omega_n tau).
double inversion_dressed(const DressedCoordinates& coords0, double tau);

/// Same quantity from the bare amplitudes evolved by evolve_bare.
double inversion_bare(const JointState& state0, double tau);

AtomDensity atom_density(const DressedCoordinates& coords0, double tau);

/// Atomic density from bare amplitudes by partial trace over the field.
AtomDensity atom_density_bare(const JointState& state);

/// Von Neumann entropy (nats) of the reduced atomic state.
double entropy(const AtomDensity& rho);

InversionSeries series(const JointState& state0, const TimeGrid& grid,
                       SeriesRoute route = SeriesRoute::exact_dressed);

}  // namespace jcm
