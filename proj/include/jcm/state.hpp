#pragma once

#include <span>
#include <vector>

#include "jcm/types.hpp"

namespace jcm {

/// Two-level atom p|e> + q|g>.
struct AtomState {
  Complex p{1.0, 0.0};
  Complex q{0.0, 0.0};

  /// Throws DomainError unless |p|^2 + |q|^2 = 1 within 1e-12.
  static AtomState make(Complex p, Complex q);
  /// Rescales (p, q) to unit norm.
  static AtomState normalized(Complex p, Complex q);
};

/// Truncated single-mode field, c_n = <n|Phi> for n = 0..n_max.
struct FieldState {
  VecXc c;
  int n_max() const { return static_cast<int>(c.size()) - 1; }
  double norm_sq() const { return c.squaredNorm(); }
};

/// Pure atom-field state in the bare basis: a_n = <e,n|Psi>, b_n = <g,n|Psi>.
struct JointState {
  VecXc a;
  VecXc b;

  int n_max() const { return static_cast<int>(a.size()) - 1; }
  double norm_sq() const { return a.squaredNorm() + b.squaredNorm(); }
  /// Throws DomainError if the arrays disagree in length or the norm is off.
  void validate(double tol = 1e-10) const;
};

enum class Parity { even, odd };

FieldState coherent_field(Complex alpha, const ModelParams& params);

/// Field with amplitudes proportional to j(n) z^n; j(n) = +1 past the end of
/// `signs`. All +1 gives the Susskind-Glogower phase-coherent state.
FieldState phase_field(Complex z, std::span<const int> signs, const ModelParams& params);

/// Normalized |alpha> +- |-alpha> with the exact normalization.
FieldState cat_field(Complex alpha, Parity parity, const ModelParams& params);

/// |atom> (x) |field>. The joint arrays extend one level past the field so
/// that the top |e,n> keeps its |g,n+1> partner inside the basis.
JointState product_state(const AtomState& atom, const FieldState& field);

/// cos(gamma)|e>|even> + sin(gamma) e^{i xi}|g>|odd>.
JointState eo_state(Complex alpha, double gamma, double xi, const ModelParams& params);

/// Atom (z|e> + |g>)/sqrt(1+|z|^2) times phase_field(z, signs): a perfect
/// population-trapping state.
JointState trapping_state(Complex z, std::span<const int> signs, const ModelParams& params);

/// cos(gamma)|e> + e^{-i xi} sin(gamma)|g>.
AtomState zz_atom(double gamma, double xi);

void check_zz_angles(double gamma, double xi);

}  // namespace jcm
