#pragma once

#include "jcm/state.hpp"

namespace jcm {

/// Dressed-state coordinates of a pure state.
///
/// Shell n (0 <= n < shells()) is the two-dimensional span of
/// |n+-> = (|e,n> +- |g,n+1>)/sqrt(2), with
///   <n+|Psi> = w_n e^{i chi_n} cos(theta_n/2),
///   <n-|Psi> = w_n e^{i(chi_n - phi_n)} sin(theta_n/2).
/// The ground level |g,0> carries weight w_minus1 and phase b0_phase. A state
/// with n_max = N maps to N shells; an amplitude on |e,N> (whose partner
/// |g,N+1> lies outside the basis) is kept verbatim in `a_top`.
struct DressedCoordinates {
  double w_minus1 = 0.0;
  double b0_phase = 0.0;
  VecX w;
  VecX theta;
  VecX chi;
  VecX phi;
  Complex a_top{0.0, 0.0};

  int shells() const { return static_cast<int>(w.size()); }
  double weight_sum() const { return w_minus1 * w_minus1 + w.squaredNorm() + std::norm(a_top); }
};

/// D_n = w_n^2 sin(theta_n) and the trapping bound M = sum_n D_n.
struct DressednessProfile {
  VecX D;
  double M = 0.0;
  double w_minus1_sq = 0.0;
};

/// Weights below this are treated as absent: all angles of the shell are 0.
inline constexpr double kDegenerateWeight = 1e-15;

DressedCoordinates to_dressed(const JointState& state);
JointState from_dressed(const DressedCoordinates& coords);

DressednessProfile dressedness_profile(const DressedCoordinates& coords);

/// Closed-form coordinates of [cos(gamma)|e> + e^{-i xi} sin(gamma)|g>] (x) |alpha>,
/// with as many shells as product_state(zz_atom, coherent_field(alpha, params)).
DressedCoordinates zz_coords(Complex alpha, double gamma, double xi, const ModelParams& params);

/// Weighted dressedness of the same family directly from the Poisson factors
/// Q1(n) = P_n cos^2(gamma), Q2(n) = P_{n+1} sin^2(gamma).
DressednessProfile zz_profile(Complex alpha, double gamma, double xi, const ModelParams& params = {});

/// Where the most-dressed shell of a ZZ state sits.
struct TrappingDiagnostics {
  int n_min = 0;                  // argmin of sin(theta_n) over the truncated range
  double n_min_estimate = 0.0;    // |alpha|^2 tan^2(gamma) - 1
  double sin_theta_min = 0.0;
  int n_max_weight = 0;           // argmax of w_n^2
};
TrappingDiagnostics zz_diagnostics(const DressedCoordinates& coords, Complex alpha, double gamma);

/// Lower bound on the atomic entropy of even-odd states given the bound M.
double entropy_floor(double M);

}  // namespace jcm
