#pragma once

#include <functional>
#include <variant>

#include "jcm/dressed.hpp"

namespace jcm {

struct FresnelPair {
  double C = 0.0;
  double S = 0.0;
};

/// C(x) = sqrt(2/pi) int_0^x cos(y^2) dy and the matching S(x). Odd in x.
FresnelPair fresnel(double x);

/// Leading large-x form: C ~ 1/2 + sin(x^2)/(x sqrt(2 pi)), S ~ 1/2 - cos(x^2)/(x sqrt(2 pi)).
FresnelPair fresnel_asymptotic(double x);

/// Continuous extension of a dressedness profile over the shell index.
///
/// The envelope is carried as the pair d1 = D cos(phi_0), d2 = D sin(phi_0)
/// rather than (D, phi_0): both components are smooth through the points
/// where D vanishes and phi_0 jumps by pi. With stride 2 the index is the
/// even-shell number m = n/2.
struct EnvelopeFn {
  std::function<double(double)> d1;
  std::function<double(double)> d2;
  double n_lo = 0.0;
  double n_hi = 0.0;
  int stride = 1;
  double mean = 0.0;   // D-weighted mean index
  double sigma = 0.0;  // D-weighted spread
  double w_minus1_sq = 0.0;

  double D(double n) const { return std::hypot(d1(n), d2(n)); }
  double phi0(double n) const;
};

/// Monotone cubic through the integer samples of D cos(phi) and D sin(phi).
struct SampledEnvelope {};
/// Poisson factors of the ZZ closed form continued through lgamma.
struct LogGammaZZ {
  Complex alpha;
  double gamma = 0.0;
  double xi = 0.0;
};
/// Same, with P_n replaced by a normal density of mean and variance |alpha|^2.
struct GaussianZZ {
  Complex alpha;
  double gamma = 0.0;
  double xi = 0.0;
};
using EnvelopeMode = std::variant<SampledEnvelope, LogGammaZZ, GaussianZZ>;

/// Throws EnvelopeError for parity-structured profiles (all weight on even or
/// on odd shells); those need even_envelope.
EnvelopeFn interp_envelope(const DressednessProfile& profile, const VecX& phi0,
                           const EnvelopeMode& mode = SampledEnvelope{});

/// Envelope over the even shells renumbered by m = n/2, for even-odd states.
EnvelopeFn even_envelope(const DressednessProfile& profile, const VecX& phi0);

/// n_k = tau^2 / (4 pi^2 k^2) - 1.
double stationary_point(int k, double tau);

/// k-th stationary-phase term of the inversion, standard spectrum. The full
/// real contribution of the pair (k, -k) is returned for k > 0; k < 0 gives 0.
/// Zero when the stationary point falls outside the envelope support.
double revival_term(int k, double tau, const EnvelopeFn& env);

/// Same for an even-shell envelope (stride 2); the revivals come twice as often.
double revival_term_eo(int k, double tau, const EnvelopeFn& env_even);

/// tau_0 + omega_0: the boundary term and the k = 0 Poisson integral, which
/// together describe the initial collapse. Throws QuadratureError if the
/// integral does not reach its tolerance.
double collapse_term(double tau, const EnvelopeFn& env, double w_minus1_sq, double D0, double phi00);

/// collapse_term plus revival terms k = +-1 .. +-k_max; uses revival_term_eo
/// when env.stride == 2.
double approx_inversion(double tau, const EnvelopeFn& env, int k_max = 6);

struct ValidityReport {
  int k = 1;
  double tau_min = 0.0;  // 2(sqrt(pi|k|) + sqrt(2 pi |k| + 4 pi^2 k^2))
  double n_bound = 0.0;  // stationary point n_k + 1 at tau_min
  int dominant_n = 0;    // lower edge of the top 99% of the D mass
  bool condition_b_ok = false;
};

ValidityReport validity(int k, const DressednessProfile& profile);

}  // namespace jcm
