#pragma once

#include <random>

#include "jcm/types.hpp"
#include "jcm/state.hpp"

namespace jcm::testing {

// Normalized joint state with independent complex Gaussian amplitudes.
inline JointState random_state(std::mt19937_64& rng, int n_max) {
  std::normal_distribution<double> g;
  JointState s;
  s.a = VecXc(n_max + 1);
  s.b = VecXc(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    s.a(n) = {g(rng), g(rng)};
    s.b(n) = {g(rng), g(rng)};
  }
  const double norm = std::sqrt(s.norm_sq());
  s.a /= norm;
  s.b /= norm;
  return s;
}

// Same, but with the top |e,N> left empty as the constructors guarantee.
inline JointState random_closed_state(std::mt19937_64& rng, int n_max) {
  JointState s = random_state(rng, n_max);
  s.a(n_max) = 0.0;
  const double norm = std::sqrt(s.norm_sq());
  s.a /= norm;
  s.b /= norm;
  return s;
}

}  // namespace jcm::testing
