#pragma once

#include <iosfwd>
#include <string>

#include "jcm/dynamics.hpp"
#include "jcm/revival.hpp"

namespace jcm::io {

/// Shortest round-trip text of a double ("%.17g").
std::string num(double x);

std::string to_json(const JointState& state);
JointState joint_state_from_json(const std::string& text);

std::string to_json(const DressedCoordinates& coords);
std::string to_json(const ValidityReport& report);

void write_series_csv(std::ostream& os, const InversionSeries& series);
void write_profile_csv(std::ostream& os, const DressednessProfile& profile);
/// k_window: index of the revival window containing tau, 0 before the first.
void write_approx_csv(std::ostream& os, const TimeGrid& grid, const VecX& exact, const VecX& approx,
                      const Eigen::VectorXi& k_window);

}  // namespace jcm::io
