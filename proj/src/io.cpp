#include "jcm/io.hpp"

#include <cstdio>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace jcm::io {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

std::string array(const VecX& v) {
  std::string out = "[";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += num(v(i));
  }
  return out + "]";
}

VecX read_array(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) throw DomainError(std::string("state JSON lacks array '") + key + "'");
  const auto& a = j[key];
  VecX v(static_cast<Eigen::Index>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) v(static_cast<Eigen::Index>(i)) = a[i].get<double>();
  return v;
}

}  // namespace

std::string to_json(const JointState& s) {
  std::ostringstream os;
  os << "{\"n_max\": " << s.n_max() << ", \"a_re\": " << array(s.a.real()) << ", \"a_im\": " << array(s.a.imag())
     << ", \"b_re\": " << array(s.b.real()) << ", \"b_im\": " << array(s.b.imag()) << "}\n";
  return os.str();
}

JointState joint_state_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed state JSON: ") + e.what());
  }
  const VecX ar = read_array(j, "a_re"), ai = read_array(j, "a_im");
  const VecX br = read_array(j, "b_re"), bi = read_array(j, "b_im");
  if (ai.size() != ar.size() || br.size() != ar.size() || bi.size() != ar.size())
    throw DomainError("state JSON arrays differ in length");
  JointState s;
  s.a = ar.cast<Complex>() + Complex(0, 1) * ai.cast<Complex>();
  s.b = br.cast<Complex>() + Complex(0, 1) * bi.cast<Complex>();
  if (j.contains("n_max") && j["n_max"].get<int>() != s.n_max())
    throw DomainError("state JSON n_max disagrees with the array length");
  s.validate();
  return s;
}

std::string to_json(const DressedCoordinates& c) {
  const DressednessProfile p = dressedness_profile(c);
  std::ostringstream os;
  os << "{\"shells\": " << c.shells() << ", \"w_minus1\": " << num(c.w_minus1) << ", \"b0_phase\": " << num(c.b0_phase)
     << ", \"w\": " << array(c.w) << ", \"theta\": " << array(c.theta) << ", \"chi\": " << array(c.chi)
     << ", \"phi\": " << array(c.phi) << ", \"a_top_re\": " << num(c.a_top.real())
     << ", \"a_top_im\": " << num(c.a_top.imag()) << ", \"D\": " << array(p.D) << ", \"M\": " << num(p.M) << "}\n";
  return os.str();
}

std::string to_json(const ValidityReport& r) {
  std::ostringstream os;
  os << "{\"k\": " << r.k << ", \"tau_min\": " << num(r.tau_min) << ", \"n_bound\": " << num(r.n_bound)
     << ", \"condition_b_ok\": " << (r.condition_b_ok ? "true" : "false") << ", \"dominant_n\": " << r.dominant_n
     << "}\n";
  return os.str();
}

void write_series_csv(std::ostream& os, const InversionSeries& s) {
  os << "tau,sigma_z\n";
  for (Eigen::Index i = 0; i < s.grid.size(); ++i) os << num(s.grid[i]) << ',' << num(s.sigma_z(i)) << '\n';
}

void write_profile_csv(std::ostream& os, const DressednessProfile& p) {
  os << "n,D\n";
  for (Eigen::Index n = 0; n < p.D.size(); ++n) os << n << ',' << num(p.D(n)) << '\n';
}

void write_approx_csv(std::ostream& os, const TimeGrid& grid, const VecX& exact, const VecX& approx,
                      const Eigen::VectorXi& k_window) {
  os << "tau,sigma_z_exact,sigma_z_approx,k_window\n";
  for (Eigen::Index i = 0; i < grid.size(); ++i)
    os << num(grid[i]) << ',' << num(exact(i)) << ',' << num(approx(i)) << ',' << k_window(i) << '\n';
}

}  // namespace jcm::io
