#include "jcm/cli.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "jcm/io.hpp"
#include "jcm/numeric.hpp"

namespace jcm::cli {

namespace {

constexpr const char* kVersion = "1.0.0";

const std::vector<std::string> kFigures = {"2a", "2b", "2c", "3a", "3b", "4a", "4b", "4c", "5"};

Family family_of(const RunConfig& c) {
  if (c.family) return *c.family;
  return c.command == Command::bound ? Family::eo : Family::zz;
}

double xi_of(const RunConfig& c) {
  return c.phase_diff ? wrap_angle(std::arg(c.alpha) - *c.phase_diff) : c.xi;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

JointState build_state(const RunConfig& c) {
  const ModelParams params;
  const double xi = xi_of(c);
  switch (family_of(c)) {
    case Family::zz:
      return product_state(zz_atom(c.gamma, xi), coherent_field(c.alpha, params));
    case Family::eo:
      return eo_state(c.alpha, c.gamma, xi, params);
    case Family::trap: {
      const std::vector<int> signs = c.signs_file.empty() ? std::vector<int>{} : parse_signs_file(c.signs_file);
      return trapping_state(c.z, signs, params);
    }
    case Family::cat: {
      const Parity p = c.parity == "odd" ? Parity::odd : Parity::even;
      return product_state(zz_atom(c.gamma, xi), cat_field(c.alpha, p, params));
    }
    case Family::file:
      return io::joint_state_from_json(read_file(c.state_file));
  }
  throw DomainError("unknown state family");
}

// Standard envelope, or the even-shell one for parity-structured states.
EnvelopeFn envelope_for(const DressedCoordinates& coords) {
  const DressednessProfile p = dressedness_profile(coords);
  try {
    return interp_envelope(p, coords.phi);
  } catch (const EnvelopeError&) {
    double even = 0.0;
    for (Eigen::Index n = 0; n < p.D.size(); n += 2) even += p.D(n);
    if (!(even > 0.0)) throw;
    return even_envelope(p, coords.phi);
  }
}

// Index of the revival window around tau: round(tau / T), T the revival period.
int k_window(double tau, const EnvelopeFn& env) {
  const double s = env.stride;
  const double period = kTwoPi * std::sqrt(s * env.mean + 1.0) / s;
  return static_cast<int>(std::floor(tau / period + 0.5));
}

struct RevivalData {
  VecX exact, approx;
  Eigen::VectorXi window;
};

RevivalData revival_data(const JointState& s, const TimeGrid& grid, int k_max, bool want_exact, bool want_approx) {
  const DressedCoordinates coords = to_dressed(s);
  RevivalData d;
  d.exact = VecX::Zero(grid.size());
  d.approx = VecX::Zero(grid.size());
  d.window = Eigen::VectorXi::Zero(grid.size());
  std::optional<EnvelopeFn> env;
  if (want_approx) env = envelope_for(coords);
  for (Eigen::Index i = 0; i < grid.size(); ++i) {
    if (want_exact) d.exact(i) = inversion_dressed(coords, grid[i]);
    if (want_approx) {
      d.approx(i) = approx_inversion(grid[i], *env, k_max);
      d.window(i) = k_window(grid[i], *env);
    }
  }
  return d;
}

void with_output(const std::string& path, const std::function<void(std::ostream&)>& write) {
  if (path.empty()) {
    write(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot write " + path);
  write(out);
  if (!out) throw Error("write failed for " + path);
}

std::string array_json(const VecX& v) {
  std::string out = "[";
  for (Eigen::Index i = 0; i < v.size(); ++i) out += (i ? ", " : "") + io::num(v(i));
  return out + "]";
}

void write_state(std::ostream& os, const JointState& s, Format f) {
  if (f == Format::json) {
    os << io::to_json(s);
    return;
  }
  os << "n,a_re,a_im,b_re,b_im\n";
  for (int n = 0; n <= s.n_max(); ++n)
    os << n << ',' << io::num(s.a(n).real()) << ',' << io::num(s.a(n).imag()) << ',' << io::num(s.b(n).real())
       << ',' << io::num(s.b(n).imag()) << '\n';
}

void write_bound(std::ostream& os, const RunConfig& c, const JointState& s) {
  const DressednessProfile p = dressedness_profile(to_dressed(s));
  const bool eo = family_of(c) == Family::eo;
  if (c.format == Format::json) {
    os << "{\"family\": \"" << (eo ? "eo" : "other") << "\", \"M\": " << io::num(p.M)
       << ", \"w_minus1_sq\": " << io::num(p.w_minus1_sq);
    if (eo) os << ", \"s_min\": " << io::num(entropy_floor(p.M));
    os << ", \"n_max\": " << s.n_max() << "}\n";
    return;
  }
  os << "M,w_minus1_sq" << (eo ? ",s_min" : "") << '\n';
  os << io::num(p.M) << ',' << io::num(p.w_minus1_sq);
  if (eo) os << ',' << io::num(entropy_floor(p.M));
  os << '\n';
}

void write_series(std::ostream& os, const InversionSeries& s, Format f) {
  if (f == Format::json) {
    os << "{\"label\": \"" << s.label << "\", \"tau\": " << array_json(s.grid.tau())
       << ", \"sigma_z\": " << array_json(s.sigma_z) << "}\n";
    return;
  }
  io::write_series_csv(os, s);
}

void write_revival(std::ostream& os, const RunConfig& c, const JointState& s) {
  if (c.format == Format::json) {
    const DressednessProfile p = dressedness_profile(to_dressed(s));
    os << "[";
    for (int k = 1; k <= c.k_max; ++k) {
      std::string r = io::to_json(validity(k, p));
      r.pop_back();
      os << (k > 1 ? ", " : "") << r;
    }
    os << "]\n";
    return;
  }
  const TimeGrid grid = TimeGrid::uniform(c.tau_max, c.samples);
  const bool exact = c.mode != Mode::approx, approx = c.mode != Mode::exact;
  const RevivalData d = revival_data(s, grid, c.k_max, exact, approx);
  if (!approx) {
    io::write_series_csv(os, {grid, d.exact, to_string(SeriesRoute::exact_dressed)});
  } else if (!exact) {
    os << "tau,sigma_z_approx,k_window\n";
    for (Eigen::Index i = 0; i < grid.size(); ++i)
      os << io::num(grid[i]) << ',' << io::num(d.approx(i)) << ',' << d.window(i) << '\n';
  } else {
    io::write_approx_csv(os, grid, d.exact, d.approx, d.window);
  }
}

// ---- reproduce presets ----

struct Preset {
  std::string data;                              // CSV body
  std::vector<std::pair<std::string, std::string>> params;  // JSON-ready values
  int n_max = 0;
};

Preset figure_series(bool eo, double delta, const RunConfig& c) {
  RunConfig f = c;
  f.family = eo ? Family::eo : Family::zz;
  f.alpha = {7.0, 0.0};
  f.gamma = 0.25 * kPi;
  f.phase_diff = delta;
  const JointState s = build_state(f);
  std::ostringstream os;
  io::write_series_csv(os, series(s, TimeGrid::uniform(c.tau_max, c.samples)));
  return {os.str(),
          {{"family", eo ? "\"eo\"" : "\"zz\""},
           {"alpha_re", io::num(7.0)},
           {"alpha_im", io::num(0.0)},
           {"gamma", io::num(f.gamma)},
           {"phase_diff", io::num(delta)},
           {"xi", io::num(xi_of(f))},
           {"tau_max", io::num(c.tau_max)},
           {"samples", std::to_string(c.samples)}},
          s.n_max()};
}

Preset figure_profiles(const std::vector<std::pair<double, double>>& cases) {
  const Complex alpha(7.0, 0.0);
  std::vector<DressednessProfile> ps;
  std::string cols = "[";
  for (std::size_t i = 0; i < cases.size(); ++i) {
    ps.push_back(zz_profile(alpha, cases[i].first, wrap_angle(-cases[i].second)));
    cols += std::string(i ? ", " : "") + "{\"column\": \"D_" + std::to_string(i + 1) +
            "\", \"gamma\": " + io::num(cases[i].first) + ", \"phase_diff\": " + io::num(cases[i].second) + "}";
  }
  cols += "]";
  Eigen::Index len = 0;
  for (const auto& p : ps) len = std::max(len, p.D.size());
  std::ostringstream os;
  os << "n";
  for (std::size_t i = 0; i < ps.size(); ++i) os << ",D_" << i + 1;
  os << '\n';
  for (Eigen::Index n = 0; n < len; ++n) {
    os << n;
    for (const auto& p : ps) os << ',' << io::num(n < p.D.size() ? p.D(n) : 0.0);
    os << '\n';
  }
  return {os.str(), {{"alpha_re", io::num(7.0)}, {"alpha_im", io::num(0.0)}, {"columns", cols}},
          static_cast<int>(len)};
}

Preset figure_revivals(const RunConfig& c) {
  const double lo = 20.0, hi = 112.0;
  const TimeGrid grid = TimeGrid::linspace(lo, hi, c.samples);
  std::ostringstream os;
  os << "phase_diff,tau,sigma_z_exact,sigma_z_approx,k_window\n";
  int n_max = 0;
  for (double delta : {0.5 * kPi, 0.0}) {
    RunConfig f = c;
    f.family = Family::zz;
    f.alpha = {7.0, 0.0};
    f.gamma = 0.25 * kPi;
    f.phase_diff = delta;
    const JointState s = build_state(f);
    n_max = std::max(n_max, s.n_max());
    const RevivalData d = revival_data(s, grid, c.k_max, true, true);
    for (Eigen::Index i = 0; i < grid.size(); ++i)
      os << io::num(delta) << ',' << io::num(grid[i]) << ',' << io::num(d.exact(i)) << ',' << io::num(d.approx(i))
         << ',' << d.window(i) << '\n';
  }
  return {os.str(),
          {{"family", "\"zz\""},
           {"alpha_re", io::num(7.0)},
           {"alpha_im", io::num(0.0)},
           {"gamma", io::num(0.25 * kPi)},
           {"phase_diff", "[" + io::num(0.5 * kPi) + ", " + io::num(0.0) + "]"},
           {"tau_min", io::num(lo)},
           {"tau_max", io::num(hi)},
           {"samples", std::to_string(c.samples)},
           {"k_max", std::to_string(c.k_max)}},
          n_max};
}

Preset make_preset(const std::string& fig, const RunConfig& c) {
  const double q = 0.25 * kPi;
  if (fig == "2a") return figure_series(false, 0.5 * kPi, c);
  if (fig == "2b") return figure_series(false, 0.1 * kPi, c);
  if (fig == "2c") return figure_series(false, 0.0, c);
  if (fig == "3a") return figure_profiles({{q, 0.5 * kPi}, {q, q}, {q, 0.0}});
  if (fig == "3b") return figure_profiles({{0.5 * kPi, 0.0}, {kPi / 3.0, 0.0}, {q, 0.0}});
  if (fig == "4a") return figure_series(true, 0.5 * kPi, c);
  if (fig == "4b") return figure_series(true, 0.1 * kPi, c);
  if (fig == "4c") return figure_series(true, 0.0, c);
  if (fig == "5") return figure_revivals(c);
  throw DomainError("unknown figure '" + fig + "'");
}

void reproduce(const RunConfig& c) {
  namespace fs = std::filesystem;
  if (c.out.empty()) throw DomainError("reproduce needs --out DIR");
  fs::create_directories(c.out);
  const std::vector<std::string> figs = c.figure == "all" ? kFigures : std::vector<std::string>{c.figure};
  for (const std::string& fig : figs) {
    const Preset p = make_preset(fig, c);
    const fs::path base = fs::path(c.out) / ("fig" + fig);
    with_output(base.string() + ".csv", [&](std::ostream& os) { os << p.data; });
    with_output(base.string() + ".json", [&](std::ostream& os) {
      os << "{\"command\": \"reproduce\", \"figure\": \"" << fig << "\", \"params\": {";
      for (std::size_t i = 0; i < p.params.size(); ++i)
        os << (i ? ", " : "") << '"' << p.params[i].first << "\": " << p.params[i].second;
      os << "}, \"n_max\": " << p.n_max << ", \"version\": \"" << kVersion << "\"}\n";
    });
  }
}

}  // namespace

void RunConfig::validate() const {
  if (samples < 2) throw DomainError("--samples must be at least 2");
  if (!(tau_max > 0.0)) throw DomainError("--tau-max must be positive");
  if (k_max < 1) throw DomainError("--k-max must be at least 1");
  if (parity != "even" && parity != "odd") throw DomainError("--parity must be even or odd");
  const Family f = family_of(*this);
  if (f == Family::file && state_file.empty()) throw DomainError("--family file needs --state-file");
  if (f != Family::file && !state_file.empty()) throw DomainError("--state-file needs --family file");
  if (f != Family::trap && !signs_file.empty()) throw DomainError("--signs-file needs --family trap");
  if (command == Command::reproduce && figure.empty()) throw DomainError("reproduce needs --figure");
}

std::vector<int> parse_signs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open signs file " + path);
  std::vector<int> signs;
  std::string line;
  int line_no = 0;
  bool blank_seen = false;
  int first_blank = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto b = line.find_first_not_of(" \t");
    if (b == std::string::npos) {
      if (!blank_seen) first_blank = line_no;
      blank_seen = true;
      continue;
    }
    const std::string tok = line.substr(b, line.find_last_not_of(" \t") - b + 1);
    // A blank line followed by more tokens is a gap in the pattern.
    if (blank_seen) throw ParseError("empty sign entry", first_blank);
    if (tok == "+1")
      signs.push_back(1);
    else if (tok == "-1")
      signs.push_back(-1);
    else
      throw ParseError("invalid sign token '" + tok + "'", line_no);
  }
  return signs;
}

int run(const RunConfig& c) {
  try {
    c.validate();
    if (c.command == Command::reproduce) {
      reproduce(c);
      return 0;
    }
    const JointState s = build_state(c);
    with_output(c.out, [&](std::ostream& os) {
      switch (c.command) {
        case Command::state:
          write_state(os, s, c.format);
          break;
        case Command::dressed: {
          const DressedCoordinates coords = to_dressed(s);
          if (c.format == Format::json)
            os << io::to_json(coords);
          else
            io::write_profile_csv(os, dressedness_profile(coords));
          break;
        }
        case Command::bound:
          write_bound(os, c, s);
          break;
        case Command::evolve:
          write_series(os, series(s, TimeGrid::uniform(c.tau_max, c.samples)), c.format);
          break;
        case Command::revival:
          write_revival(os, c, s);
          break;
        case Command::reproduce:
          break;
      }
    });
    return 0;
  } catch (const TruncationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const QuadratureError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const EnvelopeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

int main(int argc, char** argv) {
  CLI::App app{"Resonant Jaynes-Cummings dynamics in dressed-state coordinates"};
  RunConfig c;

  const std::map<std::string, Command> commands = {{"state", Command::state},     {"dressed", Command::dressed},
                                                   {"bound", Command::bound},     {"evolve", Command::evolve},
                                                   {"revival", Command::revival}, {"reproduce", Command::reproduce}};
  const std::map<std::string, Family> families = {
      {"zz", Family::zz}, {"eo", Family::eo}, {"trap", Family::trap}, {"cat", Family::cat}, {"file", Family::file}};
  const std::map<std::string, Mode> modes = {{"exact", Mode::exact}, {"approx", Mode::approx}, {"both", Mode::both}};
  const std::map<std::string, Format> formats = {{"csv", Format::csv}, {"json", Format::json}};

  double alpha_re = c.alpha.real(), alpha_im = c.alpha.imag(), z_re = c.z.real(), z_im = c.z.imag();
  double phase_diff = 0.0;
  Family family = Family::zz;

  app.add_option("command", c.command, "state | dressed | bound | evolve | revival | reproduce")
      ->required()
      ->transform(CLI::CheckedTransformer(commands, CLI::ignore_case));
  auto* fam = app.add_option("--family", family, "zz | eo | trap | cat | file")
                  ->transform(CLI::CheckedTransformer(families, CLI::ignore_case));
  app.add_option("--alpha-re,--alpha", alpha_re, "Re(alpha)");
  app.add_option("--alpha-im", alpha_im, "Im(alpha)");
  app.add_option("--gamma", c.gamma, "atom mixing angle (rad)");
  auto* xi = app.add_option("--xi", c.xi, "atom relative phase (rad)");
  auto* pd = app.add_option("--phase-diff", phase_diff, "sets xi = arg(alpha) - phase_diff")->excludes(xi);
  app.add_option("--z-re", z_re, "Re(z) of the trapping family");
  app.add_option("--z-im", z_im, "Im(z) of the trapping family");
  app.add_option("--signs-file", c.signs_file, "sign pattern j(n), one +1/-1 per line");
  app.add_option("--parity", c.parity, "cat parity: even | odd");
  app.add_option("--state-file", c.state_file, "joint state JSON");
  app.add_option("--tau-max", c.tau_max, "end of the time grid");
  app.add_option("--samples", c.samples, "number of grid points");
  app.add_option("--k-max", c.k_max, "highest revival index");
  app.add_option("--mode", c.mode, "exact | approx | both")->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));
  app.add_option("--out", c.out, "output file (directory for reproduce)");
  app.add_option("--format", c.format, "csv | json")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_option("--figure", c.figure, "2a 2b 2c 3a 3b 4a 4b 4c 5 | all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  c.alpha = {alpha_re, alpha_im};
  c.z = {z_re, z_im};
  if (fam->count()) c.family = family;
  if (pd->count()) c.phase_diff = phase_diff;
  return run(c);
}

}  // namespace jcm::cli
