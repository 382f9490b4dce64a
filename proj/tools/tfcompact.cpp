// tfcompact: maximally compact sequence design and spread analysis.
//
// Exit status: 0 success, 1 invalid arguments or input, 2 solver failure
// or unattainable target.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "tfcompact/bounds.hpp"
#include "tfcompact/designer.hpp"
#include "tfcompact/io.hpp"
#include "tfcompact/mathieu.hpp"
#include "tfcompact/spreads.hpp"
#include "tfcompact/windows.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitSolver = 2;

// Raised for bad user input detected after CLI11 parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  double sigma2 = 0.0;
  int taps = tfc::kDefaultTaps;
  double tol = tfc::kDefaultTol;
  bool auto_taps = false;
  std::string grid;
  double q = 0.0;
  int theta_points = 181;
  int half_len = 0;
  std::string family = "all";
  std::string input;
  std::string output;
  std::string sequence_out;
  std::string format;
};

void emit(const Options& o, const std::string& text) {
  if (o.output.empty() || o.output == "-") {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream f(o.output, std::ios::binary);
  if (!f) throw UsageError("cannot open output file " + o.output);
  f << text;
  if (!f) throw UsageError("failed writing " + o.output);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string format_or(const Options& o, const char* fallback) { return o.format.empty() ? fallback : o.format; }

int run_design(const Options& o) {
  const auto r = o.auto_taps ? tfc::design_auto(o.sigma2, o.tol) : tfc::design_max_compact(o.sigma2, o.taps, o.tol);
  if (r.status == tfc::DesignStatus::increase_taps)
    std::cerr << "warning: tail mass " << tfc::io::format_number(r.tail_mass)
              << " exceeds the truncation limit; increase taps\n";
  if (!o.sequence_out.empty()) {
    std::ofstream f(o.sequence_out, std::ios::binary);
    if (!f) throw UsageError("cannot open " + o.sequence_out);
    tfc::io::write_sequence(f, r.sequence);
  }
  if (format_or(o, "json") == "csv") {
    std::ostringstream s;
    tfc::io::write_sequence_csv(s, r.sequence);
    emit(o, s.str());
  } else {
    json j = tfc::io::to_json(r);
    j["eta_lower"] = tfc::io::number_json(tfc::eta_lower(o.sigma2));
    j["eta_upper"] = tfc::io::number_json(tfc::eta_upper(o.sigma2));
    j["eta_upper_note"] = "asymptotic, small sigma2";
    emit(o, dump(j));
  }
  return kExitOk;
}

int run_analyze(const Options& o) {
  tfc::Sequence s = tfc::Sequence::impulse();
  try {
    if (o.input == "-")
      s = tfc::io::read_sequence(std::cin);
    else
      s = tfc::io::read_sequence_file(o.input);
  } catch (const std::runtime_error& e) {
    throw UsageError(e.what());
  }
  const auto r = tfc::analyze(s);
  if (format_or(o, "json") == "csv") {
    const auto num = tfc::io::format_number;
    std::ostringstream c;
    c << "mu_n,delta_n2,tau_re,tau_im,delta_wp2,mu_wl,delta_wl2,eta_p,eta_l\n"
      << num(r.mu_n) << ',' << num(r.delta_n2) << ',' << num(r.tau.real()) << ',' << num(r.tau.imag()) << ','
      << num(r.delta_wp2) << ',' << num(r.mu_wl) << ',' << num(r.delta_wl2) << ','
      << (r.eta_p ? num(*r.eta_p) : std::string("nan")) << ',' << num(r.eta_l) << '\n';
    emit(o, c.str());
  } else {
    emit(o, dump(tfc::io::to_json(r)));
  }
  return kExitOk;
}

std::vector<double> grid_or(const Options& o, const char* fallback) {
  try {
    return tfc::io::parse_grid(o.grid.empty() ? fallback : o.grid);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

int run_curve(const Options& o) {
  const auto grid = grid_or(o, "0.01:10:40:log");
  for (double s : grid)
    if (!(s > 0.0)) throw UsageError("curve: grid values must be positive");
  if (o.taps < 5 || o.taps % 2 == 0) throw UsageError("taps must be odd and at least 5");
  if (!(o.tol >= 1e-12)) throw UsageError("tol must be at least 1e-12");
  const auto curve = tfc::sweep_curve(grid, o.taps, o.tol);
  if (format_or(o, "csv") == "json") {
    emit(o, dump(tfc::io::curve_json(curve)));
  } else {
    std::ostringstream s;
    tfc::io::write_curve_csv(s, curve);
    emit(o, s.str());
  }
  int status = kExitOk;
  for (const auto& p : curve) {
    if (p.ok) continue;
    std::cerr << (std::isnan(p.eta_p) ? "error" : "warning") << ": sigma2=" << tfc::io::format_number(p.sigma2)
              << ": " << p.error << '\n';
    if (std::isnan(p.eta_p)) status = kExitSolver;
  }
  return status;
}

int run_mathieu(const Options& o) {
  const bool table = !o.grid.empty();
  if (table) {
    const auto qs = grid_or(o, "");
    std::vector<double> a0;
    for (double q : qs) a0.push_back(tfc::char_value_a0(q, o.half_len));
    if (format_or(o, "csv") == "json") {
      json arr = json::array();
      for (std::size_t i = 0; i < qs.size(); ++i) arr.push_back(json{{"q", qs[i]}, {"a0", a0[i]}});
      emit(o, dump(arr));
    } else {
      std::ostringstream s;
      tfc::io::write_a0_csv(s, qs, a0);
      emit(o, s.str());
    }
    return kExitOk;
  }
  if (o.theta_points < 1) throw UsageError("theta-points must be positive");
  std::vector<double> thetas(static_cast<std::size_t>(o.theta_points));
  for (int i = 0; i < o.theta_points; ++i)
    thetas[static_cast<std::size_t>(i)] = o.theta_points == 1 ? 0.0 : std::numbers::pi * i / (o.theta_points - 1);
  const auto m = tfc::ce0(o.q, thetas, o.half_len);
  if (format_or(o, "csv") == "json") {
    emit(o, dump(tfc::io::to_json(m)));
  } else {
    std::ostringstream s;
    tfc::io::write_ce0_csv(s, m);
    emit(o, s.str());
  }
  return kExitOk;
}

int run_windows(const Options& o) {
  std::vector<tfc::WindowFamily> families;
  for (auto& f : tfc::default_families())
    if (o.family == "all" || f.name == o.family) families.push_back(std::move(f));
  if (families.empty()) throw UsageError("unknown window family: " + o.family);
  std::vector<tfc::ScanPoint> all;
  for (const auto& f : families) {
    auto scan = tfc::spread_scan(f);
    all.insert(all.end(), scan.begin(), scan.end());
  }
  if (format_or(o, "csv") == "json") {
    emit(o, dump(tfc::io::scan_json(all)));
  } else {
    std::ostringstream s;
    tfc::io::write_scan_csv(s, all);
    emit(o, s.str());
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Design and analysis of maximally compact sequences"};
  app.require_subcommand(1);
  Options o;

  const auto add_format = [&o](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--output", o.output, "Output file (default stdout)");
  };
  const auto add_solver = [&o](CLI::App* sub) {
    sub->add_option("--taps", o.taps, "Odd tap count, at least 5")->capture_default_str();
    sub->add_option("--tol", o.tol, "Constraint tolerance, at least 1e-12")->capture_default_str();
  };

  auto* design = app.add_subcommand("design", "Maximally compact sequence for a frequency spread");
  design->add_option("--sigma2", o.sigma2, "Target periodic frequency spread")->required();
  add_solver(design);
  design->add_flag("--auto-taps", o.auto_taps, "Grow the tap count until the tails are negligible");
  design->add_option("--sequence-out", o.sequence_out, "Also write the taps in sequence format");
  add_format(design);

  auto* analyze = app.add_subcommand("analyze", "Spread measures of a sequence file");
  analyze->add_option("--input", o.input, "Sequence file, or - for stdin")->required();
  add_format(analyze);

  auto* curve = app.add_subcommand("curve", "Optimal spread curve with analytic bounds");
  curve->add_option("--grid", o.grid, "sigma2 grid start:stop:points:log|lin (default 0.01:10:40:log)");
  add_solver(curve);
  add_format(curve);

  auto* mathieu = app.add_subcommand("mathieu", "ce0(q; theta) on [0, pi], or an a0(q) table with --grid");
  auto* q_opt = mathieu->add_option("--q", o.q, "Mathieu parameter q");
  mathieu->add_option("--grid", o.grid, "q grid start:stop:points:log|lin for an a0 table")->excludes(q_opt);
  mathieu->add_option("--theta-points", o.theta_points, "Number of theta samples")->capture_default_str();
  mathieu->add_option("--half-len", o.half_len, "Minimum Fourier half length (0 = automatic)");
  add_format(mathieu);

  auto* windows = app.add_subcommand("windows", "Spread scan of standard window families");
  windows->add_option("--family", o.family, "Family name or all")->capture_default_str();
  add_format(windows);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*design) return run_design(o);
    if (*analyze) return run_analyze(o);
    if (*curve) return run_curve(o);
    if (*mathieu) {
      if (q_opt->count() == 0 && o.grid.empty()) throw UsageError("mathieu: give --q or --grid");
      return run_mathieu(o);
    }
    return run_windows(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const tfc::DesignError& e) {
    std::cerr << "error: " << e.what() << '\n';
    using Kind = tfc::DesignError::Kind;
    const bool usage = e.kind() == Kind::invalid_target || e.kind() == Kind::invalid_taps ||
                       e.kind() == Kind::invalid_tolerance;
    return usage ? kExitUsage : kExitSolver;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitSolver;
  }
}
