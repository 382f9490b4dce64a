#include "tfcompact/io.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>

namespace tfc::io {

using json = nlohmann::ordered_json;

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void parse_error(std::size_t line, const std::string& msg) {
  throw std::runtime_error(fmt::format("sequence input line {}: {}", line, msg));
}

json complex_json(cplx z) { return json{{"re", number_json(z.real())}, {"im", number_json(z.imag())}}; }

}  // namespace

Sequence read_sequence(std::istream& in) {
  std::vector<cplx> taps;
  long offset = 0;
  bool have_offset = false;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      const std::string body = trim(line.substr(1));
      if (body.rfind("offset=", 0) == 0) {
        if (have_offset || !taps.empty()) parse_error(lineno, "offset header must precede the taps");
        std::istringstream os(body.substr(7));
        long v = 0;
        std::string rest;
        if (!(os >> v) || (os >> rest)) parse_error(lineno, "malformed offset header");
        offset = v;
        have_offset = true;
      }
      continue;
    }
    std::istringstream ls(line);
    double re = 0.0, im = 0.0;
    std::string rest;
    if (!(ls >> re)) parse_error(lineno, "expected \"re im\"");
    if (!(ls >> im)) {
      if (!ls.eof()) parse_error(lineno, "expected \"re im\"");
      im = 0.0;
    } else if (ls >> rest) {
      parse_error(lineno, "trailing characters");
    }
    taps.emplace_back(re, im);
  }
  if (taps.empty()) throw std::runtime_error("sequence input contains no taps");
  try {
    return Sequence(std::move(taps), offset);
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("sequence input: ") + e.what());
  }
}

Sequence read_sequence_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_sequence(in);
}

std::vector<double> parse_grid(const std::string& spec) {
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (true) {
    const auto next = spec.find(':', pos);
    parts.push_back(spec.substr(pos, next == std::string::npos ? std::string::npos : next - pos));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  const auto bad = [&spec](const std::string& why) {
    return std::invalid_argument("grid \"" + spec + "\": " + why);
  };
  if (parts.size() != 4) throw bad("expected start:stop:points:log|lin");
  auto number = [&](const std::string& t) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(t, &used);
    } catch (const std::exception&) {
      throw bad("not a number: " + t);
    }
    if (used != t.size() || !std::isfinite(v)) throw bad("not a number: " + t);
    return v;
  };
  const double a = number(parts[0]), b = number(parts[1]);
  const double n_raw = number(parts[2]);
  if (n_raw < 1 || n_raw != std::floor(n_raw) || n_raw > 1e7) throw bad("point count must be a positive integer");
  const int n = static_cast<int>(n_raw);
  const bool log = parts[3] == "log";
  if (!log && parts[3] != "lin") throw bad("spacing must be log or lin");
  if (log && !(a > 0.0 && b > 0.0)) throw bad("log spacing needs positive end points");

  std::vector<double> g(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double t = n == 1 ? 0.0 : static_cast<double>(i) / (n - 1);
    g[static_cast<std::size_t>(i)] = log ? std::exp(std::log(a) + (std::log(b) - std::log(a)) * t) : a + (b - a) * t;
  }
  g.front() = a;
  if (n > 1) g.back() = b;
  return g;
}

std::string format_number(double v) { return fmt::format("{}", v); }

json number_json(double v) {
  if (std::isnan(v)) return nullptr;
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

void write_sequence(std::ostream& out, const Sequence& s) {
  out << "# offset=" << s.offset() << '\n';
  for (const auto& t : s.taps()) out << format_number(t.real()) << ' ' << format_number(t.imag()) << '\n';
}

void write_sequence_csv(std::ostream& out, const Sequence& s) {
  out << "index,re,im\n";
  long k = s.offset();
  for (const auto& t : s.taps())
    out << k++ << ',' << format_number(t.real()) << ',' << format_number(t.imag()) << '\n';
}

json sequence_json(const Sequence& s) {
  json taps = json::array();
  for (const auto& t : s.taps()) taps.push_back(json::array({t.real(), t.imag()}));
  return json{{"offset", s.offset()}, {"taps", std::move(taps)}};
}

json to_json(const SpreadReport& r) {
  json j;
  j["mu_n"] = number_json(r.mu_n);
  j["delta_n2"] = number_json(r.delta_n2);
  j["tau"] = complex_json(r.tau);
  j["delta_wp2"] = number_json(r.delta_wp2);
  j["mu_wl"] = number_json(r.mu_wl);
  j["delta_wl2"] = number_json(r.delta_wl2);
  j["eta_p"] = r.eta_p ? number_json(*r.eta_p) : json(nullptr);
  j["eta_l"] = number_json(r.eta_l);
  j["mu_wp"] = complex_json(r.mu_wp());
  if (!r.eta_p) j["degenerate"] = "single nonzero tap: eta_p undefined";
  return j;
}

json to_json(const DesignResult& r, bool include_sequence) {
  json j;
  j["sigma2"] = number_json(r.sigma2);
  j["alpha"] = number_json(r.alpha);
  j["lambda1"] = number_json(r.lambda1);
  j["lambda2"] = number_json(r.lambda2);
  j["delta_n2_opt"] = number_json(r.delta_n2_opt);
  j["eta_p"] = number_json(r.eta_p);
  j["taps"] = r.taps;
  j["duality_gap"] = number_json(r.duality_gap);
  j["constraint_gap"] = number_json(r.constraint_gap);
  j["eig_residual"] = number_json(r.eig_residual);
  j["tail_mass"] = number_json(r.tail_mass);
  j["iterations"] = r.iterations;
  j["status"] = r.status == DesignStatus::ok ? "ok" : "increase_taps";
  if (include_sequence) j["sequence"] = sequence_json(r.sequence);
  return j;
}

json to_json(const MathieuEval& m) {
  json j;
  j["q"] = number_json(m.q);
  j["a0"] = number_json(m.a0);
  j["half_len"] = m.half_len;
  j["normalization"] = json{{"convention", "integral_0^{2pi} ce0^2 dtheta = pi"},
                            {"ce_l2_target", m.normalization.ce_l2_target},
                            {"ce_scale", m.normalization.ce_scale},
                            {"spectrum", "unit-energy taps, (1/2pi) integral |X|^2 dw = 1"},
                            {"gamma0", m.normalization.gamma0}};
  j["thetas"] = m.thetas;
  j["ce0"] = m.ce0_values;
  j["fourier_coeffs"] = m.fourier_coeffs;
  return j;
}

void write_curve_csv(std::ostream& out, std::span<const CurvePoint> curve) {
  out << kCurveHeader << '\n';
  for (const auto& p : curve)
    out << format_number(p.sigma2) << ',' << format_number(p.delta_n2) << ',' << format_number(p.eta_p) << ','
        << format_number(p.eta_lower) << ',' << format_number(p.eta_upper) << '\n';
}

void write_scan_csv(std::ostream& out, std::span<const ScanPoint> points, bool header) {
  if (header) out << kWindowsHeader << '\n';
  for (const auto& p : points) {
    const double eta = p.report.eta_p ? *p.report.eta_p : std::nan("");
    out << p.family << ',' << format_number(p.param) << ',' << format_number(p.report.delta_wp2) << ','
        << format_number(p.report.delta_n2) << ',' << format_number(eta) << '\n';
  }
}

json curve_json(std::span<const CurvePoint> curve) {
  json pts = json::array();
  for (const auto& p : curve) {
    json j;
    j["sigma2"] = number_json(p.sigma2);
    j["delta_n2"] = number_json(p.delta_n2);
    j["eta_p"] = number_json(p.eta_p);
    j["eta_lower"] = number_json(p.eta_lower);
    j["eta_upper"] = number_json(p.eta_upper);
    j["ok"] = p.ok;
    if (!p.error.empty()) j["error"] = p.error;
    pts.push_back(std::move(j));
  }
  json out;
  out["eta_upper_note"] = "asymptotic, small sigma2";
  out["points"] = std::move(pts);
  return out;
}

json scan_json(std::span<const ScanPoint> points) {
  json arr = json::array();
  for (const auto& p : points) {
    json j;
    j["family"] = p.family;
    j["param"] = number_json(p.param);
    j["report"] = to_json(p.report);
    arr.push_back(std::move(j));
  }
  return arr;
}

void write_ce0_csv(std::ostream& out, const MathieuEval& m) {
  out << kCe0Header << '\n';
  for (std::size_t i = 0; i < m.thetas.size(); ++i)
    out << format_number(m.thetas[i]) << ',' << format_number(m.ce0_values[i]) << '\n';
}

void write_a0_csv(std::ostream& out, std::span<const double> q, std::span<const double> a0) {
  if (q.size() != a0.size()) throw std::invalid_argument("write_a0_csv: size mismatch");
  out << kA0Header << '\n';
  for (std::size_t i = 0; i < q.size(); ++i) out << format_number(q[i]) << ',' << format_number(a0[i]) << '\n';
}

}  // namespace tfc::io
