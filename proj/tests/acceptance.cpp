// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "oracles.hpp"
#include "tfcompact/bounds.hpp"
#include "tfcompact/designer.hpp"
#include "tfcompact/mathieu.hpp"
#include "tfcompact/pencil.hpp"
#include "tfcompact/spreads.hpp"
#include "tfcompact/tridiag.hpp"
#include "tfcompact/windows.hpp"

using namespace tfc;
using std::numbers::pi;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(int id, const char* title, const std::function<Outcome()>& body) {
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  if (!o.pass) ++failures;
  std::printf("[%s] %2d %s: %s\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.c_str());
  std::fflush(stdout);
}

std::vector<double> grid20() {
  std::vector<double> g(20);
  for (int i = 0; i < 20; ++i)
    g[static_cast<std::size_t>(i)] = std::exp(std::log(0.02) + (std::log(10.0) - std::log(0.02)) * i / 19.0);
  g.back() = 10.0;
  return g;
}

const std::vector<DesignResult>& grid_designs(double* elapsed = nullptr) {
  static std::vector<DesignResult> designs;
  static double took = 0.0;
  if (designs.empty()) {
    const auto t0 = Clock::now();
    for (double s : grid20()) designs.push_back(design_max_compact(s, 201));
    took = seconds_since(t0);
  }
  if (elapsed) *elapsed = took;
  return designs;
}

Outcome design_at_tenth() {
  const auto t0 = Clock::now();
  const auto r = design_max_compact(0.1, 201);
  const double t = seconds_since(t0);
  const bool ok = r.eta_p >= 0.257 && r.eta_p <= 0.267 && r.delta_n2_opt >= 2.57 && r.delta_n2_opt <= 2.67 && t < 1.0;
  return {ok, fmt::format("eta_p={:.6f} delta_n2_opt={:.6f} time={:.4f}s", r.eta_p, r.delta_n2_opt, t)};
}

Outcome linear_spread_172() {
  const auto s = Sequence::from_real(std::vector<double>{1, 7, 2});
  const double closed = tf_spread_linear(s);
  const auto quad = oracle::linear_moments_quadrature(s.taps(), s.offset(), 1 << 16);
  const double viaquad = time_spread(s) * quad.spread;
  auto in = [](double v) { return v >= 0.158 && v <= 0.160 && v < 0.25; };
  return {in(closed) && in(viaquad), fmt::format("eta_l closed={:.6f} quadrature={:.6f}", closed, viaquad)};
}

Outcome certificates() {
  double took = 0.0;
  const auto& ds = grid_designs(&took);
  double dg = 0, cg = 0, res = 0;
  bool shape = true;
  for (const auto& r : ds) {
    dg = std::max(dg, r.duality_gap);
    cg = std::max(cg, std::abs(r.constraint_gap));
    res = std::max(res, r.eig_residual);
    const auto& x = r.sequence.taps();
    for (std::size_t k = 0; k < x.size(); ++k) {
      if (!(x[k].real() > 0.0) || x[k].imag() != 0.0) shape = false;
      if (x[k] != x[x.size() - 1 - k]) shape = false;
    }
  }
  const bool ok = dg <= 1e-8 && cg <= 1e-8 && res <= 1e-8 && shape && took < 10.0;
  return {ok, fmt::format("max duality_gap={:.2e} |constraint_gap|={:.2e} eig_residual={:.2e} positive+symmetric={} "
                          "time={:.4f}s",
                          dg, cg, res, shape, took)};
}

Outcome sandwich() {
  double worst_lo = INFINITY, worst_up = INFINITY;
  for (const auto& r : grid_designs()) {
    worst_lo = std::min(worst_lo, r.eta_p - eta_lower(r.sigma2));
    if (r.sigma2 <= 0.1) worst_up = std::min(worst_up, eta_upper(r.sigma2) + 5e-3 - r.eta_p);
  }
  return {worst_lo >= -1e-9 && worst_up >= 0.0,
          fmt::format("min(eta_p - lower)={:.3e}, min(upper + 5e-3 - eta_p) for sigma2<=0.1 ={:.3e}", worst_lo,
                      worst_up)};
}

Outcome monotone() {
  const auto& ds = grid_designs();
  double min_drop = INFINITY;
  for (std::size_t i = 1; i < ds.size(); ++i) min_drop = std::min(min_drop, ds[i - 1].delta_n2_opt - ds[i].delta_n2_opt);
  return {min_drop > 0.0, fmt::format("smallest decrease of delta_n2_opt between grid points={:.4e}", min_drop)};
}

Outcome asymptotes() {
  const double big = design_max_compact(100.0, 201).eta_p;
  const double up = eta_upper(1e-6), lo = eta_lower(1e6);
  const bool ok = big >= 0.45 && big <= 0.5 && std::abs(up - 0.25) <= 1e-6 && std::abs(lo - 0.5) <= 1e-3;
  return {ok, fmt::format("eta_p(100)={:.6f} eta_upper(1e-6)-1/4={:.2e} eta_lower(1e6)-1/2={:.2e}", big, up - 0.25,
                          lo - 0.5)};
}

Outcome mathieu_cross() {
  double worst_rel = 0.0;
  for (double q : {25.0, 50.0, 100.0, 500.0}) {
    const double a = char_value_a0(q);
    worst_rel = std::max(worst_rel, std::abs(a - mclachlan_a0(q)) / std::abs(a));
  }
  double worst_bound = -INFINITY;
  for (int i = 0; i <= 200; ++i) {
    const double q = std::pow(10.0, 1.0 + 2.0 * i / 200.0);
    worst_bound = std::max(worst_bound, char_value_a0(q) - a0_upper_bound(q));
  }
  double worst_ode = 0.0;
  const double h = 1e-3;
  for (double q : {0.5, 2.0, 10.0, 50.0}) {
    std::vector<double> th;
    const int samples = 256;
    for (int i = 0; i < samples; ++i)
      for (int j = -2; j <= 2; ++j) th.push_back(pi * i / samples + j * h);
    const auto m = ce0(q, th);
    for (int i = 0; i < samples; ++i) {
      const double* y = &m.ce0_values[static_cast<std::size_t>(5 * i)];
      const double ypp = (-y[0] + 16 * y[1] - 30 * y[2] + 16 * y[3] - y[4]) / (12 * h * h);
      worst_ode = std::max(worst_ode, std::abs(ypp + (m.a0 - 2 * q * std::cos(2 * pi * i / samples)) * y[2]));
    }
  }
  const bool ok = worst_rel <= 1e-3 && worst_bound <= 1e-6 && worst_ode <= 1e-5;
  return {ok, fmt::format("max rel |a0 - McLachlan|={:.2e} max(a0 - bound) on [10,1e3]={:.3e} max ODE residual={:.2e}",
                          worst_rel, worst_bound, worst_ode)};
}

Outcome spectrum_identity() {
  double worst = 0.0;
  for (double sigma2 : {0.05, 0.1, 1.0}) {
    const auto r = design_max_compact(sigma2, 201);
    const int pts = 1024;
    std::vector<double> w(pts), half(pts);
    for (int i = 0; i < pts; ++i) {
      w[static_cast<std::size_t>(i)] = -pi + 2 * pi * i / pts;
      half[static_cast<std::size_t>(i)] = w[static_cast<std::size_t>(i)] / 2;
    }
    const auto m = ce0(-2 * r.lambda1, half);
    std::vector<double> mag(pts), ref(pts);
    double num = 0.0, den = 0.0, peak = 0.0;
    for (std::size_t k = 0; k < static_cast<std::size_t>(pts); ++k) {
      mag[k] = std::abs(oracle::dtft(r.sequence.taps(), r.sequence.offset(), w[k]));
      ref[k] = m.normalization.gamma0 * m.ce0_values[k];
      num += mag[k] * ref[k];
      den += ref[k] * ref[k];
      peak = std::max(peak, mag[k]);
    }
    const double scale = num / den;
    for (std::size_t k = 0; k < static_cast<std::size_t>(pts); ++k)
      worst = std::max(worst, std::abs(mag[k] - scale * ref[k]) / peak);
  }
  return {worst <= 1e-8, fmt::format("max | |X| - c gamma0 ce0 | / max|X| = {:.2e}", worst)};
}

Outcome jacobi_oracle() {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> half(1, 8);
  std::uniform_real_distribution<double> l1(0.0, 50.0), l2(-10.0, 10.0);
  double worst_val = 0.0, worst_vec = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const Pencil p(half(rng), l1(rng), l2(rng));
    const auto ref = oracle::jacobi_eigen(oracle::tridiagonal(p.diag(), p.offdiag()));
    const auto e = min_eigenpair(p.diag(), p.offdiag());
    worst_val = std::max(worst_val, std::abs(e.value - ref.values[0]));
    double dot = 0.0;
    for (std::size_t i = 0; i < e.vector.size(); ++i) dot += e.vector[i] * ref.vectors[0][i];
    const double sgn = dot < 0 ? -1.0 : 1.0;
    for (std::size_t i = 0; i < e.vector.size(); ++i)
      worst_vec = std::max(worst_vec, std::abs(e.vector[i] - sgn * ref.vectors[0][i]));
  }
  return {worst_val <= 1e-9 && worst_vec <= 1e-9,
          fmt::format("50 pencils: max eigenvalue diff={:.2e} max eigenvector entry diff={:.2e}", worst_val, worst_vec)};
}

Outcome fuzzing() {
  std::mt19937_64 rng(1000);
  std::uniform_int_distribution<int> len(1, 64), off(-100, 100);
  int checked = 0;
  double min_eta = INFINITY, worst_mod = -INFINITY, worst_shift = 0.0;
  std::uniform_real_distribution<double> width(0.3, 12.0), phase(-pi, pi), unit(-1.0, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    // Odd trials: modulated, noisy sampled Gaussians, which sit close to 1/4.
    std::vector<cplx> taps = oracle::random_taps(rng, static_cast<std::size_t>(len(rng)));
    if (trial % 2 == 1) {
      const auto g = sampled_gaussian(width(rng));
      const double w0 = phase(rng), chirp = 0.01 * unit(rng), noise = 1e-3 * std::abs(unit(rng));
      taps = g.taps();
      for (std::size_t k = 0; k < taps.size(); ++k) {
        const double kk = static_cast<double>(k);
        taps[k] *= std::polar(1.0, w0 * kk + chirp * kk * kk);
        taps[k] += noise * cplx(unit(rng), unit(rng));
      }
    }
    const Sequence s(std::move(taps), off(rng));
    const long m = off(rng);
    const auto r = analyze(s), rs = analyze(shift(s, m));
    worst_shift = std::max({worst_shift, std::abs(rs.delta_n2 - r.delta_n2),
                            std::abs(rs.delta_wp2 - r.delta_wp2) / (1 + r.delta_wp2),
                            std::abs(rs.mu_n - r.mu_n - static_cast<double>(m)) / (1 + std::abs(r.mu_n) + std::abs(m))});
    if (s.support_size() <= 1 || std::abs(r.tau) == 0.0) continue;
    ++checked;
    min_eta = std::min(min_eta, *r.eta_p);
    const double em = tf_spread_periodic(modulus(s));
    worst_mod = std::max(worst_mod, (em - *r.eta_p) / (1 + *r.eta_p));
  }
  double worst_eps = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double eps = 0.01 + 0.68 * i / 19.0;
    worst_eps = std::max(worst_eps, std::abs(tf_spread_periodic(three_tap(eps)) - three_tap_eta_p(eps)));
  }
  const bool ok = min_eta >= 0.25 - 1e-9 && worst_mod <= 1e-12 && worst_shift <= 1e-12 && worst_eps <= 1e-12;
  return {ok, fmt::format("{} sequences: min eta_p={:.6f} modulus excess={:.2e} shift drift={:.2e}; three-tap "
                          "closed form diff={:.2e}",
                          checked, min_eta, worst_mod, worst_shift, worst_eps)};
}

Outcome dominance() {
  double worst = INFINITY;
  int points = 0;
  for (const auto& f : default_families()) {
    for (const auto& p : spread_scan(f)) {
      const double opt = design_auto(p.report.delta_wp2).eta_p;
      worst = std::min(worst, *p.report.eta_p - opt);
      ++points;
    }
  }
  const auto g = gaussian_with_freq_spread(0.01);
  const double gap = tf_spread_periodic(g) - design_auto(0.01).eta_p;
  return {worst >= -1e-6 && gap <= 0.01,
          fmt::format("{} window points: min(eta_p - optimal)={:.3e}; Gaussian gap at 0.01={:.3e}", points, worst, gap)};
}

}  // namespace

int main() {
  report(1, "sigma2 = 0.1 design, 201 taps", design_at_tenth);
  report(2, "Linear spread of (1, 7, 2)", linear_spread_172);
  report(3, "Certificate suite", certificates);
  report(4, "Bound sandwich", sandwich);
  report(5, "Monotonicity", monotone);
  report(6, "Asymptotes", asymptotes);
  report(7, "Mathieu cross-oracle", mathieu_cross);
  report(8, "Spectrum equals scaled ce0", spectrum_identity);
  report(9, "Oracle equivalence", jacobi_oracle);
  report(10, "Property fuzzing", fuzzing);
  report(11, "Window dominance", dominance);
  std::printf("%d of 11 criteria passed\n", 11 - failures);
  return failures == 0 ? 0 : 1;
}
