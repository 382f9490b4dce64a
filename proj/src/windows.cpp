#include "tfcompact/windows.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tfc {

namespace {

Sequence centered_real(std::vector<double> w) {
  const long half = static_cast<long>(w.size() / 2);
  return normalized(Sequence::from_real(w, -half));
}

void require_odd_taps(int taps, int min_taps) {
  if (taps < min_taps || taps % 2 == 0)
    throw std::invalid_argument("window: tap count must be odd and at least " + std::to_string(min_taps));
}

std::vector<double> log_grid(double a, double b, int n) {
  std::vector<double> g(static_cast<std::size_t>(n));
  const double la = std::log(a), lb = std::log(b);
  for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)] = std::exp(la + (lb - la) * i / (n - 1));
  g.front() = a;
  g.back() = b;
  return g;
}

std::vector<double> taps_grid() {
  std::vector<double> g;
  for (int t = 5; t <= 401; t += 4) g.push_back(t);
  return g;
}

}  // namespace

Sequence sampled_gaussian(double width, int taps) {
  if (!(width > 0.0) || !std::isfinite(width)) throw std::invalid_argument("sampled_gaussian: width must be positive");
  require_odd_taps(taps, 3);
  const int half = (taps - 1) / 2;
  std::vector<double> w(static_cast<std::size_t>(taps));
  for (int k = -half; k <= half; ++k)
    w[static_cast<std::size_t>(k + half)] = std::exp(-0.5 * k * k / (width * width));
  return centered_real(std::move(w));
}

int gaussian_taps(double width) {
  return 2 * std::max(1, static_cast<int>(std::ceil(8.0 * width))) + 1;
}

Sequence sampled_gaussian(double width) { return sampled_gaussian(width, gaussian_taps(width)); }

Sequence three_tap(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0 / std::numbers::sqrt2))
    throw std::invalid_argument("three_tap: epsilon must lie in (0, 1/sqrt(2))");
  const double c = std::sqrt(1.0 - 2.0 * epsilon * epsilon);
  return Sequence::from_real(std::vector<double>{epsilon, c, epsilon}, -1);
}

double three_tap_eta_p(double epsilon) {
  const double e2 = epsilon * epsilon;
  return 1.0 / (2.0 * (1.0 - 2.0 * e2)) - 2.0 * e2;
}

WindowKind parse_window_kind(std::string_view name) {
  if (name == "rectangular") return WindowKind::rectangular;
  if (name == "triangular") return WindowKind::triangular;
  if (name == "hann") return WindowKind::hann;
  if (name == "hamming") return WindowKind::hamming;
  if (name == "blackman") return WindowKind::blackman;
  throw std::invalid_argument("unknown window: " + std::string(name));
}

std::string_view window_name(WindowKind kind) {
  switch (kind) {
    case WindowKind::rectangular: return "rectangular";
    case WindowKind::triangular: return "triangular";
    case WindowKind::hann: return "hann";
    case WindowKind::hamming: return "hamming";
    case WindowKind::blackman: return "blackman";
  }
  return "?";
}

Sequence standard_window(WindowKind kind, int taps) {
  require_odd_taps(taps, 3);
  using std::numbers::pi;
  const double L = taps;
  std::vector<double> w(static_cast<std::size_t>(taps));
  for (int n = 0; n < taps; ++n) {
    const double ph = 2.0 * pi * n / (L - 1.0);
    double v = 1.0;
    switch (kind) {
      case WindowKind::rectangular: v = 1.0; break;
      case WindowKind::triangular: v = 1.0 - std::abs(n - (L - 1.0) / 2.0) / ((L + 1.0) / 2.0); break;
      case WindowKind::hann: v = 0.5 - 0.5 * std::cos(ph); break;
      case WindowKind::hamming: v = 0.54 - 0.46 * std::cos(ph); break;
      case WindowKind::blackman: v = 0.42 - 0.5 * std::cos(ph) + 0.08 * std::cos(2.0 * ph); break;
    }
    // Endpoint zeros of hann/blackman come out as +-1e-17.
    w[static_cast<std::size_t>(n)] = std::abs(v) < 1e-14 ? 0.0 : v;
  }
  // Exact symmetry regardless of cosine rounding.
  for (int n = 0; n < taps / 2; ++n) w[static_cast<std::size_t>(taps - 1 - n)] = w[static_cast<std::size_t>(n)];
  return centered_real(std::move(w));
}

WindowFamily standard_family(WindowKind kind) {
  return {std::string(window_name(kind)),
          [kind](double taps) { return standard_window(kind, static_cast<int>(std::lround(taps))); },
          taps_grid()};
}

WindowFamily gaussian_family() {
  return {"gaussian", [](double w) { return sampled_gaussian(w); }, log_grid(0.3, 50.0, 40)};
}

WindowFamily three_tap_family() {
  return {"three_tap", [](double e) { return three_tap(e); }, log_grid(0.01, 0.5, 25)};
}

std::vector<WindowFamily> default_families() {
  std::vector<WindowFamily> f;
  for (auto k : {WindowKind::rectangular, WindowKind::triangular, WindowKind::hann, WindowKind::hamming,
                 WindowKind::blackman})
    f.push_back(standard_family(k));
  f.push_back(gaussian_family());
  f.push_back(three_tap_family());
  return f;
}

std::vector<ScanPoint> spread_scan(const WindowFamily& family) {
  std::vector<ScanPoint> pts;
  pts.reserve(family.parameter_grid.size());
  for (double p : family.parameter_grid) pts.push_back({family.name, p, analyze(family.generator(p))});
  std::stable_sort(pts.begin(), pts.end(),
                   [](const ScanPoint& a, const ScanPoint& b) { return a.report.delta_wp2 < b.report.delta_wp2; });
  return pts;
}

Sequence gaussian_with_freq_spread(double delta_wp2) {
  if (!(delta_wp2 > 0.0) || !std::isfinite(delta_wp2))
    throw std::invalid_argument("gaussian_with_freq_spread: target must be positive");
  // Spread falls monotonically with width: wide ~ 1/(2 w^2), narrow -> inf.
  double lo = 0.05, hi = 1.0;
  while (periodic_freq_spread(sampled_gaussian(hi)) > delta_wp2) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e6) throw std::invalid_argument("gaussian_with_freq_spread: target too small");
  }
  if (periodic_freq_spread(sampled_gaussian(lo)) < delta_wp2)
    throw std::invalid_argument("gaussian_with_freq_spread: target too large");
  for (int i = 0; i < 200 && hi - lo > 1e-14 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (periodic_freq_spread(sampled_gaussian(mid)) > delta_wp2)
      lo = mid;
    else
      hi = mid;
  }
  return sampled_gaussian(0.5 * (lo + hi));
}

}  // namespace tfc
