#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "tfcompact/sequence.hpp"
#include "tfcompact/spreads.hpp"

namespace tfc {

/// Unit-norm Gaussian exp(-k^2 / (2 w^2)) on {-(taps-1)/2 .. (taps-1)/2}.
Sequence sampled_gaussian(double width, int taps);

/// Odd tap count that holds a width-w Gaussian out to 8 w (at least 3).
int gaussian_taps(double width);

/// Sampled Gaussian with its tap count chosen by gaussian_taps.
Sequence sampled_gaussian(double width);

/// (eps, sqrt(1 - 2 eps^2), eps) centered at 0; requires 0 < eps < 1/sqrt 2.
Sequence three_tap(double epsilon);

/// Closed-form periodic time-frequency spread of three_tap(eps):
/// 1 / (2 (1 - 2 eps^2)) - 2 eps^2.
double three_tap_eta_p(double epsilon);

enum class WindowKind { rectangular, triangular, hann, hamming, blackman };

/// Throws std::invalid_argument for an unknown name.
WindowKind parse_window_kind(std::string_view name);
std::string_view window_name(WindowKind kind);

/// Textbook symmetric window of odd length >= 3, centered and unit-normalized.
/// Hann and Blackman keep their zero end points (hann with 3 taps is the
/// impulse (0, 1, 0)). Triangular uses the nonzero-endpoint form
/// 1 - |n - (L-1)/2| / ((L+1)/2).
Sequence standard_window(WindowKind kind, int taps);

struct WindowFamily {
  std::string name;
  std::function<Sequence(double)> generator;
  std::vector<double> parameter_grid;
};

/// Standard window family over taps {5, 9, ..., 401}.
WindowFamily standard_family(WindowKind kind);
/// Sampled Gaussians, widths log-spaced on [0.3, 50] (40 points).
WindowFamily gaussian_family();
/// Three-tap family, eps log-spaced on [0.01, 0.5] (25 points).
WindowFamily three_tap_family();

/// The five standard windows, the Gaussian and the three-tap family.
std::vector<WindowFamily> default_families();

struct ScanPoint {
  std::string family;
  double param = 0.0;
  SpreadReport report;
};

/// Spread report for every grid parameter, sorted by delta_wp2 (stable, so
/// ties keep grid order).
std::vector<ScanPoint> spread_scan(const WindowFamily& family);

/// Sampled Gaussian (auto-sized taps) whose periodic frequency spread equals
/// `delta_wp2`, by bisection on the width.
Sequence gaussian_with_freq_spread(double delta_wp2);

}  // namespace tfc
