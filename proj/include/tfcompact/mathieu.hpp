#pragma once

#include <span>
#include <vector>

namespace tfc {

/// Order-zero Mathieu characteristic value and even periodic solution,
/// computed from the ground state of the pencil A - (|q|/2) B.
///
/// If x is the unit-norm, positive, symmetric ground state on {-N..N} with
/// eigenvalue l2, then a0(q) = 4 l2 and
///   ce0(q; theta) = (1/sqrt 2) (x_0 + 2 sum_{k>=1} s^k x_k cos(2 k theta)),
/// with s = +1 for q <= 0 and s = -1 for q > 0 (ce0(q; theta) equals
/// ce0(-q; pi/2 - theta)). The 1/sqrt 2 factor gives the usual
/// normalization integral_0^{2pi} ce0^2 = pi.

struct MathieuNormalization {
  /// Target of integral_0^{2 pi} ce0^2 d theta.
  double ce_l2_target = 0.0;
  /// Factor c in ce0(theta) = c * X(2 theta) for the unit-energy sequence x.
  double ce_scale = 0.0;
  /// gamma0 = 1 / c, so X(w) = gamma0 * ce0(-2 l1; w / 2) for ||x||_2 = 1,
  /// i.e. (1 / 2 pi) integral |X|^2 = 1 over one period.
  double gamma0 = 0.0;
};

struct MathieuEval {
  double q = 0.0;
  double a0 = 0.0;
  std::vector<double> thetas;
  std::vector<double> ce0_values;
  MathieuNormalization normalization;
  /// Pencil ground state x_{-N} .. x_N (all positive for q != 0).
  std::vector<double> fourier_coeffs;
  int half_len = 0;
};

/// Half length at which the ground state of A - (|q|/2) B has both edge taps
/// below 1e-12, starting from max(min_half_len, 8) and doubling.
int auto_half_len(double q, int min_half_len = 0);

/// a0(q) = 4 lambda_min(A - (|q|/2) B). `half_len` <= 0 selects auto sizing;
/// a positive value is used as a lower bound and grown if needed.
double char_value_a0(double q, int half_len = 0);

MathieuEval ce0(double q, std::span<const double> thetas, int half_len = 0);

/// Evaluate the ce0 series of an existing evaluation at new angles.
std::vector<double> ce0_at(const MathieuEval& m, std::span<const double> thetas);

}  // namespace tfc
