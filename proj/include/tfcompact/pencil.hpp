#pragma once

#include <optional>
#include <span>
#include <vector>

namespace tfc {

/// A - lambda1 B - lambda2 I truncated to the index grid {-N, ..., N}.
///
/// A = diag(k^2), B has 1/2 on both first off-diagonals. The result is
/// symmetric tridiagonal with diagonal k^2 - lambda2 and a constant
/// off-diagonal -lambda1 / 2.
class Pencil {
 public:
  Pencil(int half_len, double lambda1, double lambda2);

  int half_len() const noexcept { return half_len_; }
  double lambda1() const noexcept { return lambda1_; }
  double lambda2() const noexcept { return lambda2_; }
  std::size_t size() const noexcept { return diag_.size(); }

  const std::vector<double>& diag() const noexcept { return diag_; }
  double offdiag() const noexcept { return -0.5 * lambda1_; }

  /// Grid index of storage position i.
  long index_at(std::size_t i) const noexcept { return static_cast<long>(i) - half_len_; }

 private:
  int half_len_;
  double lambda1_;
  double lambda2_;
  std::vector<double> diag_;
};

Pencil build_pencil(int half_len, double lambda1, double lambda2);

struct QuadForms {
  double a = 0.0;  ///< x^T A x, the time spread of a centered unit sequence
  double b = 0.0;  ///< x^T B x, its lag-1 autocorrelation
};

/// Quadratic forms of A and B for a unit-norm vector on the centered grid
/// (odd length, center entry is k = 0). Throws std::invalid_argument when
/// | ||x|| - 1 | > 1e-10 or the length is even.
QuadForms quad_forms(std::span<const double> x);

struct PsdCertificate {
  bool psd = false;
  /// Grid index k and value of the first pivot below -1e-12, when not PSD.
  std::optional<long> failing_index;
  double failing_pivot = 0.0;
  /// All LDL^T pivots in grid order (up to and including a failing one).
  std::vector<double> pivots;
};

/// LDL^T elimination s_{i+1} = d_{i+1} - (lambda1^2 / 4) / s_i over the full
/// grid; PSD iff every pivot is >= -1e-12.
PsdCertificate psd_check(const Pencil& p);

/// Sufficient condition lambda2 < 1 - sqrt(1 + lambda1^2) for the infinite
/// pencil to be positive semidefinite.
bool restricted_cone_test(double lambda1, double lambda2);

}  // namespace tfc
