#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "tfcompact/sequence.hpp"

namespace tfc {

inline constexpr int kDefaultTaps = 201;
inline constexpr double kDefaultTol = 1e-10;
inline constexpr double kTailMassLimit = 1e-10;

/// Minimal-time-spread design for a prescribed periodic frequency spread.
///
/// The semidefinite program min tr(AX) s.t. tr(BX) = alpha, tr(X) = 1,
/// X >= 0 is solved through its two-variable dual
///   max alpha*l1 + l2  s.t.  A - l1 B - l2 I >= 0,
/// whose inner maximization gives l2 = lambda_min(A - l1 B). The optimal
/// sequence is the ground state of A - l1 B at the l1 where x^T B x = alpha,
/// and X = x x^T is the rank-one primal solution.

enum class DesignStatus {
  ok,
  increase_taps,  ///< outermost taps carry more than kTailMassLimit energy
};

struct DesignResult {
  double sigma2 = 0.0;
  double alpha = 0.0;
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double delta_n2_opt = 0.0;
  double eta_p = 0.0;
  Sequence sequence = Sequence::impulse();
  int taps = 0;
  double duality_gap = 0.0;     ///< |x^T A x - (alpha l1 + l2)|
  double constraint_gap = 0.0;  ///< x^T B x - alpha
  double eig_residual = 0.0;    ///< ||(A - l1 B) x - l2 x||
  double tail_mass = 0.0;       ///< x_{-N}^2 + x_N^2
  int iterations = 0;
  DesignStatus status = DesignStatus::ok;
};

class DesignError : public std::runtime_error {
 public:
  enum class Kind { invalid_target, invalid_taps, invalid_tolerance, unattainable, no_convergence };
  DesignError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// 1 / sqrt(1 + sigma2).
double alpha_of(double sigma2);

/// Largest eigenvalue of B on `taps` points, cos(pi / (taps + 1)).
double lambda_max_b(int taps);

/// Smallest frequency spread reachable with `taps` points.
double sigma2_min(int taps);

struct DualValue {
  double g = 0.0;        ///< alpha l1 + l2
  double lambda2 = 0.0;  ///< lambda_min(A - l1 B)
  double b = 0.0;        ///< x^T B x of the ground state; dg/dl1 = alpha - b
};

DualValue dual_value(double lambda1, double alpha, int half_len);

/// Throws DesignError: invalid_target for sigma2 <= 0, invalid_taps for an
/// even or < 5 tap count, invalid_tolerance for tol < 1e-12, unattainable
/// when alpha >= lambda_max_b(taps).
DesignResult design_max_compact(double sigma2, int taps = kDefaultTaps, double tol = kDefaultTol);

/// Same, but grows the tap count until the target is attainable and the
/// tail mass is below kTailMassLimit.
DesignResult design_auto(double sigma2, double tol = kDefaultTol);

struct CurvePoint {
  double sigma2 = 0.0;
  double delta_n2 = 0.0;
  double eta_p = 0.0;
  double eta_lower = 0.0;
  double eta_upper = 0.0;
  bool ok = false;
  std::string error;  ///< set when !ok
};

/// One design per grid value, in grid order. A point that fails to solve is
/// returned with ok = false and NaN design fields.
std::vector<CurvePoint> sweep_curve(std::span<const double> sigma2_grid, int taps = kDefaultTaps,
                                    double tol = kDefaultTol);

}  // namespace tfc
