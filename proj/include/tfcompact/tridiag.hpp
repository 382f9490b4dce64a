#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace tfc {

/// Symmetric tridiagonal matrices with a constant off-diagonal, the only
/// shape the pencil family produces.

struct EigenPair {
  double value = 0.0;
  std::vector<double> vector;  ///< unit 2-norm
  double residual = 0.0;       ///< ||M v - value v||_2
};

class EigenSolveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Number of eigenvalues strictly below x (Sturm sequence count).
std::size_t sturm_count(std::span<const double> diag, double offdiag, double x);

/// Gershgorin interval containing the whole spectrum.
std::pair<double, double> gershgorin_bounds(std::span<const double> diag, double offdiag);

/// k-th smallest eigenvalue (k = 0 is the minimum) by bisection on the Sturm
/// count, to absolute tolerance `tol` or until the bracket stops shrinking.
double kth_eigenvalue(std::span<const double> diag, double offdiag, std::size_t k,
                      double tol = 1e-12);

double min_eigenvalue(std::span<const double> diag, double offdiag, double tol = 1e-12);

/// Smallest eigenpair. The eigenvalue is bisected, the vector comes from
/// inverse iteration started at the normalized all-ones vector, and the
/// reported value is the Rayleigh quotient of the final vector. The sign is
/// fixed so the center entry (or, if that vanishes, the largest-magnitude
/// entry) is positive. With a zero off-diagonal the unit vector at the first
/// minimal diagonal entry is returned directly.
///
/// Throws EigenSolveError if inverse iteration does not reach
/// residual <= 1e-10 * (1 + |value|) within 50 steps.
EigenPair min_eigenpair(std::span<const double> diag, double offdiag);

/// y = M x for the tridiagonal M.
std::vector<double> tridiag_apply(std::span<const double> diag, double offdiag,
                                  std::span<const double> x);

}  // namespace tfc
