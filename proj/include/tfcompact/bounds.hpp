#pragma once

namespace tfc {

/// Smallest q for which the large-q expansion of a0 is evaluated.
inline constexpr double kMcLachlanQMin = 4.0;

/// Analytic lower bound on the time-frequency spread of a maximally compact
/// sequence: s (1 - sqrt(s / (1 + s))). Tends to 1/2 as s grows.
double eta_lower(double sigma2);

/// Small-spread upper bound (s/8) (sqrt(1+s) / (sqrt(1+s) - 1) - 1/2).
/// Derived from an asymptotic expansion; only meaningful for small s.
/// Tends to 1/4 from above as s -> 0.
double eta_upper(double sigma2);

/// Lower bound on the optimal time spread, 1 - sqrt(1 - alpha^2): the optimum
/// of the dual restricted to lambda2 < 1 - sqrt(1 + lambda1^2).
double restricted_dual_optimum(double alpha);

/// Large-q expansion of the order-zero characteristic value, seven terms:
///   -2q + 2 q^{1/2} - 1/4 - q^{-1/2}/32 - (48/2^7) q^{-1} - (848/2^17) q^{-3/2}
///   - (4752/2^20) q^{-2} - (126752/2^20) q^{-5/2}
/// Throws std::domain_error for q < kMcLachlanQMin.
double mclachlan_a0(double q);

/// The same seven-term expansion with the q^{-1} and q^{-5/2} coefficients
/// taken from the standard asymptotic series (48/2^12 and 126752/2^25).
/// Agrees with the eigen-pencil value to about 1e-8 relative at q = 25.
double mclachlan_a0_standard(double q);

/// -2q + 2 sqrt(q) - 1/4. Throws std::domain_error for q <= 0.
double a0_upper_bound(double q);

}  // namespace tfc
