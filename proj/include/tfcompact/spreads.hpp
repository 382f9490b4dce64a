#pragma once

#include <optional>
#include <stdexcept>

#include "tfcompact/sequence.hpp"

namespace tfc {

/// Raised when a time-frequency product is requested for a sequence with a
/// single nonzero tap (time spread 0, periodic frequency spread infinite).
class DegenerateSequence : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct LinearFreqSpread {
  double mu_wl = 0.0;      ///< linear frequency center, radians
  double delta_wl2 = 0.0;  ///< linear frequency variance over [-pi, pi)
};

/// Every center/spread measure of one sequence.
///
/// `eta_p` is empty exactly when the sequence has one nonzero tap; the
/// product 0 * inf is reported as missing instead of being evaluated.
/// `delta_wp2` and `eta_p` are +inf when the first trigonometric moment
/// vanishes.
struct SpreadReport {
  double mu_n = 0.0;
  double delta_n2 = 0.0;
  cplx tau{};
  double delta_wp2 = 0.0;
  double mu_wl = 0.0;
  double delta_wl2 = 0.0;
  std::optional<double> eta_p;
  double eta_l = 0.0;

  /// Periodic frequency "center" 1 - tau. Metadata only.
  cplx mu_wp() const { return cplx{1.0, 0.0} - tau; }
};

double time_center(const Sequence& s);
double time_spread(const Sequence& s);

/// First trigonometric moment, (sum_k x_k conj(x_{k+1})) / ||x||^2.
cplx trig_moment(const Sequence& s);

/// (1 - |tau|^2) / |tau|^2, or +inf when tau == 0.
double periodic_freq_spread(const Sequence& s);

/// Closed form from the autocorrelation sequence:
///   mu     = sum_{m>=1} 2 (-1)^{m+1} Im(r_m*) / m
///   M2     = pi^2/3 + 4 sum_{m>=1} (-1)^m Re(r_m) / m^2
///   spread = M2 - mu^2
/// with r normalized by the energy.
LinearFreqSpread linear_freq_spread(const Sequence& s);

/// delta_n2 * delta_wp2. Throws DegenerateSequence for a single nonzero tap.
double tf_spread_periodic(const Sequence& s);

/// delta_n2 * delta_wl2.
double tf_spread_linear(const Sequence& s);

SpreadReport analyze(const Sequence& s);

}  // namespace tfc
