#include "tfcompact/spreads.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace tfc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Center measured from the first tap, so shifts only move the offset.
double local_center(const Sequence& s) {
  double e = 0.0, m1 = 0.0;
  double i = 0.0;
  for (const auto& t : s.taps()) {
    const double p = std::norm(t);
    e += p;
    m1 += i * p;
    i += 1.0;
  }
  return m1 / e;
}

}  // namespace

double time_center(const Sequence& s) { return static_cast<double>(s.offset()) + local_center(s); }

double time_spread(const Sequence& s) {
  const double mu = local_center(s);
  double e = 0.0, var = 0.0;
  double i = 0.0;
  for (const auto& t : s.taps()) {
    const double p = std::norm(t);
    const double d = i - mu;
    e += p;
    var += d * d * p;
    i += 1.0;
  }
  return var / e;
}

cplx trig_moment(const Sequence& s) { return autocorrelation(s, 1) / norm2(s); }

double periodic_freq_spread(const Sequence& s) {
  const double t2 = std::norm(trig_moment(s));
  if (t2 == 0.0) return kInf;
  return (1.0 - t2) / t2;
}

LinearFreqSpread linear_freq_spread(const Sequence& s) {
  using std::numbers::pi;
  const double e = norm2(s);
  const long n = static_cast<long>(s.size());
  double mu = 0.0;
  double m2 = pi * pi / 3.0;
  for (long m = 1; m < n; ++m) {
    // |X|^2 = sum_m c_m e^{-jwm} with c_m = conj(r_m).
    const cplx c = std::conj(autocorrelation(s, m)) / e;
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    const double md = static_cast<double>(m);
    mu += -2.0 * sign * c.imag() / md;
    m2 += 4.0 * sign * c.real() / (md * md);
  }
  return {mu, m2 - mu * mu};
}

double tf_spread_periodic(const Sequence& s) {
  if (s.support_size() <= 1)
    throw DegenerateSequence("periodic time-frequency spread undefined for a single nonzero tap");
  const double wp = periodic_freq_spread(s);
  if (std::isinf(wp)) return kInf;
  return time_spread(s) * wp;
}

double tf_spread_linear(const Sequence& s) {
  return time_spread(s) * linear_freq_spread(s).delta_wl2;
}

SpreadReport analyze(const Sequence& s) {
  SpreadReport r;
  r.mu_n = time_center(s);
  r.delta_n2 = time_spread(s);
  r.tau = trig_moment(s);
  r.delta_wp2 = periodic_freq_spread(s);
  const auto lin = linear_freq_spread(s);
  r.mu_wl = lin.mu_wl;
  r.delta_wl2 = lin.delta_wl2;
  if (s.support_size() > 1)
    r.eta_p = std::isinf(r.delta_wp2) ? kInf : r.delta_n2 * r.delta_wp2;
  r.eta_l = r.delta_n2 * r.delta_wl2;
  return r;
}

}  // namespace tfc
