#include "tfcompact/designer.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "tfcompact/bounds.hpp"
#include "tfcompact/pencil.hpp"
#include "tfcompact/tridiag.hpp"

namespace tfc {

namespace {

constexpr int kMaxBracketDoublings = 80;
constexpr int kMaxBisections = 400;
constexpr int kMaxAutoTaps = 1 << 17;

struct GroundState {
  double lambda1 = 0.0;
  EigenPair pair;
  double b = 0.0;
};

// The pencil commutes with the reflection k -> -k and its ground state is
// simple, so the exact eigenvector is even. Mirror-averaging removes the
// rounding asymmetry of inverse iteration; value and residual are then
// recomputed for the averaged vector.
void make_even(const Pencil& p, EigenPair& e) {
  auto& x = e.vector;
  const std::size_t n = x.size();
  double nn = 0.0;
  for (std::size_t i = 0; i < n / 2; ++i) {
    const double m = 0.5 * (x[i] + x[n - 1 - i]);
    x[i] = x[n - 1 - i] = m;
    nn += 2.0 * m * m;
  }
  nn += x[n / 2] * x[n / 2];
  const double inv = 1.0 / std::sqrt(nn);
  for (double& v : x) v *= inv;
  const auto mx = tridiag_apply(p.diag(), p.offdiag(), x);
  double rq = 0.0;
  for (std::size_t i = 0; i < n; ++i) rq += x[i] * mx[i];
  double r2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) r2 += (mx[i] - rq * x[i]) * (mx[i] - rq * x[i]);
  e.value = rq;
  e.residual = std::sqrt(r2);
}

GroundState ground_state(int half_len, double lambda1) {
  const Pencil p(half_len, lambda1, 0.0);
  GroundState gs{lambda1, min_eigenpair(p.diag(), p.offdiag()), 0.0};
  make_even(p, gs.pair);
  const auto& x = gs.pair.vector;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) gs.b += x[i] * x[i + 1];
  return gs;
}

// Distance to feasibility weighted so that it also bounds the duality gap,
// which equals l1 * |b - alpha| for an exact eigenvector.
double weighted_gap(const GroundState& gs, double alpha) {
  return std::abs(gs.b - alpha) * std::max(1.0, gs.lambda1);
}

}  // namespace

double alpha_of(double sigma2) { return 1.0 / std::sqrt(1.0 + sigma2); }

double lambda_max_b(int taps) {
  return std::cos(std::numbers::pi / (static_cast<double>(taps) + 1.0));
}

double sigma2_min(int taps) {
  const double c = lambda_max_b(taps);
  return 1.0 / (c * c) - 1.0;
}

DualValue dual_value(double lambda1, double alpha, int half_len) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("dual_value: alpha outside (0, 1)");
  if (half_len < 2) throw std::invalid_argument("dual_value: half length must be >= 2");
  if (!(lambda1 >= 0.0)) throw std::invalid_argument("dual_value: lambda1 must be nonnegative");
  const auto gs = ground_state(half_len, lambda1);
  return {alpha * lambda1 + gs.pair.value, gs.pair.value, gs.b};
}

DesignResult design_max_compact(double sigma2, int taps, double tol) {
  using Kind = DesignError::Kind;
  if (!(sigma2 > 0.0) || !std::isfinite(sigma2))
    throw DesignError(Kind::invalid_target, "frequency spread must be positive and finite");
  if (taps < 5 || taps % 2 == 0)
    throw DesignError(Kind::invalid_taps, "tap count must be odd and at least 5");
  if (!(tol >= 1e-12) || !std::isfinite(tol))
    throw DesignError(Kind::invalid_tolerance, "tolerance must be finite and at least 1e-12");

  const double alpha = alpha_of(sigma2);
  if (alpha >= lambda_max_b(taps))
    throw DesignError(Kind::unattainable,
                      "taps too few for this frequency spread (minimum reachable spread is " +
                          std::to_string(sigma2_min(taps)) + ")");

  const int half_len = (taps - 1) / 2;

  // b(l1) increases from 0 at l1 = 0 towards lambda_max(B); bracket the root.
  double lo = 0.0;
  double hi = std::max(1.0, 0.125 / ((1.0 - alpha) * (1.0 - alpha)));
  GroundState best = ground_state(half_len, 0.0);
  GroundState at_hi = ground_state(half_len, hi);
  int doublings = 0;
  while (at_hi.b <= alpha) {
    if (++doublings > kMaxBracketDoublings)
      throw DesignError(Kind::no_convergence, "could not bracket the dual multiplier");
    lo = hi;
    best = at_hi;
    hi *= 2.0;
    at_hi = ground_state(half_len, hi);
  }
  if (weighted_gap(at_hi, alpha) < weighted_gap(best, alpha)) best = at_hi;

  int iterations = 0;
  while (weighted_gap(best, alpha) > tol && iterations < kMaxBisections) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    ++iterations;
    GroundState gs = ground_state(half_len, mid);
    if (gs.b < alpha)
      lo = mid;
    else
      hi = mid;
    if (weighted_gap(gs, alpha) < weighted_gap(best, alpha)) best = std::move(gs);
  }

  const auto& x = best.pair.vector;
  const QuadForms qf = quad_forms(x);

  DesignResult r;
  r.sigma2 = sigma2;
  r.alpha = alpha;
  r.lambda1 = best.lambda1;
  r.lambda2 = best.pair.value;
  r.delta_n2_opt = qf.a;
  r.eta_p = qf.a * sigma2;
  r.sequence = Sequence::from_real(x, -static_cast<long>(half_len));
  r.taps = taps;
  r.duality_gap = std::abs(qf.a - (alpha * r.lambda1 + r.lambda2));
  r.constraint_gap = qf.b - alpha;
  r.eig_residual = best.pair.residual;
  r.tail_mass = x.front() * x.front() + x.back() * x.back();
  r.iterations = iterations;
  r.status = r.tail_mass > kTailMassLimit ? DesignStatus::increase_taps : DesignStatus::ok;
  return r;
}

DesignResult design_auto(double sigma2, double tol) {
  if (!(sigma2 > 0.0) || !std::isfinite(sigma2))
    throw DesignError(DesignError::Kind::invalid_target, "frequency spread must be positive and finite");
  // Optimal sequences are close to Gaussians with variance ~ 1 / (4 sigma2)
  // for small spreads; twelve standard deviations of half length is ample.
  const int estimate = static_cast<int>(std::ceil(6.0 / std::sqrt(sigma2))) + 10;
  int taps = std::max(kDefaultTaps, 2 * estimate + 1);
  while (taps <= kMaxAutoTaps) {
    if (sigma2 > sigma2_min(taps)) {
      DesignResult r = design_max_compact(sigma2, taps, tol);
      if (r.status == DesignStatus::ok) return r;
    }
    taps = 2 * taps + 1;
  }
  throw DesignError(DesignError::Kind::unattainable, "frequency spread too small for automatic sizing");
}

std::vector<CurvePoint> sweep_curve(std::span<const double> sigma2_grid, int taps, double tol) {
  std::vector<CurvePoint> out;
  out.reserve(sigma2_grid.size());
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (double s : sigma2_grid) {
    CurvePoint pt;
    pt.sigma2 = s;
    try {
      pt.eta_lower = eta_lower(s);
      pt.eta_upper = eta_upper(s);
      const DesignResult r = design_max_compact(s, taps, tol);
      pt.delta_n2 = r.delta_n2_opt;
      pt.eta_p = r.eta_p;
      pt.ok = true;
      if (r.status == DesignStatus::increase_taps) {
        pt.ok = false;
        pt.error = "tail mass above limit; increase taps";
      }
    } catch (const std::exception& e) {
      pt.delta_n2 = nan;
      pt.eta_p = nan;
      if (!(s > 0.0)) {
        pt.eta_lower = nan;
        pt.eta_upper = nan;
      }
      pt.error = e.what();
    }
    out.push_back(std::move(pt));
  }
  return out;
}

}  // namespace tfc
