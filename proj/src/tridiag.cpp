#include "tfcompact/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace tfc {

namespace {

constexpr int kMaxInverseIterations = 50;

double norm(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

// LU with partial pivoting of a tridiagonal matrix (the dgttrf/dgttrs
// scheme). Shifted matrices near an eigenvalue are indefinite, so the
// unpivoted Thomas recurrence is not safe here.
class TridiagLU {
 public:
  TridiagLU(std::span<const double> diag, double offdiag, double shift)
      : n_(diag.size()), dl_(n_ > 0 ? n_ - 1 : 0, offdiag), d_(n_), du_(dl_.size(), offdiag),
        du2_(n_ > 1 ? n_ - 2 : 0, 0.0), swapped_(dl_.size(), false) {
    const double tiny = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
    for (std::size_t i = 0; i < n_; ++i) d_[i] = diag[i] - shift;
    for (std::size_t i = 0; i + 1 < n_; ++i) {
      if (std::abs(d_[i]) >= std::abs(dl_[i])) {
        if (d_[i] == 0.0) d_[i] = tiny;
        const double fact = dl_[i] / d_[i];
        dl_[i] = fact;
        d_[i + 1] -= fact * du_[i];
      } else {
        const double fact = d_[i] / dl_[i];
        d_[i] = dl_[i];
        dl_[i] = fact;
        const double temp = du_[i];
        du_[i] = d_[i + 1];
        d_[i + 1] = temp - fact * d_[i + 1];
        if (i + 2 < n_) {
          du2_[i] = du_[i + 1];
          du_[i + 1] = -fact * du_[i + 1];
        }
        swapped_[i] = true;
      }
    }
    if (n_ > 0 && d_[n_ - 1] == 0.0) d_[n_ - 1] = tiny;
  }

  void solve(std::vector<double>& b) const {
    for (std::size_t i = 0; i + 1 < n_; ++i) {
      if (swapped_[i]) std::swap(b[i], b[i + 1]);
      b[i + 1] -= dl_[i] * b[i];
    }
    for (std::size_t j = n_; j-- > 0;) {
      double v = b[j];
      if (j + 1 < n_) v -= du_[j] * b[j + 1];
      if (j + 2 < n_) v -= du2_[j] * b[j + 2];
      b[j] = v / d_[j];
    }
  }

 private:
  std::size_t n_;
  std::vector<double> dl_, d_, du_, du2_;
  std::vector<bool> swapped_;
};

double rayleigh(std::span<const double> diag, double offdiag, std::span<const double> v) {
  const auto mv = tridiag_apply(diag, offdiag, v);
  return std::inner_product(v.begin(), v.end(), mv.begin(), 0.0);
}

double residual_norm(std::span<const double> diag, double offdiag, std::span<const double> v,
                     double value) {
  auto mv = tridiag_apply(diag, offdiag, v);
  for (std::size_t i = 0; i < v.size(); ++i) mv[i] -= value * v[i];
  return norm(mv);
}

void canonicalize_sign(std::vector<double>& v) {
  const std::size_t c = v.size() / 2;
  const double peak = std::abs(*std::max_element(
      v.begin(), v.end(), [](double a, double b) { return std::abs(a) < std::abs(b); }));
  double ref = v[c];
  if (std::abs(ref) <= 1e-8 * peak) {
    ref = *std::max_element(v.begin(), v.end(),
                            [](double a, double b) { return std::abs(a) < std::abs(b); });
  }
  if (ref < 0.0)
    for (double& x : v) x = -x;
}

}  // namespace

std::vector<double> tridiag_apply(std::span<const double> diag, double offdiag,
                                  std::span<const double> x) {
  const std::size_t n = diag.size();
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    double v = diag[i] * x[i];
    if (i > 0) v += offdiag * x[i - 1];
    if (i + 1 < n) v += offdiag * x[i + 1];
    y[i] = v;
  }
  return y;
}

std::size_t sturm_count(std::span<const double> diag, double offdiag, double x) {
  const double e2 = offdiag * offdiag;
  const double pivmin = std::numeric_limits<double>::min() * std::max(1.0, e2);
  std::size_t count = 0;
  double q = 1.0;
  for (std::size_t i = 0; i < diag.size(); ++i) {
    q = (diag[i] - x) - (i > 0 ? e2 / q : 0.0);
    if (std::abs(q) < pivmin) q = -pivmin;
    if (q < 0.0) ++count;
  }
  return count;
}

std::pair<double, double> gershgorin_bounds(std::span<const double> diag, double offdiag) {
  const std::size_t n = diag.size();
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  const double e = std::abs(offdiag);
  for (std::size_t i = 0; i < n; ++i) {
    const double r = e * ((i > 0 ? 1.0 : 0.0) + (i + 1 < n ? 1.0 : 0.0));
    lo = std::min(lo, diag[i] - r);
    hi = std::max(hi, diag[i] + r);
  }
  return {lo, hi};
}

double kth_eigenvalue(std::span<const double> diag, double offdiag, std::size_t k, double tol) {
  if (diag.empty()) throw std::invalid_argument("kth_eigenvalue: empty matrix");
  if (k >= diag.size()) throw std::invalid_argument("kth_eigenvalue: index out of range");
  auto [lo, hi] = gershgorin_bounds(diag, offdiag);
  // Widen slightly so the endpoints bracket strictly.
  const double pad = 2.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(lo), std::abs(hi)) +
                     std::numeric_limits<double>::min();
  lo -= pad;
  hi += pad;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (sturm_count(diag, offdiag, mid) > k)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

double min_eigenvalue(std::span<const double> diag, double offdiag, double tol) {
  return kth_eigenvalue(diag, offdiag, 0, tol);
}

EigenPair min_eigenpair(std::span<const double> diag, double offdiag) {
  if (diag.empty()) throw std::invalid_argument("min_eigenpair: empty matrix");
  const std::size_t n = diag.size();

  if (offdiag == 0.0) {
    const auto it = std::min_element(diag.begin(), diag.end());
    EigenPair p;
    p.value = *it;
    p.vector.assign(n, 0.0);
    p.vector[static_cast<std::size_t>(it - diag.begin())] = 1.0;
    return p;
  }

  const double lambda = min_eigenvalue(diag, offdiag);
  const TridiagLU lu(diag, offdiag, lambda);

  std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
  double value = lambda;
  double res = std::numeric_limits<double>::infinity();
  for (int it = 0; it < kMaxInverseIterations; ++it) {
    std::vector<double> y = v;
    lu.solve(y);
    const double ny = norm(y);
    if (!std::isfinite(ny) || ny == 0.0) throw EigenSolveError("inverse iteration breakdown");
    for (std::size_t i = 0; i < n; ++i) v[i] = y[i] / ny;
    value = rayleigh(diag, offdiag, v);
    const double prev = res;
    res = residual_norm(diag, offdiag, v, value);
    // Two sweeps at least; the first only removes the start vector's bulk.
    if (it >= 1 && (res <= 1e-13 * (1.0 + std::abs(value)) || res > 0.5 * prev)) break;
  }
  if (!(res <= 1e-10 * (1.0 + std::abs(value))))
    throw EigenSolveError("inverse iteration did not converge within 50 steps");

  canonicalize_sign(v);
  return {value, std::move(v), res};
}

}  // namespace tfc
