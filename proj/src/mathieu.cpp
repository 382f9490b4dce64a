#include "tfcompact/mathieu.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "tfcompact/pencil.hpp"
#include "tfcompact/tridiag.hpp"

namespace tfc {

namespace {

constexpr double kEdgeTol = 1e-12;
constexpr int kMaxHalfLen = 1 << 16;

EigenPair ground(double q, int half_len) {
  const Pencil p(half_len, 0.5 * std::abs(q), 0.0);
  return min_eigenpair(p.diag(), p.offdiag());
}

bool edges_small(const EigenPair& e) {
  return std::abs(e.vector.front()) < kEdgeTol && std::abs(e.vector.back()) < kEdgeTol;
}

// Ground state on an automatically sized grid.
std::pair<EigenPair, int> sized_ground(double q, int half_len) {
  if (!std::isfinite(q)) throw std::invalid_argument("Mathieu: q must be finite");
  int n = std::max(half_len, 8);
  for (;;) {
    EigenPair e = ground(q, n);
    if (edges_small(e)) return {std::move(e), n};
    if (n >= kMaxHalfLen) throw std::runtime_error("Mathieu: grid growth limit reached");
    n *= 2;
  }
}

}  // namespace

int auto_half_len(double q, int min_half_len) { return sized_ground(q, min_half_len).second; }

double char_value_a0(double q, int half_len) {
  if (q == 0.0) return 0.0;
  return 4.0 * sized_ground(q, half_len).first.value;
}

std::vector<double> ce0_at(const MathieuEval& m, std::span<const double> thetas) {
  const auto& x = m.fourier_coeffs;
  const int n = m.half_len;
  const double c = m.normalization.ce_scale;
  const bool flip = m.q > 0.0;
  std::vector<double> out;
  out.reserve(thetas.size());
  for (double th : thetas) {
    // Sum smallest terms first.
    double acc = 0.0;
    for (int k = n; k >= 1; --k) {
      const double sk = (flip && (k % 2 == 1)) ? -1.0 : 1.0;
      acc += 2.0 * sk * x[static_cast<std::size_t>(n + k)] * std::cos(2.0 * k * th);
    }
    acc += x[static_cast<std::size_t>(n)];
    out.push_back(c * acc);
  }
  return out;
}

MathieuEval ce0(double q, std::span<const double> thetas, int half_len) {
  MathieuEval m;
  m.q = q;
  m.thetas.assign(thetas.begin(), thetas.end());
  m.normalization.ce_l2_target = std::numbers::pi;
  m.normalization.ce_scale = 1.0 / std::numbers::sqrt2;
  m.normalization.gamma0 = std::numbers::sqrt2;

  if (q == 0.0) {
    m.half_len = std::max(half_len, 1);
    m.a0 = 0.0;
    m.fourier_coeffs.assign(2 * static_cast<std::size_t>(m.half_len) + 1, 0.0);
    m.fourier_coeffs[static_cast<std::size_t>(m.half_len)] = 1.0;
  } else {
    auto [e, n] = sized_ground(q, half_len);
    m.half_len = n;
    m.a0 = 4.0 * e.value;
    m.fourier_coeffs = std::move(e.vector);
  }
  m.ce0_values = ce0_at(m, thetas);
  return m;
}

}  // namespace tfc
