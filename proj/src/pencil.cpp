#include "tfcompact/pencil.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace tfc {

namespace {

constexpr double kPivotTol = 1e-12;

}  // namespace

Pencil::Pencil(int half_len, double lambda1, double lambda2)
    : half_len_(half_len), lambda1_(lambda1), lambda2_(lambda2) {
  if (half_len < 1) throw std::invalid_argument("Pencil: half length must be >= 1");
  diag_.resize(2 * static_cast<std::size_t>(half_len) + 1);
  for (std::size_t i = 0; i < diag_.size(); ++i) {
    const double k = static_cast<double>(index_at(i));
    diag_[i] = k * k - lambda2;
  }
}

Pencil build_pencil(int half_len, double lambda1, double lambda2) {
  return Pencil(half_len, lambda1, lambda2);
}

QuadForms quad_forms(std::span<const double> x) {
  if (x.size() % 2 == 0) throw std::invalid_argument("quad_forms: grid length must be odd");
  double nn = 0.0;
  for (double v : x) nn += v * v;
  if (std::abs(std::sqrt(nn) - 1.0) > 1e-10)
    throw std::invalid_argument("quad_forms: vector is not unit norm");

  const long half = static_cast<long>(x.size() / 2);
  QuadForms q;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double k = static_cast<double>(static_cast<long>(i) - half);
    q.a += k * k * x[i] * x[i];
    if (i + 1 < x.size()) q.b += x[i] * x[i + 1];
  }
  return q;
}

PsdCertificate psd_check(const Pencil& p) {
  const auto& d = p.diag();
  const double e2 = 0.25 * p.lambda1() * p.lambda1();
  PsdCertificate cert;
  cert.pivots.reserve(d.size());
  double s = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    // A non-positive pivot (within tolerance) followed by a nonzero coupling
    // makes the matrix indefinite: the next pivot is -inf.
    double fill = 0.0;
    if (i > 0 && e2 != 0.0) fill = s > 0.0 ? e2 / s : std::numeric_limits<double>::infinity();
    s = d[i] - fill;
    cert.pivots.push_back(s);
    if (!(s >= -kPivotTol)) {
      cert.failing_index = p.index_at(i);
      cert.failing_pivot = s;
      return cert;
    }
  }
  cert.psd = true;
  return cert;
}

bool restricted_cone_test(double lambda1, double lambda2) {
  return lambda2 < 1.0 - std::sqrt(1.0 + lambda1 * lambda1);
}

}  // namespace tfc
