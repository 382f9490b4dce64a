#include "tfcompact/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace tfc {

namespace {

void require_positive(double sigma2, const char* what) {
  if (!(sigma2 > 0.0) || !std::isfinite(sigma2))
    throw std::domain_error(std::string(what) + ": frequency spread must be positive and finite");
}

}  // namespace

double eta_lower(double sigma2) {
  require_positive(sigma2, "eta_lower");
  // 1 - sqrt(u) rewritten as (1 - u) / (1 + sqrt(u)) with 1 - u = 1 / (1 + s).
  const double u = sigma2 / (1.0 + sigma2);
  return sigma2 / ((1.0 + sigma2) * (1.0 + std::sqrt(u)));
}

double eta_upper(double sigma2) {
  require_positive(sigma2, "eta_upper");
  const double r = std::sqrt(1.0 + sigma2);
  // r - 1 computed as s / (r + 1) to keep precision for tiny s.
  const double rm1 = sigma2 / (r + 1.0);
  return sigma2 / 8.0 * (r / rm1 - 0.5);
}

double restricted_dual_optimum(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::domain_error("restricted_dual_optimum: alpha outside (0, 1)");
  return 1.0 - std::sqrt(1.0 - alpha * alpha);
}

double mclachlan_a0(double q) {
  if (!(q >= kMcLachlanQMin)) throw std::domain_error("mclachlan_a0: q below the asymptotic range");
  const double s = std::sqrt(q);
  return -2.0 * q + 2.0 * s - 0.25 - 1.0 / (32.0 * s) - (48.0 / 128.0) / q -
         (848.0 / 131072.0) / (q * s) - (4752.0 / 1048576.0) / (q * q) -
         (126752.0 / 1048576.0) / (q * q * s);
}

double mclachlan_a0_standard(double q) {
  if (!(q >= kMcLachlanQMin)) throw std::domain_error("mclachlan_a0_standard: q below the asymptotic range");
  const double s = std::sqrt(q);
  return -2.0 * q + 2.0 * s - 0.25 - 1.0 / (32.0 * s) - (48.0 / 4096.0) / q -
         (848.0 / 131072.0) / (q * s) - (4752.0 / 1048576.0) / (q * q) -
         (126752.0 / 33554432.0) / (q * q * s);
}

double a0_upper_bound(double q) {
  if (!(q > 0.0)) throw std::domain_error("a0_upper_bound: q must be positive");
  return -2.0 * q + 2.0 * std::sqrt(q) - 0.25;
}

}  // namespace tfc
