#pragma once

#include <complex>
#include <span>
#include <vector>

namespace tfc {

using cplx = std::complex<double>;

/// Finite complex sequence. Tap i sits at time index offset() + i.
///
/// Construction rejects empty tap vectors, non-finite taps and the all-zero
/// sequence, so every measure below can divide by the energy.
class Sequence {
 public:
  Sequence(std::vector<cplx> taps, long offset = 0);

  /// Real-valued convenience constructor.
  static Sequence from_real(std::span<const double> taps, long offset = 0);

  /// Unit impulse at time index `at`.
  static Sequence impulse(long at = 0);

  const std::vector<cplx>& taps() const noexcept { return taps_; }
  long offset() const noexcept { return offset_; }
  std::size_t size() const noexcept { return taps_.size(); }

  long first_index() const noexcept { return offset_; }
  long last_index() const noexcept { return offset_ + static_cast<long>(taps_.size()) - 1; }

  /// Tap at absolute time index k (zero outside the support).
  cplx at(long k) const noexcept;

  bool is_real() const noexcept;

  /// Number of taps with nonzero modulus.
  std::size_t support_size() const noexcept;

  friend bool operator==(const Sequence&, const Sequence&) = default;

 private:
  std::vector<cplx> taps_;
  long offset_ = 0;
};

/// Energy: sum of |x_k|^2.
double norm2(const Sequence& s);

/// Delay by m samples (tap values unchanged, offset += m).
Sequence shift(const Sequence& s, long m);

/// Replace every tap by its modulus.
Sequence modulus(const Sequence& s);

/// Scale to unit energy.
Sequence normalized(const Sequence& s);

/// X(e^{jw}) = sum_k x_k e^{-jwk}, evaluated by direct summation.
std::vector<cplx> dtft(const Sequence& s, std::span<const double> omegas);
cplx dtft(const Sequence& s, double omega);

/// r_m = sum_k x_k conj(x_{k+m}).  r_0 is the energy and r_{-m} = conj(r_m).
cplx autocorrelation(const Sequence& s, long lag);

}  // namespace tfc
