#include "tfcompact/sequence.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tfc {

Sequence::Sequence(std::vector<cplx> taps, long offset)
    : taps_(std::move(taps)), offset_(offset) {
  if (taps_.empty()) throw std::invalid_argument("Sequence: no taps");
  bool nonzero = false;
  for (const auto& t : taps_) {
    if (!std::isfinite(t.real()) || !std::isfinite(t.imag()))
      throw std::invalid_argument("Sequence: non-finite tap");
    nonzero = nonzero || t != cplx{};
  }
  if (!nonzero) throw std::invalid_argument("Sequence: all taps are zero");
}

Sequence Sequence::from_real(std::span<const double> taps, long offset) {
  return Sequence(std::vector<cplx>(taps.begin(), taps.end()), offset);
}

Sequence Sequence::impulse(long at) { return Sequence({cplx{1.0, 0.0}}, at); }

cplx Sequence::at(long k) const noexcept {
  if (k < first_index() || k > last_index()) return {};
  return taps_[static_cast<std::size_t>(k - offset_)];
}

bool Sequence::is_real() const noexcept {
  return std::all_of(taps_.begin(), taps_.end(), [](const cplx& t) { return t.imag() == 0.0; });
}

std::size_t Sequence::support_size() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(taps_.begin(), taps_.end(), [](const cplx& t) { return t != cplx{}; }));
}

double norm2(const Sequence& s) {
  double e = 0.0;
  for (const auto& t : s.taps()) e += std::norm(t);
  return e;
}

Sequence shift(const Sequence& s, long m) { return Sequence(s.taps(), s.offset() + m); }

Sequence modulus(const Sequence& s) {
  std::vector<cplx> out;
  out.reserve(s.size());
  for (const auto& t : s.taps()) out.emplace_back(std::abs(t), 0.0);
  return Sequence(std::move(out), s.offset());
}

Sequence normalized(const Sequence& s) {
  const double scale = 1.0 / std::sqrt(norm2(s));
  std::vector<cplx> out(s.taps());
  for (auto& t : out) t *= scale;
  return Sequence(std::move(out), s.offset());
}

cplx dtft(const Sequence& s, double omega) {
  // Recurrence on the phasor drifts for long sequences; evaluate each term.
  cplx acc{};
  long k = s.offset();
  for (const auto& t : s.taps()) {
    const double ph = -omega * static_cast<double>(k);
    acc += t * cplx{std::cos(ph), std::sin(ph)};
    ++k;
  }
  return acc;
}

std::vector<cplx> dtft(const Sequence& s, std::span<const double> omegas) {
  std::vector<cplx> out;
  out.reserve(omegas.size());
  for (double w : omegas) {
    if (!std::isfinite(w)) throw std::invalid_argument("dtft: non-finite frequency");
    out.push_back(dtft(s, w));
  }
  return out;
}

cplx autocorrelation(const Sequence& s, long lag) {
  const auto& x = s.taps();
  const long n = static_cast<long>(x.size());
  const long m = lag < 0 ? -lag : lag;
  cplx acc{};
  for (long i = 0; i + m < n; ++i) acc += x[i] * std::conj(x[i + m]);
  return lag < 0 ? std::conj(acc) : acc;
}

}  // namespace tfc
