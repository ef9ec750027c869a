#ifndef MINKDIM_MINKOWSKI_HPP
#define MINKDIM_MINKOWSKI_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "minkdim/continued_fraction.hpp"
#include "minkdim/dyadic.hpp"

namespace minkdim {

/// Head of the series G(x) = sum_m (-1)^(m-1) 2^(1 - (a_1 + ... + a_m)) over a
/// finite word: the partial sum, the digit total, and the word length.
struct SeriesHead {
  DyadicRational sum;
  std::uint64_t digit_sum = 0;
  std::size_t length = 0;

  /// Sign (+1/-1) carried by the next term, (-1)^length.
  int next_sign() const { return length % 2 == 0 ? 1 : -1; }
};

inline SeriesHead series_head(std::span<const Digit> word) {
  SeriesHead h;
  for (Digit a : word) {
    if (a < 1) throw invalid_argument("partial quotients must be >= 1");
    h.digit_sum += a;
    // 2^(1 - A) = 2 / 2^A
    DyadicRational term(2, h.digit_sum);
    h.sum = h.length % 2 == 0 ? h.sum + term : h.sum - term;
    ++h.length;
  }
  return h;
}

/// Exact G at a finite continued fraction.
inline DyadicRational g_finite(std::span<const Digit> digits) {
  if (digits.empty()) throw invalid_argument("g_finite needs at least one digit");
  return series_head(digits).sum;
}

inline DyadicRational g_finite(const ContinuedFraction& cf) {
  if (!cf.is_finite()) throw invalid_argument("g_finite needs a finite expansion");
  return g_finite(std::span<const Digit>(cf.preperiod()));
}

/// Interval containing G(x) for every x = [0; prefix, ...], finite or infinite
/// continuation. G(x) = P + (-1)^n 2^-A G(tail) with G(tail) in [0, 1], so the
/// bracket runs from the partial sum P to the next partial sum with a_{n+1}=1.
inline DyadicInterval g_enclosure(std::span<const Digit> prefix) {
  if (prefix.empty()) throw invalid_argument("g_enclosure needs a nonempty prefix");
  SeriesHead h = series_head(prefix);
  DyadicRational step = DyadicRational::inverse_pow2(h.digit_sum);
  DyadicRational other = h.next_sign() > 0 ? h.sum + step : h.sum - step;
  return h.sum < other ? DyadicInterval(h.sum, other) : DyadicInterval(other, h.sum);
}

/// Exact G at a finite or eventually periodic continued fraction.
///
/// For x = [0; u, (v)] the tail y = G([0; (v)]) satisfies
/// y = P_v + 2^-A_v y' with the period doubled when |v| is odd, so every
/// block enters with the same sign and y = P_v / (1 - 2^-A_v).
inline Rational g_periodic(const ContinuedFraction& cf) {
  if (cf.is_finite()) return g_finite(cf).to_rational();
  std::vector<Digit> block = cf.period();
  if (block.size() % 2 == 1) block.insert(block.end(), cf.period().begin(), cf.period().end());
  SeriesHead v = series_head(block);
  BigInt scale = pow2(v.digit_sum);
  Rational tail = v.sum.to_rational() * Rational(scale, scale - 1);

  SeriesHead u = series_head(cf.preperiod());
  Rational shifted = tail / Rational(pow2(u.digit_sum));
  return u.sum.to_rational() + (u.next_sign() > 0 ? shifted : -shifted);
}

}  // namespace minkdim

#endif  // MINKDIM_MINKOWSKI_HPP
