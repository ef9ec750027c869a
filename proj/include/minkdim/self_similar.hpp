#ifndef MINKDIM_SELF_SIMILAR_HPP
#define MINKDIM_SELF_SIMILAR_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "minkdim/continued_fraction.hpp"
#include "minkdim/minkowski.hpp"

namespace minkdim {

// Geometry of the image set G(E_K) and of its construction pieces, the
// image cylinders G({x in E_K : x = [0; w, ...]}). Everything here is exact.
//
// For S > 2 the extremes use the alternating words (k_1, k_S) and (k_S, k_1);
// with S = 2 they coincide with the two-digit closed forms.

/// Periodic word whose G value is sup G(E_K): [0; (k_1, k_S)].
inline ContinuedFraction sup_word(const DigitSet& k) {
  return ContinuedFraction::periodic({}, {k.min(), k.max()});
}

/// Periodic word whose G value is inf G(E_K): [0; (k_S, k_1)].
inline ContinuedFraction inf_word(const DigitSet& k) {
  return ContinuedFraction::periodic({}, {k.max(), k.min()});
}

/// 2 (2^{k_S} - 1) / (2^{k_1 + k_S} - 1)
inline Rational delta0_sup(const DigitSet& k) {
  BigInt den = pow2(std::uint64_t(k.min()) + k.max()) - 1;
  return Rational(2 * (pow2(k.max()) - 1), den);
}

/// 2 (2^{k_1} - 1) / (2^{k_1 + k_S} - 1)
inline Rational delta0_inf(const DigitSet& k) {
  BigInt den = pow2(std::uint64_t(k.min()) + k.max()) - 1;
  return Rational(2 * (pow2(k.min()) - 1), den);
}

inline Rational delta0_diameter(const DigitSet& k) { return delta0_sup(k) - delta0_inf(k); }

/// Rank-n indicative set D_n: values (-1)^n (2^-a_{n+1} - 2^-(a_{n+1}+a_{n+2}) + ...)
/// over digits in K.
struct IndicativeSetSpec {
  DigitSet k;
  std::size_t rank = 0;
};

/// D_n = (-1)^n G(E_K) / 2, so its extremes swap with the parity of n.
inline Rational indicative_sup(const IndicativeSetSpec& spec) {
  return spec.rank % 2 == 0 ? delta0_sup(spec.k) / 2 : -delta0_inf(spec.k) / 2;
}

inline Rational indicative_inf(const IndicativeSetSpec& spec) {
  return spec.rank % 2 == 0 ? delta0_inf(spec.k) / 2 : -delta0_sup(spec.k) / 2;
}

inline Rational indicative_diameter(const IndicativeSetSpec& spec) {
  return indicative_sup(spec) - indicative_inf(spec);
}

struct ImageCylinder {
  std::vector<Digit> word;
  /// Minimal segment containing the cylinder; endpoints are its exact inf/sup.
  RationalInterval hull;
  /// Dyadic bracket from the series partial sums ([0, 1] for the empty word).
  DyadicInterval enclosure;
  Rational diameter;
};

namespace detail {

inline RationalInterval image_hull(const SeriesHead& head, const Rational& sup0,
                                   const Rational& inf0) {
  Rational p = head.sum.to_rational();
  Rational scale(BigInt(1), pow2(head.digit_sum));
  if (head.next_sign() > 0) return {p + scale * inf0, p + scale * sup0};
  return {p - scale * sup0, p - scale * inf0};
}

inline ImageCylinder make_image_cylinder(std::span<const Digit> word, const SeriesHead& head,
                                         const Rational& sup0, const Rational& inf0) {
  ImageCylinder c;
  c.word.assign(word.begin(), word.end());
  c.hull = image_hull(head, sup0, inf0);
  c.enclosure = word.empty() ? DyadicInterval(DyadicRational(0, 0), DyadicRational(1, 0))
                             : g_enclosure(word);
  c.diameter = c.hull.length();
  return c;
}

}  // namespace detail

/// The image cylinder for `word` (digits drawn from K; may be empty for the
/// whole image set).
inline ImageCylinder image_cylinder(const DigitSet& k, std::span<const Digit> word) {
  for (Digit d : word)
    if (!k.contains(d))
      throw invalid_argument("digit " + std::to_string(d) + " is not in " + k.to_string());
  return detail::make_image_cylinder(word, series_head(word), delta0_sup(k), delta0_inf(k));
}

/// Visits every image cylinder of word length `depth` in lexicographic order.
/// depth = 0 visits the whole image set once.
template <class Visitor>
void for_each_image_cylinder(const DigitSet& k, std::size_t depth, Visitor&& visit,
                             std::uint64_t budget = default_cylinder_budget) {
  checked_cylinder_count(k.size(), depth, budget);
  const Rational sup0 = delta0_sup(k);
  const Rational inf0 = delta0_inf(k);
  if (depth == 0) {
    visit(detail::make_image_cylinder({}, SeriesHead{}, sup0, inf0));
    return;
  }

  std::vector<Digit> word(depth);
  std::vector<std::size_t> index(depth, 0);
  std::vector<SeriesHead> heads(depth + 1);
  std::size_t level = 0;
  while (true) {
    word[level] = k[index[level]];
    SeriesHead h = heads[level];
    h.digit_sum += word[level];
    DyadicRational term(2, h.digit_sum);
    h.sum = h.length % 2 == 0 ? h.sum + term : h.sum - term;
    ++h.length;
    heads[level + 1] = std::move(h);
    if (level + 1 < depth) {
      ++level;
      index[level] = 0;
      continue;
    }
    visit(detail::make_image_cylinder(word, heads[depth], sup0, inf0));
    while (++index[level] == k.size()) {
      if (level == 0) return;
      --level;
    }
  }
}

inline std::vector<ImageCylinder> enumerate_image_cylinders(
    const DigitSet& k, std::size_t depth, std::uint64_t budget = default_cylinder_budget) {
  std::vector<ImageCylinder> out;
  out.reserve(checked_cylinder_count(k.size(), depth, budget));
  for_each_image_cylinder(
      k, depth, [&](ImageCylinder c) { out.push_back(std::move(c)); }, budget);
  return out;
}

}  // namespace minkdim

#endif  // MINKDIM_SELF_SIMILAR_HPP
