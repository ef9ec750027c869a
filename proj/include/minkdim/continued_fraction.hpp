#ifndef MINKDIM_CONTINUED_FRACTION_HPP
#define MINKDIM_CONTINUED_FRACTION_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "minkdim/error.hpp"
#include "minkdim/rational.hpp"

namespace minkdim {

/// A partial quotient a_n >= 1.
using Digit = std::uint32_t;

/// Default cap on the number of cylinders an enumeration may visit.
inline constexpr std::uint64_t default_cylinder_budget = 2'000'000;

namespace detail {

inline void require_digits(std::span<const Digit> digits) {
  for (Digit d : digits)
    if (d < 1) throw invalid_argument("partial quotients must be >= 1");
}

/// Length of the shortest word u with w = u^m.
inline std::size_t primitive_root_length(std::span<const Digit> w) {
  const std::size_t n = w.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool ok = true;
    for (std::size_t i = p; i < n && ok; ++i) ok = w[i] == w[i - p];
    if (ok) return p;
  }
  return n;
}

}  // namespace detail

/// x = [0; preperiod, period, period, ...]. An empty period means a finite
/// expansion. Periodic expansions are stored with a primitive period and the
/// shortest possible preperiod, so equal values compare equal.
class ContinuedFraction {
 public:
  ContinuedFraction() : preperiod_{1} {}

  explicit ContinuedFraction(std::vector<Digit> preperiod,
                             std::vector<Digit> period = {})
      : preperiod_(std::move(preperiod)), period_(std::move(period)) {
    detail::require_digits(preperiod_);
    detail::require_digits(period_);
    if (period_.empty() && preperiod_.empty())
      throw invalid_argument("finite continued fraction needs a digit");
    if (!period_.empty()) normalize_period();
  }

  static ContinuedFraction finite(std::vector<Digit> digits) {
    return ContinuedFraction(std::move(digits));
  }
  static ContinuedFraction periodic(std::vector<Digit> preperiod,
                                    std::vector<Digit> period) {
    if (period.empty()) throw invalid_argument("period must be nonempty");
    return ContinuedFraction(std::move(preperiod), std::move(period));
  }

  const std::vector<Digit>& preperiod() const { return preperiod_; }
  const std::vector<Digit>& period() const { return period_; }
  bool is_finite() const { return period_.empty(); }

  /// Finite form whose last digit is >= 2, or exactly [0;1].
  bool is_canonical() const {
    if (!is_finite()) return true;
    return preperiod_.back() >= 2 || preperiod_.size() == 1;
  }

  /// Number of available digits; only meaningful for finite expansions.
  std::size_t size() const { return preperiod_.size(); }

  /// The i-th partial quotient (0-based), unrolling the period.
  Digit digit(std::size_t i) const {
    if (i < preperiod_.size()) return preperiod_[i];
    if (period_.empty()) throw invalid_argument("digit index past end of finite expansion");
    return period_[(i - preperiod_.size()) % period_.size()];
  }

  std::vector<Digit> unrolled(std::size_t n) const {
    std::vector<Digit> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(digit(i));
    return out;
  }

  /// "[0; 2, 3]" or "[0; 1, (1, 2)]" with the period in parentheses.
  std::string to_string() const {
    std::string s = "[0;";
    bool first = true;
    auto emit = [&](Digit d) {
      s += first ? " " : ", ";
      s += std::to_string(d);
      first = false;
    };
    for (Digit d : preperiod_) emit(d);
    if (!period_.empty()) {
      s += first ? " (" : ", (";
      first = true;
      for (Digit d : period_) {
        s += first ? "" : ", ";
        s += std::to_string(d);
        first = false;
      }
      s += ")";
    }
    return s + "]";
  }

  friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;

 private:
  void normalize_period() {
    period_.resize(detail::primitive_root_length(period_));
    // [0; u, c, (v..., c)] == [0; u, (c, v...)]
    while (!preperiod_.empty() && preperiod_.back() == period_.back()) {
      preperiod_.pop_back();
      std::rotate(period_.rbegin(), period_.rbegin() + 1, period_.rend());
    }
  }

  std::vector<Digit> preperiod_;
  std::vector<Digit> period_;
};

/// Sorted, distinct digits {k_1 < ... < k_S} with S >= 2.
class DigitSet {
 public:
  explicit DigitSet(std::vector<Digit> digits) : digits_(std::move(digits)) {
    std::sort(digits_.begin(), digits_.end());
    detail::require_digits(digits_);
    if (std::adjacent_find(digits_.begin(), digits_.end()) != digits_.end())
      throw invalid_argument("digit set entries must be distinct");
    if (digits_.size() < 2)
      throw invalid_argument("digit set needs at least two digits (S > 1)");
  }

  /// {1, ..., n}
  static DigitSet range(Digit first, Digit last) {
    std::vector<Digit> d;
    for (Digit k = first; k <= last; ++k) d.push_back(k);
    return DigitSet(std::move(d));
  }

  std::size_t size() const { return digits_.size(); }
  Digit min() const { return digits_.front(); }
  Digit max() const { return digits_.back(); }
  Digit operator[](std::size_t i) const { return digits_[i]; }
  bool contains(Digit d) const {
    return std::binary_search(digits_.begin(), digits_.end(), d);
  }
  std::span<const Digit> digits() const { return digits_; }
  auto begin() const { return digits_.begin(); }
  auto end() const { return digits_.end(); }

  /// {c k_1, ..., c k_S}
  DigitSet scaled(Digit c) const {
    std::vector<Digit> d;
    for (Digit k : digits_) d.push_back(k * c);
    return DigitSet(std::move(d));
  }

  std::string to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < digits_.size(); ++i)
      s += (i ? "," : "") + std::to_string(digits_[i]);
    return s + "}";
  }

  friend bool operator==(const DigitSet&, const DigitSet&) = default;

 private:
  std::vector<Digit> digits_;
};

/// Continued fraction of p/q in (0,1], canonical (last digit >= 2 unless [0;1]).
inline ContinuedFraction cf_from_rational(const BigInt& p, const BigInt& q) {
  if (q <= 0 || p <= 0 || p > q)
    throw invalid_argument("cf_from_rational requires 0 < p/q <= 1");
  std::vector<Digit> digits;
  BigInt num = p, den = q;  // x = num/den, next digit = floor(den/num)
  while (num != 0) {
    BigInt a = den / num;
    if (a > std::numeric_limits<Digit>::max())
      throw invalid_argument("partial quotient does not fit in a digit");
    digits.push_back(a.convert_to<Digit>());
    BigInt r = den - a * num;
    den = num;
    num = r;
  }
  return ContinuedFraction::finite(std::move(digits));
}

inline ContinuedFraction cf_from_rational(const Rational& x) {
  return cf_from_rational(boost::multiprecision::numerator(x),
                          boost::multiprecision::denominator(x));
}

/// Convergents p_i/q_i for i = 1..n.
inline std::vector<std::pair<BigInt, BigInt>> convergents(const ContinuedFraction& cf,
                                                          std::size_t n) {
  if (cf.is_finite() && n > cf.size())
    throw invalid_argument("requested more convergents than the expansion has digits");
  std::vector<std::pair<BigInt, BigInt>> out;
  out.reserve(n);
  BigInt p_prev = 1, q_prev = 0, p = 0, q = 1;
  for (std::size_t i = 0; i < n; ++i) {
    BigInt a = cf.digit(i);
    BigInt p_next = a * p + p_prev;
    BigInt q_next = a * q + q_prev;
    p_prev = std::move(p);
    q_prev = std::move(q);
    p = std::move(p_next);
    q = std::move(q_next);
    out.emplace_back(p, q);
  }
  return out;
}

inline Rational cf_value(const ContinuedFraction& cf) {
  if (!cf.is_finite())
    throw invalid_argument("cf_value needs a finite expansion");
  auto c = convergents(cf, cf.size());
  return Rational(c.back().first, c.back().second);
}

/// Folds a trailing 1 into its predecessor: [0; ..., a, 1] -> [0; ..., a+1].
inline ContinuedFraction canonicalize(const ContinuedFraction& cf) {
  if (!cf.is_finite()) return cf;
  std::vector<Digit> d = cf.preperiod();
  if (d.size() > 1 && d.back() == 1) {
    d.pop_back();
    ++d.back();
  }
  return ContinuedFraction::finite(std::move(d));
}

/// The other finite expansion of the same rational, [0; ..., a-1, 1] for
/// a >= 2. [0;1] has no alternate form with positive digits.
inline std::optional<ContinuedFraction> alternate_form(const ContinuedFraction& cf) {
  if (!cf.is_finite()) return std::nullopt;
  ContinuedFraction c = canonicalize(cf);
  std::vector<Digit> d = c.preperiod();
  if (d.size() == 1 && d[0] == 1) return std::nullopt;
  if (c != cf) return c;
  --d.back();
  d.push_back(1);
  return ContinuedFraction::finite(std::move(d));
}

namespace detail {

struct ConvergentPair {
  BigInt p_prev = 1, q_prev = 0, p = 0, q = 1;

  ConvergentPair push(Digit a) const {
    return {p, q, BigInt(a) * p + p_prev, BigInt(a) * q + q_prev};
  }

  RationalInterval interval() const {
    Rational x(p, q);
    Rational y(p + p_prev, q + q_prev);
    return x < y ? RationalInterval(std::move(x), std::move(y))
                 : RationalInterval(std::move(y), std::move(x));
  }
};

}  // namespace detail

/// Closure of the set of x whose expansion starts with `prefix`:
/// endpoints p_n/q_n and (p_n+p_{n-1})/(q_n+q_{n-1}).
inline RationalInterval cylinder_interval(std::span<const Digit> prefix) {
  if (prefix.empty()) throw invalid_argument("cylinder prefix must be nonempty");
  detail::require_digits(prefix);
  detail::ConvergentPair c;
  for (Digit a : prefix) c = c.push(a);
  return c.interval();
}

/// S^depth, or throws budget_exceeded when it is above `budget`.
inline std::uint64_t checked_cylinder_count(std::size_t s, std::size_t depth,
                                            std::uint64_t budget) {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < depth; ++i) {
    if (count > std::numeric_limits<std::uint64_t>::max() / s) {
      throw budget_exceeded(std::numeric_limits<std::uint64_t>::max(), budget);
    }
    count *= s;
  }
  if (count > budget) throw budget_exceeded(count, budget);
  return count;
}

/// Visits every depth-`depth` cylinder of E_K in lexicographic order as
/// visit(std::span<const Digit> prefix, const RationalInterval& interval).
template <class Visitor>
void for_each_cylinder(const DigitSet& k, std::size_t depth, Visitor&& visit,
                       std::uint64_t budget = default_cylinder_budget) {
  if (depth == 0) throw invalid_argument("cylinder depth must be positive");
  checked_cylinder_count(k.size(), depth, budget);

  std::vector<Digit> prefix(depth);
  std::vector<std::size_t> index(depth, 0);
  std::vector<detail::ConvergentPair> stack(depth + 1);
  std::size_t level = 0;
  while (true) {
    prefix[level] = k[index[level]];
    stack[level + 1] = stack[level].push(prefix[level]);
    if (level + 1 < depth) {
      ++level;
      index[level] = 0;
      continue;
    }
    visit(std::span<const Digit>(prefix), stack[depth].interval());
    // advance to the next sibling, climbing as needed
    while (++index[level] == k.size()) {
      if (level == 0) return;
      --level;
    }
  }
}

struct Cylinder {
  std::vector<Digit> prefix;
  RationalInterval interval;
};

inline std::vector<Cylinder> enumerate_cylinders(
    const DigitSet& k, std::size_t depth,
    std::uint64_t budget = default_cylinder_budget) {
  std::vector<Cylinder> out;
  out.reserve(checked_cylinder_count(k.size(), depth, budget));
  for_each_cylinder(
      k, depth,
      [&](std::span<const Digit> w, const RationalInterval& iv) {
        out.push_back({{w.begin(), w.end()}, iv});
      },
      budget);
  return out;
}

}  // namespace minkdim

#endif  // MINKDIM_CONTINUED_FRACTION_HPP
