#ifndef MINKDIM_RATIONAL_HPP
#define MINKDIM_RATIONAL_HPP

#include <cmath>
#include <cstdint>
#include <iomanip>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "minkdim/error.hpp"

namespace minkdim {

using BigInt = boost::multiprecision::cpp_int;

/// Exact ratio of arbitrary-precision integers, always in lowest terms with a
/// positive denominator.
using Rational = boost::multiprecision::cpp_rational;

/// Extended-precision real used by the Moran solver (113-bit significand).
using HighReal = boost::multiprecision::cpp_bin_float_quad;

inline BigInt pow2(std::uint64_t exponent) {
  BigInt r = 1;
  r <<= static_cast<unsigned>(exponent);
  return r;
}

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw invalid_argument("zero denominator");
  return Rational(num, den);
}

/// Closed segment [lo, hi] with exact endpoints, lo < hi.
struct RationalInterval {
  Rational lo;
  Rational hi;

  RationalInterval() = default;
  RationalInterval(Rational a, Rational b) : lo(std::move(a)), hi(std::move(b)) {
    if (!(lo < hi)) throw invalid_argument("interval requires lo < hi");
  }

  Rational length() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains(const RationalInterval& o) const {
    return lo <= o.lo && o.hi <= hi;
  }
  /// True when the open interiors do not intersect.
  bool interior_disjoint(const RationalInterval& o) const {
    return hi <= o.lo || o.hi <= lo;
  }

  friend bool operator==(const RationalInterval&, const RationalInterval&) = default;
};

/// "p/q", or "p" when the denominator is one.
inline std::string to_exact_string(const Rational& r) {
  const BigInt& den = boost::multiprecision::denominator(r);
  std::string s = boost::multiprecision::numerator(r).str();
  if (den != 1) s += "/" + den.str();
  return s;
}

/// Parses "p/q" or "p". Throws invalid_argument on malformed input.
inline Rational parse_rational(std::string_view text) {
  auto parse_int = [](std::string_view t) -> BigInt {
    if (t.empty()) throw invalid_argument("empty integer");
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) throw invalid_argument("malformed integer");
    for (std::size_t j = i; j < t.size(); ++j) {
      if (t[j] < '0' || t[j] > '9')
        throw invalid_argument("malformed integer '" + std::string(t) + "'");
    }
    return BigInt(std::string(t));
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  return make_rational(parse_int(text.substr(0, slash)),
                       parse_int(text.substr(slash + 1)));
}

namespace detail {

inline BigInt pow10(unsigned e) {
  BigInt r = 1;
  for (unsigned i = 0; i < e; ++i) r *= 10;
  return r;
}

inline long decimal_digits(const BigInt& v) {
  return static_cast<long>(v.str().size());
}

}  // namespace detail

/// Renders r with exactly `significant` significant digits, rounding half to
/// even, in positional (non-scientific) notation.
inline std::string to_decimal_string(const Rational& r, int significant = 15) {
  if (significant < 1) throw invalid_argument("need at least one digit");
  if (r == 0) return "0";
  BigInt num = boost::multiprecision::abs(boost::multiprecision::numerator(r));
  const BigInt& den = boost::multiprecision::denominator(r);

  // Find e with 10^e <= num/den < 10^(e+1).
  long e = detail::decimal_digits(num) - detail::decimal_digits(den);
  auto ge_pow = [&](long k) {  // num/den >= 10^k
    return k >= 0 ? num >= den * detail::pow10(static_cast<unsigned>(k))
                  : num * detail::pow10(static_cast<unsigned>(-k)) >= den;
  };
  while (!ge_pow(e)) --e;
  while (ge_pow(e + 1)) ++e;

  long shift = significant - 1 - e;
  BigInt scaled_num = num;
  BigInt scaled_den = den;
  if (shift >= 0)
    scaled_num *= detail::pow10(static_cast<unsigned>(shift));
  else
    scaled_den *= detail::pow10(static_cast<unsigned>(-shift));
  BigInt q = scaled_num / scaled_den;
  BigInt rem = scaled_num - q * scaled_den;
  BigInt twice = 2 * rem;
  if (twice > scaled_den || (twice == scaled_den && (q & 1) != 0)) ++q;
  if (q == detail::pow10(static_cast<unsigned>(significant))) {
    q /= 10;
    ++e;
  }

  std::string digits = q.str();
  std::string out = r < 0 ? "-" : "";
  if (e >= 0) {
    auto int_len = static_cast<std::size_t>(e + 1);
    if (int_len >= digits.size()) {
      out += digits + std::string(int_len - digits.size(), '0');
    } else {
      out += digits.substr(0, int_len) + "." + digits.substr(int_len);
    }
  } else {
    out += "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + digits;
  }
  return out;
}

/// Natural logarithm of a positive big integer without overflowing a
/// floating-point conversion.
template <class Real = long double>
Real log_of(const BigInt& v) {
  if (v <= 0) throw invalid_argument("log of non-positive integer");
  unsigned msb = boost::multiprecision::msb(v);
  if (msb < 60) return std::log(static_cast<Real>(v.convert_to<std::uint64_t>()));
  unsigned drop = msb - 60;
  BigInt top = v >> drop;
  return std::log(static_cast<Real>(top.convert_to<std::uint64_t>())) +
         static_cast<Real>(drop) * std::log(Real(2));
}

template <class Real = long double>
Real log_of(const Rational& r) {
  return log_of<Real>(boost::multiprecision::numerator(r)) -
         log_of<Real>(boost::multiprecision::denominator(r));
}

/// Formats a real with `significant` significant digits.
template <class Real>
std::string format_real(const Real& x, int significant) {
  std::ostringstream os;
  os << std::setprecision(significant) << x;
  return os.str();
}

/// Fixed-point formatting with `decimals` digits after the point.
template <class Real>
std::string format_fixed(const Real& x, int decimals) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(decimals) << x;
  return os.str();
}

}  // namespace minkdim

#endif  // MINKDIM_RATIONAL_HPP
