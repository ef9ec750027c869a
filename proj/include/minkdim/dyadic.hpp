#ifndef MINKDIM_DYADIC_HPP
#define MINKDIM_DYADIC_HPP

#include <compare>
#include <cstdint>
#include <string>

#include "minkdim/rational.hpp"

namespace minkdim {

/// mantissa / 2^exponent, reduced so the mantissa is odd (or the value is 0
/// with exponent 0).
class DyadicRational {
 public:
  DyadicRational() = default;
  DyadicRational(BigInt mantissa, std::uint64_t exponent)
      : mantissa_(std::move(mantissa)), exponent_(exponent) {
    reduce();
  }

  /// 2^-e
  static DyadicRational inverse_pow2(std::uint64_t e) { return {1, e}; }

  const BigInt& mantissa() const { return mantissa_; }
  std::uint64_t exponent() const { return exponent_; }

  Rational to_rational() const { return Rational(mantissa_, pow2(exponent_)); }

  std::string to_exact_string() const { return minkdim::to_exact_string(to_rational()); }

  DyadicRational operator-() const { return {-mantissa_, exponent_}; }

  friend DyadicRational operator+(const DyadicRational& a, const DyadicRational& b) {
    if (a.exponent_ >= b.exponent_) {
      return {a.mantissa_ + (b.mantissa_ << static_cast<unsigned>(a.exponent_ - b.exponent_)),
              a.exponent_};
    }
    return b + a;
  }
  friend DyadicRational operator-(const DyadicRational& a, const DyadicRational& b) {
    return a + (-b);
  }
  /// Multiplication by 2^-e.
  DyadicRational scaled_down(std::uint64_t e) const { return {mantissa_, exponent_ + e}; }

  friend bool operator==(const DyadicRational&, const DyadicRational&) = default;
  friend std::strong_ordering operator<=>(const DyadicRational& a, const DyadicRational& b) {
    std::uint64_t e = std::max(a.exponent_, b.exponent_);
    BigInt x = a.mantissa_ << static_cast<unsigned>(e - a.exponent_);
    BigInt y = b.mantissa_ << static_cast<unsigned>(e - b.exponent_);
    if (x < y) return std::strong_ordering::less;
    if (y < x) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  void reduce() {
    if (mantissa_ == 0) {
      exponent_ = 0;
      return;
    }
    unsigned tz = boost::multiprecision::lsb(boost::multiprecision::abs(mantissa_));
    auto shift = std::min<std::uint64_t>(tz, exponent_);
    mantissa_ >>= static_cast<unsigned>(shift);
    exponent_ -= shift;
  }

  BigInt mantissa_ = 0;
  std::uint64_t exponent_ = 0;
};

/// Closed interval [lo, hi] of dyadic rationals.
struct DyadicInterval {
  DyadicRational lo;
  DyadicRational hi;

  DyadicInterval() = default;
  DyadicInterval(DyadicRational a, DyadicRational b) : lo(std::move(a)), hi(std::move(b)) {
    if (hi < lo) throw invalid_argument("dyadic interval requires lo <= hi");
  }

  DyadicRational width() const { return hi - lo; }
  bool contains(const DyadicRational& x) const { return lo <= x && x <= hi; }
  bool contains(const Rational& x) const {
    return lo.to_rational() <= x && x <= hi.to_rational();
  }

  friend bool operator==(const DyadicInterval&, const DyadicInterval&) = default;
};

}  // namespace minkdim

#endif  // MINKDIM_DYADIC_HPP
