#ifndef MINKDIM_MORAN_HPP
#define MINKDIM_MORAN_HPP

#include <cmath>
#include <utility>

#include <boost/math/constants/constants.hpp>

#include "minkdim/continued_fraction.hpp"
#include "minkdim/rational.hpp"
#include "minkdim/root_finding.hpp"

namespace minkdim {

/// Root of sum_i (2^-k_i)^s = 1, the similarity dimension of G(E_K).
struct MoranRoot {
  HighReal s;
  HighReal residual;
  int iterations = 0;
  HighReal bracket_lo;
  HighReal bracket_hi;
  HighReal tolerance;
};

inline constexpr double default_moran_tolerance = 1e-12;

/// Smallest tolerance the solver accepts, 2^-50.
inline const HighReal& min_moran_tolerance() {
  static const HighReal v = ldexp(HighReal(1), -50);
  return v;
}

/// {sum_i 2^(-k_i s), d/ds of the same}
inline std::pair<HighReal, HighReal> moran_function_with_slope(const DigitSet& k,
                                                               const HighReal& s) {
  const HighReal ln2 = boost::math::constants::ln_two<HighReal>();
  HighReal value = 0, slope = 0;
  for (Digit d : k) {
    HighReal term = exp(-HighReal(d) * s * ln2);
    value += term;
    slope -= HighReal(d) * term;
  }
  return {value, slope * ln2};
}

inline HighReal moran_function(const DigitSet& k, const HighReal& s) {
  if (s < 0) throw invalid_argument("moran_function requires s >= 0");
  return moran_function_with_slope(k, s).first;
}

/// Solves the Moran equation on [0, 1]. f(0) = S > 1 and f(1) = sum 2^-k_i < 1
/// for distinct positive digits, and f is strictly decreasing, so the root is
/// unique and interior.
inline MoranRoot moran_root(const DigitSet& k,
                            const HighReal& tol = HighReal(default_moran_tolerance)) {
  if (tol < min_moran_tolerance()) throw invalid_argument("moran tolerance must be >= 2^-50");
  auto root = solve_unit_level<HighReal>(
      [&](const HighReal& s) { return moran_function_with_slope(k, s); }, HighReal(0),
      HighReal(1), tol);
  return {root.s, root.residual, root.iterations, root.bracket_lo, root.bracket_hi, tol};
}

}  // namespace minkdim

#endif  // MINKDIM_MORAN_HPP
