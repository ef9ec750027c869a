#ifndef MINKDIM_ROOT_FINDING_HPP
#define MINKDIM_ROOT_FINDING_HPP

#include <cmath>
#include <limits>
#include <utility>

#include "minkdim/error.hpp"

namespace minkdim {

template <class Real>
struct LevelRoot {
  Real s;
  /// |f(s) - 1|
  Real residual;
  int iterations = 0;
  /// f(bracket_lo) > 1 > f(bracket_hi)
  Real bracket_lo;
  Real bracket_hi;
};

/// Solves f(s) = 1 for a strictly decreasing f on [lo, hi] with
/// f(lo) > 1 > f(hi). `f` returns {f(s), f'(s)}.
///
/// Bisection narrows the bracket to `bisect_width`, then safeguarded Newton
/// runs until |f(s) - 1| <= tol (falling back to bisection whenever a Newton
/// step leaves the bracket). The returned bracket is tightened around s.
template <class Real, class F>
LevelRoot<Real> solve_unit_level(F&& f, Real lo, Real hi, Real tol,
                                 Real bisect_width = Real(1) / Real(1 << 20),
                                 int max_iterations = 400) {
  using std::abs;
  using std::isfinite;
  using std::max;

  if (!(tol > 0)) throw invalid_argument("tolerance must be positive");
  if (!(f(lo).first > 1) || !(f(hi).first < 1))
    throw invalid_argument("root is not bracketed: need f(lo) > 1 > f(hi)");

  int iterations = 0;
  auto step_taken = [&] {
    if (++iterations > max_iterations)
      throw tolerance_failure("root finder did not reach tolerance");
  };

  while (hi - lo > bisect_width) {
    Real mid = (lo + hi) / 2;
    (f(mid).first > 1 ? lo : hi) = mid;
    step_taken();
  }

  Real s = (lo + hi) / 2;
  auto [value, slope] = f(s);
  Real r = value - 1;
  while (abs(r) > tol) {
    (r > 0 ? lo : hi) = s;
    Real next = s - r / slope;
    if (!(slope < 0) || !(next > lo && next < hi) || !isfinite(next)) next = (lo + hi) / 2;
    s = next;
    std::tie(value, slope) = f(s);
    r = value - 1;
    step_taken();
  }
  // Polish while Newton still improves the residual.
  for (int extra = 0; extra < 3 && slope < 0 && r != 0; ++extra) {
    Real next = s - r / slope;
    auto [v2, d2] = f(next);
    if (!(abs(v2 - 1) < abs(r))) break;
    s = next;
    value = v2;
    slope = d2;
    r = v2 - 1;
  }

  const Real eps = std::numeric_limits<Real>::epsilon();
  Real delta = max(Real(2) * abs(r) / abs(slope), Real(8) * eps * max(Real(1), abs(s)));
  Real blo = lo, bhi = hi;
  for (int i = 0; i < 200 && s - delta > lo && s + delta < hi; ++i, delta *= 2) {
    if (f(s - delta).first > 1 && f(s + delta).first < 1) {
      blo = s - delta;
      bhi = s + delta;
      break;
    }
  }
  return {s, abs(r), iterations, blo, bhi};
}

}  // namespace minkdim

#endif  // MINKDIM_ROOT_FINDING_HPP
