#ifndef MINKDIM_DIMENSION_BOUNDS_HPP
#define MINKDIM_DIMENSION_BOUNDS_HPP

#include <cmath>
#include <string_view>

#include "minkdim/moran.hpp"

namespace minkdim {

/// Hensley's refinement of Jarnik's estimate for dim E_n,
///   1 - 1/(n log10 2) <= dim E_n <= 1 - 1/(8 n log10 n),  n > 8.
/// The logarithm is base 10; that is the reading that yields the published
/// values for E_9 (0.6308969 and 0.985445112).
struct BoundsInterval {
  double lower = 0;
  double upper = 0;
  unsigned n = 0;
};

inline BoundsInterval jarnik_bounds(unsigned n) {
  if (n <= 8) throw invalid_argument("bounds hold only for n > 8");
  const long double nn = n;
  const long double lower = 1.0L - 1.0L / (nn * std::log10(2.0L));
  const long double upper = 1.0L - 1.0L / (8.0L * nn * std::log10(nn));
  return {static_cast<double>(lower), static_cast<double>(upper), n};
}

enum class Preservation { NotPreserved, Inconclusive };

inline std::string_view to_string(Preservation p) {
  return p == Preservation::NotPreserved ? "NotPreserved" : "Inconclusive";
}

inline Preservation parse_preservation(std::string_view s) {
  if (s == "NotPreserved") return Preservation::NotPreserved;
  if (s == "Inconclusive") return Preservation::Inconclusive;
  throw invalid_argument("unknown verdict '" + std::string(s) + "'");
}

struct PreservationVerdict {
  unsigned n = 0;
  BoundsInterval bounds;
  MoranRoot image_dimension;
  double tolerance = 0;
  Preservation preserved = Preservation::Inconclusive;
  /// Distance from the root's bracket to the nearer bound endpoint; negative
  /// when the root lies inside the bounds interval.
  double certified_gap = 0;
};

inline constexpr double default_verdict_tolerance = 1e-6;

/// Compares dim G(E_n) (Moran root for K = {1..n}) with the bounds on dim E_n.
/// The outcome is never "preserved": an interval can only refute equality.
inline PreservationVerdict preservation_verdict(
    unsigned n, double tol = default_verdict_tolerance,
    const HighReal& moran_tol = HighReal(default_moran_tolerance)) {
  if (!(tol >= 0)) throw invalid_argument("verdict tolerance must be non-negative");
  PreservationVerdict v;
  v.n = n;
  v.bounds = jarnik_bounds(n);
  v.image_dimension = moran_root(DigitSet::range(1, n), moran_tol);
  v.tolerance = tol;

  const double s = v.image_dimension.s.convert_to<double>();
  const double above = v.image_dimension.bracket_lo.convert_to<double>() - v.bounds.upper;
  const double below = v.bounds.lower - v.image_dimension.bracket_hi.convert_to<double>();
  v.certified_gap = std::max(above, below);
  const bool outside = s - tol > v.bounds.upper || s + tol < v.bounds.lower;
  v.preserved = outside && v.certified_gap >= tol ? Preservation::NotPreserved
                                                   : Preservation::Inconclusive;
  return v;
}

}  // namespace minkdim

#endif  // MINKDIM_DIMENSION_BOUNDS_HPP
