#ifndef MINKDIM_EMPIRICAL_HPP
#define MINKDIM_EMPIRICAL_HPP

#include <chrono>
#include <cmath>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "minkdim/continued_fraction.hpp"
#include "minkdim/root_finding.hpp"
#include "minkdim/self_similar.hpp"

namespace minkdim {

// Covering-sum estimates: the root s of sum_w |I_w|^s = 1 over all depth-n
// cylinders, for E_K itself (continued-fraction cylinder lengths) or for
// G(E_K) (image cylinder diameters normalized by the image diameter).

enum class Side { Domain, Image };

inline std::string_view to_string(Side s) { return s == Side::Domain ? "domain" : "image"; }

inline Side parse_side(std::string_view s) {
  if (s == "domain") return Side::Domain;
  if (s == "image") return Side::Image;
  throw invalid_argument("side must be 'domain' or 'image'");
}

struct CoveringEstimate {
  std::size_t depth = 0;
  long double s_hat = 0;
  std::uint64_t cylinder_count = 0;
  long double sum_at_root = 0;
  Side side = Side::Domain;
  long double bracket_lo = 0;
  long double bracket_hi = 0;
  int iterations = 0;
  double wall_time_ms = 0;
};

inline constexpr long double default_covering_tolerance = 1e-12L;

/// Pairwise sum with a fixed split, so the result depends only on the order
/// of `values`.
inline long double pairwise_sum(std::span<const long double> values) {
  if (values.size() <= 16) {
    long double acc = 0;
    for (long double v : values) acc += v;
    return acc;
  }
  std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

/// Root of sum_i exp(s * log_lengths[i]) = 1 on [0, 1].
inline LevelRoot<long double> covering_root_from_logs(std::span<const long double> log_lengths,
                                                      long double tol) {
  std::vector<long double> terms(log_lengths.size());
  std::vector<long double> slopes(log_lengths.size());
  auto f = [&](long double s) {
    for (std::size_t i = 0; i < log_lengths.size(); ++i) {
      terms[i] = std::exp(s * log_lengths[i]);
      slopes[i] = log_lengths[i] * terms[i];
    }
    return std::pair{pairwise_sum(terms), pairwise_sum(slopes)};
  };
  return solve_unit_level<long double>(f, 0.0L, 1.0L, tol);
}

namespace detail {

inline CoveringEstimate finish_estimate(std::vector<long double> logs, std::size_t depth,
                                        Side side, long double tol,
                                        std::chrono::steady_clock::time_point start) {
  auto root = covering_root_from_logs(logs, tol);
  long double sum = 0;
  {
    std::vector<long double> terms;
    terms.reserve(logs.size());
    for (long double l : logs) terms.push_back(std::exp(root.s * l));
    sum = pairwise_sum(terms);
  }
  CoveringEstimate e;
  e.depth = depth;
  e.s_hat = root.s;
  e.cylinder_count = logs.size();
  e.sum_at_root = sum;
  e.side = side;
  e.bracket_lo = root.bracket_lo;
  e.bracket_hi = root.bracket_hi;
  e.iterations = root.iterations;
  e.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return e;
}

}  // namespace detail

/// Covering root over the depth-`depth` continued-fraction cylinders of E_K.
inline CoveringEstimate covering_root_domain(const DigitSet& k, std::size_t depth,
                                             long double tol = default_covering_tolerance,
                                             std::uint64_t budget = default_cylinder_budget) {
  auto start = std::chrono::steady_clock::now();
  std::vector<long double> logs;
  logs.reserve(checked_cylinder_count(k.size(), depth, budget));
  for_each_cylinder(
      k, depth,
      [&](std::span<const Digit>, const RationalInterval& iv) {
        logs.push_back(log_of(iv.length()));
      },
      budget);
  return detail::finish_estimate(std::move(logs), depth, Side::Domain, tol, start);
}

/// Covering root over the depth-`depth` image cylinders, lengths normalized
/// by the diameter of G(E_K). The sum factorizes as (sum_k 2^-ks)^depth, so
/// the root is the Moran root at every depth.
inline CoveringEstimate covering_root_image(const DigitSet& k, std::size_t depth,
                                            long double tol = default_covering_tolerance,
                                            std::uint64_t budget = default_cylinder_budget) {
  if (depth == 0) throw invalid_argument("covering depth must be positive");
  auto start = std::chrono::steady_clock::now();
  const Rational whole = delta0_diameter(k);
  std::vector<long double> logs;
  logs.reserve(checked_cylinder_count(k.size(), depth, budget));
  for_each_image_cylinder(
      k, depth, [&](const ImageCylinder& c) { logs.push_back(log_of(c.diameter / whole)); },
      budget);
  return detail::finish_estimate(std::move(logs), depth, Side::Image, tol, start);
}

struct EstimateSeries {
  std::vector<CoveringEstimate> estimates;
  /// s_hat[i+1] - s_hat[i]
  std::vector<long double> differences;
  /// |differences| strictly decreasing
  bool differences_shrinking = true;
  /// s_hat non-increasing with depth
  bool monotone_nonincreasing = true;
};

inline EstimateSeries estimate_series(const DigitSet& k, std::size_t first_depth,
                                      std::size_t last_depth, Side side,
                                      long double tol = default_covering_tolerance,
                                      std::uint64_t budget = default_cylinder_budget) {
  if (first_depth == 0 || first_depth > last_depth)
    throw invalid_argument("depth range must satisfy 1 <= first <= last");
  checked_cylinder_count(k.size(), last_depth, budget);
  EstimateSeries out;
  for (std::size_t d = first_depth; d <= last_depth; ++d) {
    out.estimates.push_back(side == Side::Domain ? covering_root_domain(k, d, tol, budget)
                                                 : covering_root_image(k, d, tol, budget));
  }
  for (std::size_t i = 1; i < out.estimates.size(); ++i) {
    long double diff = out.estimates[i].s_hat - out.estimates[i - 1].s_hat;
    if (!out.differences.empty() && !(std::fabs(diff) < std::fabs(out.differences.back())))
      out.differences_shrinking = false;
    if (diff > 0) out.monotone_nonincreasing = false;
    out.differences.push_back(diff);
  }
  return out;
}

}  // namespace minkdim

#endif  // MINKDIM_EMPIRICAL_HPP
