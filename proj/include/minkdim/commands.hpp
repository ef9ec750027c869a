#ifndef MINKDIM_COMMANDS_HPP
#define MINKDIM_COMMANDS_HPP

#include <string>

#include "minkdim/parse.hpp"
#include "minkdim/report.hpp"

namespace minkdim {

// One function per CLI subcommand. Each takes a fully parsed RunConfig and
// returns the report; rendering lives in render.hpp.

namespace detail {

inline DimensionReport start_report(const RunConfig& config) {
  DimensionReport r;
  r.config = config;
  if (!config.digits.empty()) r.digit_set = DigitSet(config.digits);
  return r;
}

inline const DigitSet& require_digit_set(const DimensionReport& r) {
  if (!r.digit_set) throw invalid_argument("--digits is required");
  return *r.digit_set;
}

}  // namespace detail

inline DimensionReport cmd_moran(const RunConfig& config) {
  DimensionReport r = detail::start_report(config);
  r.moran = moran_root(detail::require_digit_set(r), HighReal(config.tolerance));
  return r;
}

inline DimensionReport cmd_bounds(const RunConfig& config) {
  DimensionReport r = detail::start_report(config);
  r.bounds = jarnik_bounds(config.n);
  return r;
}

inline DimensionReport cmd_verdict(const RunConfig& config) {
  DimensionReport r = detail::start_report(config);
  r.verdict = preservation_verdict(config.n, config.tolerance);
  r.bounds = r.verdict->bounds;
  r.moran = r.verdict->image_dimension;
  return r;
}

inline DimensionReport cmd_eval(const RunConfig& config) {
  DimensionReport r = detail::start_report(config);
  Evaluation e;
  e.input = config.input;
  if (config.input_kind == "rational") {
    Rational x = parse_rational(config.input);
    e.cf = cf_from_rational(x);  // rejects x outside (0, 1]
    e.x = x;
    e.g = g_finite(e.cf).to_rational();
  } else if (config.input_kind == "cf") {
    e.cf = parse_continued_fraction(config.input);
    if (e.cf.is_finite()) e.x = cf_value(e.cf);
    e.g = g_periodic(e.cf);
  } else {
    throw invalid_argument("eval needs --rational or --cf");
  }
  r.evaluation = std::move(e);
  return r;
}

inline DimensionReport cmd_empirical(const RunConfig& config) {
  DimensionReport r = detail::start_report(config);
  const DigitSet& k = detail::require_digit_set(r);
  r.empirical = estimate_series(k, config.depth_first, config.depth_last, config.side,
                                static_cast<long double>(config.tolerance), config.budget);
  r.notes.push_back(config.side == Side::Domain
                        ? "domain: raw per-depth covering roots, no extrapolation"
                        : "image: covering sum factorizes, every depth equals the Moran root");
  return r;
}

inline DimensionReport cmd_construct(const RunConfig& config) {
  DimensionReport r = detail::start_report(config);
  const DigitSet& k = detail::require_digit_set(r);
  Construction c;
  c.depth = config.depth;
  c.cylinders = enumerate_image_cylinders(k, config.depth, config.budget);
  r.construction = std::move(c);
  if (k.size() > 2)
    r.notes.push_back("S > 2: image extremes taken at the alternating words (k_1, k_S) and (k_S, k_1)");
  return r;
}

inline DimensionReport run_command(const RunConfig& config) {
  if (config.command == "moran") return cmd_moran(config);
  if (config.command == "bounds") return cmd_bounds(config);
  if (config.command == "verdict") return cmd_verdict(config);
  if (config.command == "eval") return cmd_eval(config);
  if (config.command == "empirical") return cmd_empirical(config);
  if (config.command == "construct") return cmd_construct(config);
  throw invalid_argument("unknown command '" + config.command + "'");
}

}  // namespace minkdim

#endif  // MINKDIM_COMMANDS_HPP
