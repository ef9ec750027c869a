#ifndef MINKDIM_REPORT_HPP
#define MINKDIM_REPORT_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "minkdim/dimension_bounds.hpp"
#include "minkdim/empirical.hpp"
#include "minkdim/minkowski.hpp"
#include "minkdim/moran.hpp"
#include "minkdim/self_similar.hpp"

namespace minkdim {

inline constexpr int report_schema_version = 1;
inline constexpr const char* tool_version = "1.0.0";

enum class OutputFormat { Json, Csv, Text };

inline std::string_view to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::Json: return "json";
    case OutputFormat::Csv: return "csv";
    case OutputFormat::Text: return "text";
  }
  return "text";
}

inline OutputFormat parse_output_format(std::string_view s) {
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  if (s == "text") return OutputFormat::Text;
  throw invalid_argument("format must be json, csv or text");
}

struct RunConfig {
  std::string command;
  std::vector<Digit> digits;
  unsigned n = 0;
  std::size_t depth = 0;
  std::size_t depth_first = 0;
  std::size_t depth_last = 0;
  double tolerance = default_moran_tolerance;
  OutputFormat format = OutputFormat::Text;
  std::optional<std::string> output_path;
  std::uint64_t budget = default_cylinder_budget;
  Side side = Side::Domain;
  /// eval: "rational" or "cf", and the raw argument.
  std::string input_kind;
  std::string input;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// G evaluated at one point.
struct Evaluation {
  std::string input;
  ContinuedFraction cf;
  /// x itself, when it is rational.
  std::optional<Rational> x;
  Rational g;
};

struct Construction {
  std::size_t depth = 0;
  std::vector<ImageCylinder> cylinders;
};

struct DimensionReport {
  int schema_version = report_schema_version;
  std::string tool_version = minkdim::tool_version;
  RunConfig config;
  std::optional<DigitSet> digit_set;
  std::optional<MoranRoot> moran;
  std::optional<BoundsInterval> bounds;
  std::optional<PreservationVerdict> verdict;
  std::optional<EstimateSeries> empirical;
  std::optional<Evaluation> evaluation;
  std::optional<Construction> construction;
  std::vector<std::string> notes;
};

namespace json_detail {

using nlohmann::json;

template <class Real>
std::string lossless(const Real& x) {
  return format_real(x, std::numeric_limits<Real>::max_digits10);
}

inline json exact(const Rational& r) {
  return {{"decimal", to_decimal_string(r)}, {"exact", to_exact_string(r)}};
}

inline Rational exact_from(const json& j) { return parse_rational(j.at("exact").get<std::string>()); }

template <class Real>
json approx(const Real& x) {
  return {{"decimal", lossless(x)}};
}

inline HighReal high_from(const json& j) { return HighReal(j.at("decimal").get<std::string>()); }
inline long double long_from(const json& j) { return std::stold(j.at("decimal").get<std::string>()); }
inline double double_from(const json& j) { return std::stod(j.at("decimal").get<std::string>()); }

inline DyadicRational dyadic_from(const Rational& r) {
  const BigInt& den = boost::multiprecision::denominator(r);
  unsigned e = boost::multiprecision::msb(den);
  if (den != pow2(e)) throw invalid_argument("value is not dyadic");
  return {boost::multiprecision::numerator(r), e};
}

inline json to_json(const MoranRoot& m) {
  return {{"s", approx(m.s)},
          {"residual", approx(m.residual)},
          {"iterations", m.iterations},
          {"bracket", {approx(m.bracket_lo), approx(m.bracket_hi)}},
          {"tolerance", approx(m.tolerance)}};
}

inline MoranRoot moran_from(const json& j) {
  MoranRoot m;
  m.s = high_from(j.at("s"));
  m.residual = high_from(j.at("residual"));
  m.iterations = j.at("iterations").get<int>();
  m.bracket_lo = high_from(j.at("bracket").at(0));
  m.bracket_hi = high_from(j.at("bracket").at(1));
  m.tolerance = high_from(j.at("tolerance"));
  return m;
}

inline json to_json(const BoundsInterval& b) {
  return {{"n", b.n}, {"lower", approx(b.lower)}, {"upper", approx(b.upper)}};
}

inline BoundsInterval bounds_from(const json& j) {
  return {double_from(j.at("lower")), double_from(j.at("upper")), j.at("n").get<unsigned>()};
}

inline json to_json(const PreservationVerdict& v) {
  return {{"n", v.n},
          {"bounds", to_json(v.bounds)},
          {"image_dimension", to_json(v.image_dimension)},
          {"tolerance", approx(v.tolerance)},
          {"preserved", std::string(to_string(v.preserved))},
          {"certified_gap", approx(v.certified_gap)}};
}

inline PreservationVerdict verdict_from(const json& j) {
  PreservationVerdict v;
  v.n = j.at("n").get<unsigned>();
  v.bounds = bounds_from(j.at("bounds"));
  v.image_dimension = moran_from(j.at("image_dimension"));
  v.tolerance = double_from(j.at("tolerance"));
  v.preserved = parse_preservation(j.at("preserved").get<std::string>());
  v.certified_gap = double_from(j.at("certified_gap"));
  return v;
}

inline json to_json(const CoveringEstimate& e) {
  return {{"depth", e.depth},
          {"side", std::string(to_string(e.side))},
          {"s_hat", approx(e.s_hat)},
          {"cylinder_count", e.cylinder_count},
          {"sum_at_root", approx(e.sum_at_root)},
          {"bracket", {approx(e.bracket_lo), approx(e.bracket_hi)}},
          {"iterations", e.iterations}};
}

inline CoveringEstimate estimate_from(const json& j) {
  CoveringEstimate e;
  e.depth = j.at("depth").get<std::size_t>();
  e.side = parse_side(j.at("side").get<std::string>());
  e.s_hat = long_from(j.at("s_hat"));
  e.cylinder_count = j.at("cylinder_count").get<std::uint64_t>();
  e.sum_at_root = long_from(j.at("sum_at_root"));
  e.bracket_lo = long_from(j.at("bracket").at(0));
  e.bracket_hi = long_from(j.at("bracket").at(1));
  e.iterations = j.at("iterations").get<int>();
  return e;
}

inline json to_json(const EstimateSeries& s) {
  json est = json::array(), diff = json::array();
  for (const auto& e : s.estimates) est.push_back(to_json(e));
  for (long double d : s.differences) diff.push_back(approx(d));
  return {{"estimates", est},
          {"differences", diff},
          {"differences_shrinking", s.differences_shrinking},
          {"monotone_nonincreasing", s.monotone_nonincreasing}};
}

inline EstimateSeries series_from(const json& j) {
  EstimateSeries s;
  for (const auto& e : j.at("estimates")) s.estimates.push_back(estimate_from(e));
  for (const auto& d : j.at("differences")) s.differences.push_back(long_from(d));
  s.differences_shrinking = j.at("differences_shrinking").get<bool>();
  s.monotone_nonincreasing = j.at("monotone_nonincreasing").get<bool>();
  return s;
}

inline json to_json(const ContinuedFraction& cf) {
  return {{"text", cf.to_string()}, {"preperiod", cf.preperiod()}, {"period", cf.period()}};
}

inline ContinuedFraction cf_from(const json& j) {
  return ContinuedFraction(j.at("preperiod").get<std::vector<Digit>>(),
                           j.at("period").get<std::vector<Digit>>());
}

inline json to_json(const Evaluation& e) {
  json j = {{"input", e.input}, {"continued_fraction", to_json(e.cf)}, {"g", exact(e.g)}};
  j["x"] = e.x ? exact(*e.x) : json(nullptr);
  return j;
}

inline Evaluation evaluation_from(const json& j) {
  Evaluation e;
  e.input = j.at("input").get<std::string>();
  e.cf = cf_from(j.at("continued_fraction"));
  if (!j.at("x").is_null()) e.x = exact_from(j.at("x"));
  e.g = exact_from(j.at("g"));
  return e;
}

inline json to_json(const ImageCylinder& c) {
  return {{"word", c.word},
          {"inf", exact(c.hull.lo)},
          {"sup", exact(c.hull.hi)},
          {"diameter", exact(c.diameter)},
          {"enclosure", {exact(c.enclosure.lo.to_rational()), exact(c.enclosure.hi.to_rational())}}};
}

inline ImageCylinder image_cylinder_from(const json& j) {
  ImageCylinder c;
  c.word = j.at("word").get<std::vector<Digit>>();
  c.hull = RationalInterval(exact_from(j.at("inf")), exact_from(j.at("sup")));
  c.diameter = exact_from(j.at("diameter"));
  c.enclosure = DyadicInterval(dyadic_from(exact_from(j.at("enclosure").at(0))),
                               dyadic_from(exact_from(j.at("enclosure").at(1))));
  return c;
}

inline json to_json(const RunConfig& c) {
  return {{"command", c.command},
          {"digits", c.digits},
          {"n", c.n},
          {"depth", c.depth},
          {"depths", {c.depth_first, c.depth_last}},
          {"tolerance", approx(c.tolerance)},
          {"format", std::string(to_string(c.format))},
          {"output_path", c.output_path ? json(*c.output_path) : json(nullptr)},
          {"budget", c.budget},
          {"side", std::string(to_string(c.side))},
          {"input_kind", c.input_kind},
          {"input", c.input}};
}

inline RunConfig config_from(const json& j) {
  RunConfig c;
  c.command = j.at("command").get<std::string>();
  c.digits = j.at("digits").get<std::vector<Digit>>();
  c.n = j.at("n").get<unsigned>();
  c.depth = j.at("depth").get<std::size_t>();
  c.depth_first = j.at("depths").at(0).get<std::size_t>();
  c.depth_last = j.at("depths").at(1).get<std::size_t>();
  c.tolerance = double_from(j.at("tolerance"));
  c.format = parse_output_format(j.at("format").get<std::string>());
  if (!j.at("output_path").is_null()) c.output_path = j.at("output_path").get<std::string>();
  c.budget = j.at("budget").get<std::uint64_t>();
  c.side = parse_side(j.at("side").get<std::string>());
  c.input_kind = j.at("input_kind").get<std::string>();
  c.input = j.at("input").get<std::string>();
  return c;
}

}  // namespace json_detail

/// {schema_version, command, config, result, diagnostics}
inline nlohmann::json to_json(const DimensionReport& r) {
  using namespace json_detail;
  json result = json::object();
  if (r.digit_set) result["digit_set"] = std::vector<Digit>(r.digit_set->begin(), r.digit_set->end());
  if (r.moran) result["moran"] = to_json(*r.moran);
  if (r.bounds) result["bounds"] = to_json(*r.bounds);
  if (r.verdict) result["verdict"] = to_json(*r.verdict);
  if (r.empirical) result["empirical"] = to_json(*r.empirical);
  if (r.evaluation) result["evaluation"] = to_json(*r.evaluation);
  if (r.construction) {
    json cyl = json::array();
    for (const auto& c : r.construction->cylinders) cyl.push_back(to_json(c));
    json construction = {{"depth", r.construction->depth}, {"cylinders", cyl}};
    if (r.digit_set) {
      construction["delta0"] = {{"sup", exact(delta0_sup(*r.digit_set))},
                                {"inf", exact(delta0_inf(*r.digit_set))},
                                {"diameter", exact(delta0_diameter(*r.digit_set))}};
    }
    result["construction"] = construction;
  }
  return {{"schema_version", r.schema_version},
          {"command", r.config.command},
          {"config", to_json(r.config)},
          {"result", result},
          {"diagnostics", {{"tool_version", r.tool_version}, {"notes", r.notes}}}};
}

inline DimensionReport report_from_json(const nlohmann::json& j) {
  using namespace json_detail;
  DimensionReport r;
  r.schema_version = j.at("schema_version").get<int>();
  if (r.schema_version != report_schema_version)
    throw invalid_argument("unsupported report schema version " + std::to_string(r.schema_version));
  r.config = config_from(j.at("config"));
  const json& res = j.at("result");
  if (res.contains("digit_set")) r.digit_set = DigitSet(res["digit_set"].get<std::vector<Digit>>());
  if (res.contains("moran")) r.moran = moran_from(res["moran"]);
  if (res.contains("bounds")) r.bounds = bounds_from(res["bounds"]);
  if (res.contains("verdict")) r.verdict = verdict_from(res["verdict"]);
  if (res.contains("empirical")) r.empirical = series_from(res["empirical"]);
  if (res.contains("evaluation")) r.evaluation = evaluation_from(res["evaluation"]);
  if (res.contains("construction")) {
    Construction c;
    c.depth = res["construction"].at("depth").get<std::size_t>();
    for (const auto& cj : res["construction"].at("cylinders"))
      c.cylinders.push_back(image_cylinder_from(cj));
    r.construction = std::move(c);
  }
  const json& diag = j.at("diagnostics");
  r.tool_version = diag.at("tool_version").get<std::string>();
  r.notes = diag.at("notes").get<std::vector<std::string>>();
  return r;
}

}  // namespace minkdim

#endif  // MINKDIM_REPORT_HPP
