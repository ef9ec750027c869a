#ifndef MINKDIM_RENDER_HPP
#define MINKDIM_RENDER_HPP

#include <iomanip>
#include <sstream>
#include <string>

#include "minkdim/report.hpp"

namespace minkdim {

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string join_word(const std::vector<Digit>& w, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? sep : "") + std::to_string(w[i]);
  return s;
}

inline std::string fixed(const HighReal& x, int decimals) { return format_fixed(x, decimals); }

inline void text_moran(std::ostream& os, const MoranRoot& m) {
  os << "Moran root s      " << fixed(m.s, 16) << "\n"
     << "residual          " << format_real(m.residual, 3) << "\n"
     << "iterations        " << m.iterations << "\n"
     << "bracket           [" << fixed(m.bracket_lo, 18) << ", " << fixed(m.bracket_hi, 18)
     << "]\n";
}

inline void text_bounds(std::ostream& os, const BoundsInterval& b) {
  os << "bounds on dim E_" << b.n << "  " << format_fixed(b.lower, 7) << " <= dim E_" << b.n
     << " <= " << format_fixed(b.upper, 9) << "\n";
}

}  // namespace detail

inline std::string render_json(const DimensionReport& r) { return to_json(r).dump(2) + "\n"; }

inline std::string render_text(const DimensionReport& r) {
  std::ostringstream os;
  const std::string& cmd = r.config.command;
  if (r.digit_set) os << "digit set         " << r.digit_set->to_string() << "\n";
  if (cmd == "moran" && r.moran) {
    os << "dim G(E_K), the root of sum_k (2^-k)^s = 1\n";
    detail::text_moran(os, *r.moran);
  } else if (cmd == "bounds" && r.bounds) {
    detail::text_bounds(os, *r.bounds);
  } else if (cmd == "verdict" && r.verdict) {
    const auto& v = *r.verdict;
    detail::text_bounds(os, v.bounds);
    os << "dim G(E_" << v.n << ")        " << detail::fixed(v.image_dimension.s, 13) << "\n"
       << "certified gap     " << format_fixed(v.certified_gap, 10) << "  (tolerance "
       << format_real(v.tolerance, 6) << ")\n"
       << "verdict           " << to_string(v.preserved) << "\n";
    if (v.preserved == Preservation::NotPreserved)
      os << "G does not preserve the Hausdorff-Besicovitch dimension of E_" << v.n << "\n";
  } else if (cmd == "eval" && r.evaluation) {
    const auto& e = *r.evaluation;
    os << "x                 " << e.cf.to_string();
    if (e.x) os << " = " << to_exact_string(*e.x);
    os << "\nG(x)              " << to_exact_string(e.g) << "  (" << to_decimal_string(e.g)
       << ")\n";
  } else if (cmd == "empirical" && r.empirical) {
    os << std::left << std::setw(7) << "depth" << std::setw(12) << "cylinders" << std::setw(23)
       << "s_hat" << "sum_at_root\n";
    for (const auto& e : r.empirical->estimates) {
      os << std::setw(7) << e.depth << std::setw(12) << e.cylinder_count << std::setw(23)
         << format_fixed(e.s_hat, 18) << format_real(e.sum_at_root, 15) << "\n";
    }
    os << std::right << "differences      ";
    for (long double d : r.empirical->differences) os << " " << format_real(d, 6);
    os << "\nshrinking         " << (r.empirical->differences_shrinking ? "yes" : "no") << "\n";
  } else if (cmd == "construct" && r.construction) {
    os << "word        inf                 sup                 diameter\n";
    for (const auto& c : r.construction->cylinders) {
      os << (c.word.empty() ? std::string("(root)") : detail::join_word(c.word, " ")) << "  "
         << to_exact_string(c.hull.lo) << "  " << to_exact_string(c.hull.hi) << "  "
         << to_exact_string(c.diameter) << "\n";
    }
  }
  for (const auto& n : r.notes) os << "note: " << n << "\n";
  return os.str();
}

/// Header row first, LF line endings.
inline std::string render_csv(const DimensionReport& r) {
  using detail::csv_field;
  std::ostringstream os;
  const std::string& cmd = r.config.command;
  const int hp = std::numeric_limits<HighReal>::max_digits10;
  if (cmd == "moran" && r.moran) {
    const auto& m = *r.moran;
    os << "digits,s,residual,iterations,bracket_lo,bracket_hi\n"
       << csv_field(detail::join_word(r.config.digits, ",")) << "," << format_real(m.s, hp) << ","
       << format_real(m.residual, 6) << "," << m.iterations << ","
       << format_real(m.bracket_lo, hp) << "," << format_real(m.bracket_hi, hp) << "\n";
  } else if (cmd == "bounds" && r.bounds) {
    os << "n,lower,upper\n"
       << r.bounds->n << "," << format_real(r.bounds->lower, 17) << ","
       << format_real(r.bounds->upper, 17) << "\n";
  } else if (cmd == "verdict" && r.verdict) {
    const auto& v = *r.verdict;
    os << "n,lower,upper,image_dimension,certified_gap,tolerance,verdict\n"
       << v.n << "," << format_real(v.bounds.lower, 17) << "," << format_real(v.bounds.upper, 17)
       << "," << format_real(v.image_dimension.s, hp) << "," << format_real(v.certified_gap, 17)
       << "," << format_real(v.tolerance, 17) << "," << to_string(v.preserved) << "\n";
  } else if (cmd == "eval" && r.evaluation) {
    const auto& e = *r.evaluation;
    os << "input,continued_fraction,x_exact,g_exact,g_decimal\n"
       << csv_field(e.input) << "," << csv_field(e.cf.to_string()) << ","
       << (e.x ? to_exact_string(*e.x) : "") << "," << to_exact_string(e.g) << ","
       << to_decimal_string(e.g) << "\n";
  } else if (cmd == "empirical" && r.empirical) {
    os << "depth,cylinder_count,s_hat,sum_at_root,wall_time_ms\n";
    for (const auto& e : r.empirical->estimates) {
      os << e.depth << "," << e.cylinder_count << "," << format_real(e.s_hat, 21) << ","
         << format_real(e.sum_at_root, 21) << "," << format_fixed(e.wall_time_ms, 3) << "\n";
    }
  } else if (cmd == "construct" && r.construction) {
    os << "word,inf_exact,sup_exact,inf_decimal,sup_decimal,diameter_exact,diameter_decimal\n";
    for (const auto& c : r.construction->cylinders) {
      os << detail::join_word(c.word, " ") << "," << to_exact_string(c.hull.lo) << ","
         << to_exact_string(c.hull.hi) << "," << to_decimal_string(c.hull.lo) << ","
         << to_decimal_string(c.hull.hi) << "," << to_exact_string(c.diameter) << ","
         << to_decimal_string(c.diameter) << "\n";
    }
  }
  return os.str();
}

inline std::string render(const DimensionReport& r) {
  switch (r.config.format) {
    case OutputFormat::Json: return render_json(r);
    case OutputFormat::Csv: return render_csv(r);
    case OutputFormat::Text: return render_text(r);
  }
  return render_text(r);
}

}  // namespace minkdim

#endif  // MINKDIM_RENDER_HPP
