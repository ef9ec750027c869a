#ifndef MINKDIM_PARSE_HPP
#define MINKDIM_PARSE_HPP

#include <algorithm>
#include <cctype>
#include <charconv>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "minkdim/continued_fraction.hpp"

namespace minkdim {

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

inline std::uint64_t parse_unsigned(std::string_view t) {
  t = trim(t);
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size())
    throw invalid_argument("expected a non-negative integer, got '" + std::string(t) + "'");
  return v;
}

inline Digit parse_digit(std::string_view t) {
  std::uint64_t v = parse_unsigned(t);
  if (v < 1 || v > std::numeric_limits<Digit>::max())
    throw invalid_argument("digit out of range: '" + std::string(t) + "'");
  return static_cast<Digit>(v);
}

}  // namespace detail

/// "1..9", "1,3,5" or a mix such as "1..3,7"; result sorted and deduplicated.
inline std::vector<Digit> parse_digit_list(std::string_view text) {
  std::vector<Digit> out;
  for (auto part : detail::split(text, ',')) {
    auto dots = part.find("..");
    if (dots == std::string_view::npos) {
      out.push_back(detail::parse_digit(part));
      continue;
    }
    Digit lo = detail::parse_digit(part.substr(0, dots));
    Digit hi = detail::parse_digit(part.substr(dots + 2));
    if (lo > hi) throw invalid_argument("empty digit range '" + std::string(part) + "'");
    for (Digit d = lo; d <= hi; ++d) out.push_back(d);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// "a..b" or a single "a".
inline std::pair<std::size_t, std::size_t> parse_depth_range(std::string_view text) {
  auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    auto d = detail::parse_unsigned(text);
    return {d, d};
  }
  return {detail::parse_unsigned(text.substr(0, dots)),
          detail::parse_unsigned(text.substr(dots + 2))};
}

/// Reads a continued fraction written as
///   "0;2,3"           finite
///   "0;1,(1,2)"       explicit period in parentheses
///   "0;1,1,1,..."     trailing ellipsis: the listed digits show the start of
///                     an eventually periodic expansion; the shortest
///                     preperiod, then shortest period, whose pattern repeats
///                     at least twice is taken.
/// Square brackets around the whole expression are optional.
inline ContinuedFraction parse_continued_fraction(std::string_view text) {
  std::string_view s = detail::trim(text);
  if (!s.empty() && s.front() == '[' && s.back() == ']') s = detail::trim(s.substr(1, s.size() - 2));
  auto semi = s.find(';');
  if (semi == std::string_view::npos || detail::trim(s.substr(0, semi)) != "0")
    throw invalid_argument("continued fraction must start with '0;'");
  std::string_view body = detail::trim(s.substr(semi + 1));
  if (body.empty()) throw invalid_argument("continued fraction has no digits");

  auto open = body.find('(');
  if (open != std::string_view::npos) {
    auto close = body.find(')', open);
    if (close == std::string_view::npos || !detail::trim(body.substr(close + 1)).empty())
      throw invalid_argument("period must be a final parenthesized group");
    std::vector<Digit> pre, per;
    std::string_view head = detail::trim(body.substr(0, open));
    if (!head.empty()) {
      if (head.back() != ',') throw invalid_argument("expected ',' before period");
      head.remove_suffix(1);
      for (auto t : detail::split(head, ',')) pre.push_back(detail::parse_digit(t));
    }
    for (auto t : detail::split(body.substr(open + 1, close - open - 1), ','))
      per.push_back(detail::parse_digit(t));
    return ContinuedFraction::periodic(std::move(pre), std::move(per));
  }

  auto tokens = detail::split(body, ',');
  bool ellipsis = tokens.back() == "..." || tokens.back() == "…";
  if (ellipsis) tokens.pop_back();
  std::vector<Digit> digits;
  for (auto t : tokens) digits.push_back(detail::parse_digit(t));
  if (!ellipsis) return ContinuedFraction::finite(std::move(digits));

  for (std::size_t pre = 0; pre < digits.size(); ++pre) {
    std::size_t tail = digits.size() - pre;
    for (std::size_t p = 1; 2 * p <= tail; ++p) {
      bool ok = true;
      for (std::size_t i = pre + p; i < digits.size() && ok; ++i) ok = digits[i] == digits[i - p];
      if (ok) {
        return ContinuedFraction::periodic({digits.begin(), digits.begin() + pre},
                                           {digits.begin() + pre, digits.begin() + pre + p});
      }
    }
  }
  throw invalid_argument("cannot infer a period from '" + std::string(text) +
                         "'; list the repeating block at least twice or use parentheses");
}

}  // namespace minkdim

#endif  // MINKDIM_PARSE_HPP
