#pragma once

#include <charconv>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "octo/octonion.hpp"

namespace octo {

/// Shortest round-trip decimal form of a double, independent of the C locale.
/// Negative zero prints as "0".
inline std::string format_real(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  if (res.ec != std::errc{}) throw std::runtime_error("format_real: to_chars failed");
  return std::string(buf, res.ptr);
}

/// "c0,c1,c2,c3,c4,c5,c6,c7".
inline std::string format_octonion(const Octonion& x) {
  std::string out;
  for (std::size_t i = 0; i < 8; ++i) {
    if (i) out += ',';
    out += format_real(x[i]);
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Octonion& x) { return os << format_octonion(x); }

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

inline double parse_real(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    throw std::invalid_argument("not a decimal literal: '" + std::string(s) + "'");
  if (!std::isfinite(v)) throw std::invalid_argument("non-finite component: '" + std::string(s) + "'");
  return v;
}

}  // namespace detail

/// Parses "c0,...,c7". Exactly eight finite components are required.
inline Octonion parse_octonion(std::string_view text) {
  Octonion::Components c{};
  std::size_t count = 0;
  while (true) {
    const auto comma = text.find(',');
    const auto field = text.substr(0, comma);
    if (count == 8) throw std::invalid_argument("octonion literal has more than 8 components");
    c[count++] = detail::parse_real(field);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (count != 8) throw std::invalid_argument("octonion literal needs 8 components, got " + std::to_string(count));
  return Octonion(c);
}

/// Parses a semicolon-separated list of octonion literals, lowest degree first.
inline std::vector<Octonion> parse_octonion_list(std::string_view text) {
  std::vector<Octonion> out;
  while (true) {
    const auto semi = text.find(';');
    const auto field = detail::trim(text.substr(0, semi));
    if (!field.empty()) out.push_back(parse_octonion(field));
    if (semi == std::string_view::npos) break;
    text.remove_prefix(semi + 1);
  }
  if (out.empty()) throw std::invalid_argument("empty series literal");
  return out;
}

}  // namespace octo
