#pragma once

#include <charconv>
#include <optional>
#include <string>
#include <string_view>
#include <system_error>

namespace chordgeom {

/// Shortest decimal string that parses back to exactly `v`; locale independent.
inline std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

/// Parses the whole of `text` as a double; no locale, no leading '+', no trailing junk.
inline std::optional<double> parse_double(std::string_view text) {
  double v = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc() || res.ptr != last) return std::nullopt;
  return v;
}

}  // namespace chordgeom
