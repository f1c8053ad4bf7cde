// Copyright 2026 The SIoT Trust Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Small string helpers shared by the file formats and the CLI.

#ifndef SIOT_TEXT_H_
#define SIOT_TEXT_H_

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "siot/types.h"

namespace siot::text {

inline std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

inline std::string ToLower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

// Splits on `sep`, trimming each piece. An empty input yields no pieces.
inline std::vector<std::string> Split(std::string_view s, char sep) {
  std::vector<std::string> out;
  if (Trim(s).empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    const std::string_view piece =
        s.substr(start, pos == std::string_view::npos ? s.size() - start
                                                      : pos - start);
    out.emplace_back(Trim(piece));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

inline double ParseDouble(std::string_view s) {
  s = Trim(s);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw InvalidArgument("not a number: '" + std::string(s) + "'");
  }
  return value;
}

template <typename Int = std::int64_t>
Int ParseInt(std::string_view s) {
  s = Trim(s);
  Int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw InvalidArgument("not an integer: '" + std::string(s) + "'");
  }
  return value;
}

// Shortest representation that parses back to the same double.
inline std::string FormatDouble(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) return "nan";
  return std::string(buf, ptr);
}

// Fixed-precision form used in CSV reports.
inline std::string FormatFixed(double v, int precision = 6) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v,
                                       std::chars_format::fixed, precision);
  if (ec != std::errc()) return "nan";
  return std::string(buf, ptr);
}

template <typename Range, typename Fn>
std::string Join(const Range& items, std::string_view sep, Fn&& fn) {
  std::string out;
  bool first = true;
  for (const auto& item : items) {
    if (!first) out.append(sep);
    first = false;
    out += fn(item);
  }
  return out;
}

}  // namespace siot::text

#endif  // SIOT_TEXT_H_
