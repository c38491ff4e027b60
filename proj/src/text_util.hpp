// Copyright 2026 The matchembed Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MATCHEMBED_TEXT_UTIL_HPP_
#define MATCHEMBED_TEXT_UTIL_HPP_

#include <charconv>
#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace matchembed {

inline std::string_view StripComment(std::string_view line) {
  const auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

inline std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

inline std::vector<std::string_view> Tokenize(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::vector<std::string_view> SplitList(std::string_view s,
                                               char sep = ',') {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto end = s.find(sep, start);
    const auto piece = Trim(s.substr(
        start, end == std::string_view::npos ? std::string_view::npos
                                             : end - start));
    if (!piece.empty()) out.push_back(piece);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

template <typename T>
T ParseNumber(std::string_view token, const std::string& what) {
  token = Trim(token);
  T value{};
  const char* begin = token.data();
  const char* end = token.data() + token.size();
  if (!token.empty() && *begin == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  Require(ec == std::errc() && ptr == end && begin != end,
          "invalid " + what + " '" + std::string(token) + "'",
          ErrorCode::kParse);
  return value;
}

inline int ParseInt(std::string_view token, const std::string& what) {
  return ParseNumber<int>(token, what);
}

inline std::uint64_t ParseUint64(std::string_view token,
                                 const std::string& what) {
  return ParseNumber<std::uint64_t>(token, what);
}

inline double ParseDouble(std::string_view token, const std::string& what) {
  const double v = ParseNumber<double>(token, what);
  Require(std::isfinite(v), what + " must be finite", ErrorCode::kParse);
  return v;
}

// Shortest representation that parses back to the same double.
inline std::string FormatDouble(double value) {
  if (std::isnan(value)) return "nan";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

}  // namespace matchembed

#endif  // MATCHEMBED_TEXT_UTIL_HPP_
