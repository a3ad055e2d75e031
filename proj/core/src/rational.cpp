// Copyright 2026 The dicolor Authors
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

#include "dicolor/rational.hpp"

#include <charconv>

#include "dicolor/error.hpp"

namespace dicolor {

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace {

std::int64_t parse_int(std::string_view text, const std::string& whole) {
  std::int64_t value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw ParseError("invalid rational '" + whole + "'");
  }
  return value;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const std::string_view view(text);
  const auto slash = view.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(view, text));
  const std::int64_t num = parse_int(view.substr(0, slash), text);
  const std::int64_t den = parse_int(view.substr(slash + 1), text);
  if (den == 0) throw ParseError("zero denominator in '" + text + "'");
  return Rational(num, den);
}

}  // namespace dicolor
