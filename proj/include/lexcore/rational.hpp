// Copyright 2026 The lexcore Authors
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

#ifndef LEXCORE_RATIONAL_HPP
#define LEXCORE_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lexcore {

/// Exact rational number. Always held in lowest terms with a positive
/// denominator; arithmetic is arbitrary precision.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

class RationalFormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline BigInt parse_big_int(std::string_view text, std::string_view whole) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) {
    throw RationalFormatError("malformed rational \"" + std::string(whole) + "\"");
  }
  BigInt value = 0;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw RationalFormatError("malformed rational \"" + std::string(whole) + "\"");
    }
    value = value * 10 + (c - '0');
  }
  return negative ? BigInt(-value) : value;
}

}  // namespace detail

/// Parses "n" or "p/q" (optional sign on the numerator, q > 0).
inline Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(detail::parse_big_int(text, text));
  }
  const BigInt num = detail::parse_big_int(text.substr(0, slash), text);
  const std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw RationalFormatError("malformed rational \"" + std::string(text) + "\"");
  }
  const BigInt den = detail::parse_big_int(den_text, text);
  if (den == 0) {
    throw RationalFormatError("zero denominator in \"" + std::string(text) + "\"");
  }
  return Rational(num, den);
}

/// Renders integers as plain decimals and everything else as "p/q".
inline std::string to_string(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) {
    return num.str();
  }
  return num.str() + "/" + den.str();
}

inline bool is_integral(const Rational& value) {
  return boost::multiprecision::denominator(value) == 1;
}

inline BigInt denominator_of(const Rational& value) {
  return boost::multiprecision::denominator(value);
}

}  // namespace lexcore

#endif  // LEXCORE_RATIONAL_HPP
