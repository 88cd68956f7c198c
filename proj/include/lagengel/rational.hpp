/*
   Copyright 2026 The lagengel Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef LAGENGEL_RATIONAL_HPP
#define LAGENGEL_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace lagengel {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational number. Always stored in lowest terms with a positive
/// denominator.
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return denominator_of(r) == 1; }

inline bool is_zero(const Rational& r) { return r == 0; }

/// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& r) {
    if (is_integer(r)) return numerator_of(r).str();
    return numerator_of(r).str() + "/" + denominator_of(r).str();
}

/// Parses "p", "-p" or "p/q".
inline Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    auto parse_int = [&](std::string_view s) {
        if (s.empty()) throw Error("malformed rational '" + std::string(text) + "'");
        std::size_t start = (s.front() == '-' || s.front() == '+') ? 1 : 0;
        if (start == s.size()) throw Error("malformed rational '" + std::string(text) + "'");
        for (std::size_t i = start; i < s.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                throw Error("malformed rational '" + std::string(text) + "'");
        }
        std::string digits(s.front() == '+' ? s.substr(1) : s);
        return Integer(digits);
    };
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    Integer den = parse_int(text.substr(slash + 1));
    if (den == 0) throw DivisionByZeroError("zero denominator in '" + std::string(text) + "'");
    return Rational(parse_int(text.substr(0, slash)), den);
}

}  // namespace lagengel

#endif  // LAGENGEL_RATIONAL_HPP
