// Copyright 2026 The kcsched Authors
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

#include "kcsched/rational.h"

#include <cctype>
#include <string>

#include "kcsched/errors.h"

namespace kcsched {

std::string RationalToString(const Rational& value) {
  Rational canonical = value;
  canonical.canonicalize();
  return canonical.get_str();
}

namespace {

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class ParseInteger(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!AllDigits(s)) throw ParseError("not a number");
  mpz_class z(std::string(s), 10);
  return negative ? mpz_class(-z) : z;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  const std::string original(text);
  try {
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
      mpz_class num = ParseInteger(text.substr(0, slash));
      mpz_class den = ParseInteger(text.substr(slash + 1));
      if (den == 0) throw ParseError("zero denominator");
      Rational q(num, den);
      q.canonicalize();
      return q;
    }
    long exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
      mpz_class exp = ParseInteger(text.substr(e + 1));
      if (!exp.fits_slong_p() || abs(exp) > 4096) {
        throw ParseError("exponent out of range");
      }
      exponent = exp.get_si();
      text = text.substr(0, e);
    }
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
      negative = text.front() == '-';
      text.remove_prefix(1);
    }
    std::string digits;
    long scale = 0;
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
      std::string_view whole = text.substr(0, dot);
      std::string_view frac = text.substr(dot + 1);
      if (whole.empty() && frac.empty()) throw ParseError("not a number");
      if ((!whole.empty() && !AllDigits(whole)) ||
          (!frac.empty() && !AllDigits(frac))) {
        throw ParseError("not a number");
      }
      digits = std::string(whole) + std::string(frac);
      scale = static_cast<long>(frac.size());
    } else {
      if (!AllDigits(text)) throw ParseError("not a number");
      digits = std::string(text);
    }
    mpz_class num(digits, 10);
    if (negative) num = -num;
    long power = exponent - scale;
    mpz_class ten_power;
    mpz_ui_pow_ui(ten_power.get_mpz_t(), 10,
                  static_cast<unsigned long>(power < 0 ? -power : power));
    Rational q = power >= 0 ? Rational(num * ten_power) : Rational(num, ten_power);
    q.canonicalize();
    return q;
  } catch (const ParseError& e) {
    throw ParseError("invalid rational '" + original + "': " + e.what());
  }
}

}  // namespace kcsched
