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

#ifndef KCSCHED_RATIONAL_H_
#define KCSCHED_RATIONAL_H_

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace kcsched {

// Exact rational number. All dual values, slacks and ratios use this type.
using Rational = mpq_class;

inline Rational MakeRational(int64_t value) {
  return Rational(static_cast<long>(value));
}

// num/den in canonical form. den must be nonzero.
inline Rational MakeRational(int64_t num, int64_t den) {
  Rational q(static_cast<long>(num), static_cast<long>(den));
  q.canonicalize();
  return q;
}

// Canonical text form: "n" for integers, "n/d" otherwise (d > 0, reduced).
std::string RationalToString(const Rational& value);

// Accepts "n", "n/d", decimals ("0.25") and scientific notation ("1e-6").
// Throws ParseError.
Rational ParseRational(std::string_view text);

}  // namespace kcsched

#endif  // KCSCHED_RATIONAL_H_
