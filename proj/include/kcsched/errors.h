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

#ifndef KCSCHED_ERRORS_H_
#define KCSCHED_ERRORS_H_

#include <stdexcept>
#include <string>

namespace kcsched {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or invalid instance text.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Argument outside the mathematical domain of an operation (t out of range,
// epsilon <= 0, p < 4 for the tight family, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Caller broke a documented precondition.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

// No feasible schedule exists under the given cost functions.
class InfeasibleInstance : public Error {
 public:
  using Error::Error;
};

// A due-date assignment handed to a schedule builder cannot be met.
class InfeasibleAssignment : public Error {
 public:
  InfeasibleAssignment(const std::string& what, long long first_violated_time)
      : Error(what), first_violated_time_(first_violated_time) {}
  long long first_violated_time() const { return first_violated_time_; }

 private:
  long long first_violated_time_;
};

// Instance exceeds the limits of an exact oracle.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

// A runtime-checked algorithmic invariant failed. Indicates a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace kcsched

#endif  // KCSCHED_ERRORS_H_
