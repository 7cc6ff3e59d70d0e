// Copyright 2026 The Authors.
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

#ifndef AIPLAB_MONEY_H_
#define AIPLAB_MONEY_H_

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>

namespace aiplab {

// Fixed-point cost with six fractional digits and a dedicated infinity
// sentinel. Arithmetic on finite values is exact; anything involving the
// sentinel stays infinite.
class Money {
 public:
  static constexpr int64_t kScale = 1'000'000;

  constexpr Money() = default;

  static constexpr Money FromMicros(int64_t micros) { return Money(micros); }
  static constexpr Money FromUnits(int64_t units) {
    return Money(units * kScale);
  }
  // Rounds to the nearest micro-unit. Non-finite or negative inputs throw.
  static Money FromDouble(double value);
  static constexpr Money Infinite() { return Money(kInfMicros); }
  static constexpr Money Zero() { return Money(0); }

  constexpr bool is_infinite() const { return micros_ == kInfMicros; }
  constexpr bool is_finite() const { return micros_ != kInfMicros; }
  constexpr int64_t micros() const { return micros_; }

  // Infinite maps to +inf.
  double ToDouble() const;

  // "inf" for the sentinel, otherwise the shortest exact decimal.
  std::string ToString() const;

  constexpr Money& operator+=(Money other) {
    if (is_infinite() || other.is_infinite()) {
      micros_ = kInfMicros;
    } else {
      micros_ += other.micros_;
    }
    return *this;
  }
  friend constexpr Money operator+(Money a, Money b) { return a += b; }

  // Finite difference; the caller guarantees both operands are finite.
  friend Money operator-(Money a, Money b);

  // Multiplication by a nonnegative integer count (markups, multiplicities).
  friend Money operator*(Money a, int64_t k);
  friend Money operator*(int64_t k, Money a) { return a * k; }

  friend constexpr auto operator<=>(Money a, Money b) = default;
  friend constexpr bool operator==(Money a, Money b) = default;

 private:
  static constexpr int64_t kInfMicros = std::numeric_limits<int64_t>::max();
  explicit constexpr Money(int64_t micros) : micros_(micros) {}

  int64_t micros_ = 0;
};

std::ostream& operator<<(std::ostream& os, Money m);

}  // namespace aiplab

#endif  // AIPLAB_MONEY_H_
