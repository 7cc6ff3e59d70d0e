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

#include "aiplab/money.h"

#include <cmath>
#include <string>

#include "aiplab/error.h"

namespace aiplab {

Money Money::FromDouble(double value) {
  if (std::isinf(value) && value > 0) return Infinite();
  if (!std::isfinite(value) || value < 0) {
    throw DomainError("money must be a finite nonnegative amount");
  }
  const double micros = std::round(value * static_cast<double>(kScale));
  if (micros >= static_cast<double>(kInfMicros)) {
    throw DomainError("money amount overflows fixed-point range");
  }
  return Money(static_cast<int64_t>(micros));
}

double Money::ToDouble() const {
  if (is_infinite()) return std::numeric_limits<double>::infinity();
  return static_cast<double>(micros_) / static_cast<double>(kScale);
}

std::string Money::ToString() const {
  if (is_infinite()) return "inf";
  const bool negative = micros_ < 0;
  const uint64_t abs = negative ? -static_cast<uint64_t>(micros_)
                                : static_cast<uint64_t>(micros_);
  std::string out = std::to_string(abs / kScale);
  uint64_t frac = abs % kScale;
  if (frac != 0) {
    std::string digits = std::to_string(frac);
    digits.insert(0, 6 - digits.size(), '0');
    while (!digits.empty() && digits.back() == '0') digits.pop_back();
    out += "." + digits;
  }
  return negative ? "-" + out : out;
}

Money operator-(Money a, Money b) {
  if (a.is_infinite() || b.is_infinite()) {
    throw DomainError("difference involving infinite money");
  }
  return Money(a.micros_ - b.micros_);
}

Money operator*(Money a, int64_t k) {
  if (k < 0) throw DomainError("negative money multiplier");
  if (a.is_infinite()) return k == 0 ? Money::Zero() : a;
  if (k != 0 && a.micros_ > (Money::kInfMicros - 1) / k) {
    throw DomainError("money multiplication overflows");
  }
  return Money(a.micros_ * k);
}

std::ostream& operator<<(std::ostream& os, Money m) {
  return os << m.ToString();
}

}  // namespace aiplab
