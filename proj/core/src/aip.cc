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

#include "aiplab/aip.h"

#include <cmath>
#include <string>

#include "aiplab/error.h"

namespace aiplab {

Money Solution::Raise(int32_t j, int64_t value) {
  if (j < 0 || j >= size()) {
    throw StructuralError("solution index " + std::to_string(j) +
                          " out of range");
  }
  if (value <= z_[j]) return Money::Zero();
  const Money added = (*costs_)[j] * (value - z_[j]);
  z_[j] = value;
  cost_ += added;
  return added;
}

Money Solution::MaxWith(const Increment& w) {
  Money added = Money::Zero();
  for (const auto& [j, value] : w.entries) added += Raise(j, value);
  return added;
}

Money Solution::MaxWith(const Solution& other) {
  if (other.size() != size()) {
    throw StructuralError("solution dimension mismatch");
  }
  Money added = Money::Zero();
  for (int32_t j = 0; j < size(); ++j) added += Raise(j, other.z_[j]);
  return added;
}

bool Solution::LessEq(const Solution& other) const {
  if (other.size() != size()) {
    throw StructuralError("solution dimension mismatch");
  }
  for (int32_t j = 0; j < size(); ++j) {
    if (z_[j] > other.z_[j]) return false;
  }
  return true;
}

const char* ProblemKindName(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::kSetCover:
      return "setcover";
    case ProblemKind::kSetMulticover:
      return "smc";
    case ProblemKind::kFacilityLocation:
      return "fl";
  }
  return "unknown";
}

void Problem::CheckSolution(const Solution& z) const {
  if (z.size() != num_vars()) {
    throw StructuralError("solution has " + std::to_string(z.size()) +
                          " variables, problem has " +
                          std::to_string(num_vars()));
  }
}

void Problem::CheckRequest(Request r) const {
  if (r.id < 0 || r.id >= num_requests()) {
    throw StructuralError("request id " + std::to_string(r.id) +
                          " out of range");
  }
}

bool Problem::IsFeasible(const Solution& z,
                         std::span<const Request> requests) const {
  CheckSolution(z);
  for (const Request r : requests) {
    CheckRequest(r);
    if (!Satisfies(z, r)) return false;
  }
  return true;
}

Money Problem::Aug(std::span<const Request> w, const Solution& z,
                   std::span<const Request> /*context*/) const {
  CheckSolution(z);
  if (w.empty()) return Money::Zero();
  if (w.size() > 1) {
    throw StructuralError(
        "batch augmentation is served by the exact oracle (ExactAugment)");
  }
  CheckRequest(w[0]);
  try {
    return BackupSingle(z, w[0]).cost;
  } catch (const InfeasibleError&) {
    return Money::Infinite();
  }
}

Increment Problem::Backup(std::span<const Request> w, const Solution& z,
                          std::span<const Request> /*context*/) const {
  CheckSolution(z);
  if (w.empty()) return {};
  if (w.size() > 1) {
    throw StructuralError(
        "batch backup is served by the exact oracle (ExactAugment)");
  }
  CheckRequest(w[0]);
  return BackupSingle(z, w[0]);
}

double WeightedKl(std::span<const double> c, std::span<const double> x,
                  std::span<const double> y) {
  if (c.size() != x.size() || x.size() != y.size()) {
    throw StructuralError("weighted KL: length mismatch");
  }
  double total = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] < 0 || y[i] < 0) {
      throw DomainError("weighted KL: negative coordinate");
    }
    double term = y[i] - x[i];
    if (x[i] > 0) {
      if (y[i] == 0) {
        throw DomainError("weighted KL: x_i > 0 where y_i = 0 at index " +
                          std::to_string(i));
      }
      term += x[i] * std::log(x[i] / y[i]);
    }
    total += c[i] * term;
  }
  return total;
}

}  // namespace aiplab
