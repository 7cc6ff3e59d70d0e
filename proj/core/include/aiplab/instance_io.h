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

// JSON instance files.
//
//   set cover:   {"type": "setcover", "N": 4, "m": 2,
//                 "sets": [[0, 1], [2, 3]], "costs": [1, 2.5]}
//   multicover:  {"type": "smc", "n": 2, "m": 3,
//                 "rows": [[0, 1], [1, 2]], "demands": [2, 1],
//                 "costs": [1, 1, 1]}
//   facility:    {"type": "fl", "m": 2, "n": 1, "metric": false,
//                 "costs": [5, 3], "connection_costs": [[1, "inf"]]}
//
// Optional keys on every type: "id" (string) and "distributions", a list of
// {"support": [request ids], "weights": [positive integers]} used by the
// prophet arrival models. Amounts are decimal numbers with at most six
// fractional digits; an infinite connection cost is the string "inf".

#ifndef AIPLAB_INSTANCE_IO_H_
#define AIPLAB_INSTANCE_IO_H_

#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "aiplab/aip.h"
#include "aiplab/instances.h"

namespace aiplab {

struct InstanceBundle {
  std::string id;
  std::shared_ptr<const Problem> problem;
  std::vector<DiscreteDistribution> distributions;

  const SetCoverInstance* set_cover() const {
    return dynamic_cast<const SetCoverInstance*>(problem.get());
  }
  const SmcInstance* multicover() const {
    return dynamic_cast<const SmcInstance*>(problem.get());
  }
  const FlInstance* facility_location() const {
    return dynamic_cast<const FlInstance*>(problem.get());
  }
};

// Same problem type, same content, same distributions. Ids are ignored.
bool SameInstance(const InstanceBundle& a, const InstanceBundle& b);

// Throws ParseError with the line (syntax errors) or the JSON field path
// (schema errors) of the first problem found; instances that fail the
// problem invariants (e.g. an uncoverable element) are rejected the same
// way.
InstanceBundle ParseInstance(std::string_view text,
                             std::string_view source = "<string>");
InstanceBundle LoadInstance(const std::filesystem::path& path);

std::string SerializeInstance(const InstanceBundle& bundle);
void SaveInstance(const InstanceBundle& bundle,
                  const std::filesystem::path& path);

}  // namespace aiplab

#endif  // AIPLAB_INSTANCE_IO_H_
