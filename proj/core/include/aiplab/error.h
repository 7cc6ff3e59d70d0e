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

#ifndef AIPLAB_ERROR_H_
#define AIPLAB_ERROR_H_

#include <stdexcept>
#include <string>

namespace aiplab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Dimension mismatch or out-of-range index.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// A request that no augmentation can satisfy.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

// Invalid numeric domain (e.g. KL with x_i > 0 and y_i = 0).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Instance too large for an exact oracle.
class SizeGuardError : public Error {
 public:
  using Error::Error;
};

// Malformed instance file; the message carries line/field context.
class ParseError : public Error {
 public:
  using Error::Error;
};

// An internal invariant of an online algorithm was violated.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace aiplab

#endif  // AIPLAB_ERROR_H_
