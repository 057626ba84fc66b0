// Copyright 2026 The ccround Authors.
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

#ifndef CCROUND_ERRORS_H_
#define CCROUND_ERRORS_H_

#include <stdexcept>
#include <string>

namespace ccround {

// A caller broke a documented precondition (bad argument, wrong instance
// class, vertex missing from an assignment).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Malformed input text: edge lists, JSON instances, LP dumps, scheme files.
class DataFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The LP engine gave up: iteration cap, breakdown, lost feasibility.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ccround

#endif  // CCROUND_ERRORS_H_
