// Copyright 2026 The qiso Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace qiso {

/// Brute-force enumeration would exceed the configured element cap.  All
/// enumeration-backed oracles raise this instead of silently degrading.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense simulation above the supported register width.
class TooManyQubits : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input sits in the undefined gap of a promise.
class PromiseViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qiso
