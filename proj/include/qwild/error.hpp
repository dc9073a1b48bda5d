// Copyright 2026 The qwild Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qwild {

/// Raised for malformed user input: bad strings, terms, expressions, files.
class input_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Expression or DIMACS syntax error carrying the byte offset of the problem.
class parse_error : public input_error {
 public:
  parse_error(const std::string& what, std::size_t position)
      : input_error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace qwild
