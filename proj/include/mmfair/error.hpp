// Copyright 2026 The mmfair Authors
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

#ifndef MMFAIR_ERROR_HPP
#define MMFAIR_ERROR_HPP

#include <stdexcept>
#include <string>

namespace mmfair {

/// Base of every error raised for bad caller input. The CLI maps these to
/// exit status 1; anything else escaping a command is an internal fault.
class input_error : public std::runtime_error {
 public:
  input_error(const std::string& kind, const std::string& detail)
      : std::runtime_error(detail.empty() ? kind : kind + ": " + detail) {}
};

class malformed_input : public input_error {
 public:
  explicit malformed_input(const std::string& detail)
      : input_error("malformed input", detail) {}
};

class invalid_scenario : public input_error {
 public:
  explicit invalid_scenario(const std::string& detail)
      : input_error("invalid scenario", detail) {}
};

class infeasible_allocation : public input_error {
 public:
  explicit infeasible_allocation(const std::string& detail)
      : input_error("infeasible allocation", detail) {}
};

class invalid_coalition : public input_error {
 public:
  explicit invalid_coalition(const std::string& detail)
      : input_error("invalid coalition", detail) {}
};

class coalition_space_too_large : public input_error {
 public:
  explicit coalition_space_too_large(const std::string& detail)
      : input_error("coalition space too large", detail) {}
};

class games_differ : public input_error {
 public:
  explicit games_differ(const std::string& detail)
      : input_error("games differ", detail) {}
};

class allocation_incomplete : public input_error {
 public:
  explicit allocation_incomplete(const std::string& detail)
      : input_error("allocation incomplete", detail) {}
};

class unpaired_series : public input_error {
 public:
  explicit unpaired_series(const std::string& detail)
      : input_error("unpaired series", detail) {}
};

class insufficient_samples : public input_error {
 public:
  explicit insufficient_samples(const std::string& detail)
      : input_error("insufficient samples", detail) {}
};

class invalid_parameter : public input_error {
 public:
  explicit invalid_parameter(const std::string& detail)
      : input_error("invalid parameter", detail) {}
};

/// A library postcondition did not hold. Indicates a bug, not bad input.
class invariant_violation : public std::logic_error {
 public:
  explicit invariant_violation(const std::string& detail)
      : std::logic_error("invariant violation: " + detail) {}
};

}  // namespace mmfair

#endif  // MMFAIR_ERROR_HPP
