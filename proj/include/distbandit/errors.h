// Copyright 2026 The distbandit Authors.
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

#ifndef DISTBANDIT_ERRORS_H_
#define DISTBANDIT_ERRORS_H_

#include <stdexcept>
#include <string>
#include <vector>

namespace distbandit {

// Argument outside the mathematical domain of a function (e.g. a
// probability outside [0, 1]).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Caller violated a documented precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The query has no meaning for this input (e.g. a density-based diagnostic
// on a schedule of density 0 or 1).
class NotApplicableError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Not enough data to answer (e.g. density of a one-element explicit set).
class InsufficientDataError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Lookup of a key that was never recorded.
class LookupError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Two tables whose shapes must agree do not.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Filesystem failure; the message names the path involved.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed schedule/policy string, or an invalid experiment configuration.
// Carries every problem found, not only the first.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(std::vector<std::string> errors);
  explicit ConfigError(const std::string& error)
      : ConfigError(std::vector<std::string>{error}) {}

  const std::vector<std::string>& errors() const { return errors_; }

 private:
  std::vector<std::string> errors_;
};

}  // namespace distbandit

#endif  // DISTBANDIT_ERRORS_H_
