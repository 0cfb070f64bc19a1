/*
 * Copyright 2026 The AFE Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef AFE_COMMON_ERRORS_HPP_
#define AFE_COMMON_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace afe {

// Malformed input data: bad CSV cells, schema mismatches, shape errors.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on an argument or configuration value was violated.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Failure inside a pipeline stage. `stage()` names the stage for diagnostics.
class PipelineError : public std::runtime_error {
 public:
  PipelineError(std::string stage, const std::string& what)
      : std::runtime_error(stage + ": " + what), stage_(std::move(stage)) {}

  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

}  // namespace afe

#endif  // AFE_COMMON_ERRORS_HPP_
