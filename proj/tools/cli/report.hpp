// Copyright 2026 The qfdiv Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QFDIV_CLI_REPORT_HPP
#define QFDIV_CLI_REPORT_HPP

#include <chrono>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "qfdiv/extended_real.hpp"

namespace qfdiv::cli {

/// One self-describing JSON document per run. Extended reals are encoded as
/// strings: "inf", "-inf" or a 17-significant-digit decimal.
class RunReport {
 public:
  explicit RunReport(std::string command);

  nlohmann::json& inputs() { return inputs_; }
  void add_case(nlohmann::json result, bool passed);
  /// A replay key for a failing case, printed in the human summary.
  void add_failure_key(std::string key);

  int passed() const noexcept { return passed_; }
  int failed() const noexcept { return failed_; }
  const std::vector<std::string>& failure_keys() const noexcept {
    return failure_keys_;
  }

  nlohmann::json to_json() const;
  void write(const std::filesystem::path& path) const;

 private:
  std::string command_;
  nlohmann::json inputs_ = nlohmann::json::object();
  nlohmann::json cases_ = nlohmann::json::array();
  std::vector<std::string> failure_keys_;
  int passed_ = 0;
  int failed_ = 0;
  std::chrono::steady_clock::time_point start_;
};

std::string encode(const ExtendedReal& x);
/// Throws std::invalid_argument on text that is not an extended real.
ExtendedReal decode(const std::string& text);

}  // namespace qfdiv::cli

#endif  // QFDIV_CLI_REPORT_HPP
