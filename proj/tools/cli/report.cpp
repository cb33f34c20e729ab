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

#include "cli/report.hpp"

#include <fstream>
#include <stdexcept>

#include "cli/matrix_file.hpp"

namespace qfdiv::cli {

RunReport::RunReport(std::string command)
    : command_(std::move(command)), start_(std::chrono::steady_clock::now()) {}

void RunReport::add_case(nlohmann::json result, bool passed) {
  result["passed"] = passed;
  cases_.push_back(std::move(result));
  ++(passed ? passed_ : failed_);
}

void RunReport::add_failure_key(std::string key) {
  failure_keys_.push_back(std::move(key));
}

nlohmann::json RunReport::to_json() const {
  const std::chrono::duration<double> wall =
      std::chrono::steady_clock::now() - start_;
  return {
      {"command", command_},
      {"inputs", inputs_},
      {"cases", cases_},
      {"passed", passed_},
      {"failed", failed_},
      {"failing_cases", failure_keys_},
      {"wall_seconds", format_double(wall.count())},
  };
}

void RunReport::write(const std::filesystem::path& path) const {
  std::ofstream os(path, std::ios::trunc);
  if (!os) throw IoError("cannot open report " + path.string());
  os << to_json().dump(2) << '\n';
  if (!os) throw IoError("write failed: " + path.string());
}

std::string encode(const ExtendedReal& x) { return x.to_string(); }

ExtendedReal decode(const std::string& text) {
  auto v = ExtendedReal::parse(text);
  if (!v) throw std::invalid_argument("not an extended real: " + text);
  return *v;
}

}  // namespace qfdiv::cli
