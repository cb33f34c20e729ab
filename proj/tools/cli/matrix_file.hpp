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

#ifndef QFDIV_CLI_MATRIX_FILE_HPP
#define QFDIV_CLI_MATRIX_FILE_HPP

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "qfdiv/linalg.hpp"

namespace qfdiv::cli {

inline constexpr std::string_view kMatrixFormatVersion = "qfdiv-matrix/1";

/// The file could not be opened, read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The file was read but is not a well-formed matrix document.
class MatrixFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MatrixFile {
  ComplexMatrix matrix;
  nlohmann::json metadata = nlohmann::json::object();
};

/// Entries are written as 17-significant-digit decimals, so reading the text
/// back reproduces every double bit-exactly and writing it again reproduces
/// the text byte-for-byte. Throws MatrixFormatError on non-finite entries or a
/// non-square matrix.
std::string write_matrix_text(const MatrixFile& file);
MatrixFile parse_matrix_text(std::string_view text);

void save_matrix(const std::filesystem::path& path, const MatrixFile& file);
MatrixFile load_matrix(const std::filesystem::path& path);

/// load_matrix followed by validate_state. qfdiv::Error from validation
/// propagates unchanged.
DensityOperator load_state(const std::filesystem::path& path,
                           const Tolerances& tol = {});

}  // namespace qfdiv::cli

#endif  // QFDIV_CLI_MATRIX_FILE_HPP
