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

#include "cli/matrix_file.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "qfdiv/extended_real.hpp"

namespace qfdiv::cli {
namespace {

// format_double plus a ".0" when the text would otherwise read as an integer.
std::string json_number(double v) {
  std::string s = format_double(v);
  if (s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

double entry_part(const nlohmann::json& v, const char* what) {
  if (!v.is_number()) {
    throw MatrixFormatError(std::string("entry ") + what + " is not a number");
  }
  return v.get<double>();
}

}  // namespace

std::string write_matrix_text(const MatrixFile& file) {
  const auto& m = file.matrix;
  if (m.rows() != m.cols()) throw MatrixFormatError("matrix is not square");
  std::ostringstream os;
  os << "{\n  \"format_version\": \"" << kMatrixFormatVersion << "\",\n";
  os << "  \"dim\": " << m.rows() << ",\n";
  os << "  \"entries\": [";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const Complex z = m(i, j);
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw MatrixFormatError("non-finite entry");
      }
      os << (i == 0 && j == 0 ? "\n" : ",\n") << "    [" << json_number(z.real())
         << ", " << json_number(z.imag()) << "]";
    }
  }
  os << "\n  ]";
  if (!file.metadata.is_null() && !file.metadata.empty()) {
    os << ",\n  \"metadata\": " << file.metadata.dump();
  }
  os << "\n}\n";
  return os.str();
}

MatrixFile parse_matrix_text(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw MatrixFormatError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw MatrixFormatError("document is not an object");
  const auto version = doc.find("format_version");
  if (version == doc.end() || !version->is_string() ||
      version->get<std::string>() != kMatrixFormatVersion) {
    throw MatrixFormatError("missing or unsupported format_version");
  }
  const auto dim_it = doc.find("dim");
  if (dim_it == doc.end() || !dim_it->is_number_integer() ||
      dim_it->get<long long>() < 1 || dim_it->get<long long>() > 1 << 16) {
    throw MatrixFormatError("dim must be a positive integer");
  }
  const auto dim = static_cast<Eigen::Index>(dim_it->get<long long>());
  const auto entries = doc.find("entries");
  if (entries == doc.end() || !entries->is_array() ||
      static_cast<Eigen::Index>(entries->size()) != dim * dim) {
    throw MatrixFormatError("entries must hold dim^2 pairs");
  }
  MatrixFile out;
  out.matrix.resize(dim, dim);
  for (Eigen::Index k = 0; k < dim * dim; ++k) {
    const auto& pair = (*entries)[static_cast<std::size_t>(k)];
    if (!pair.is_array() || pair.size() != 2) {
      throw MatrixFormatError("entry " + std::to_string(k) +
                              " is not a [re, im] pair");
    }
    out.matrix(k / dim, k % dim) =
        Complex(entry_part(pair[0], "re"), entry_part(pair[1], "im"));
  }
  if (const auto meta = doc.find("metadata"); meta != doc.end()) {
    if (!meta->is_object()) throw MatrixFormatError("metadata must be an object");
    out.metadata = *meta;
  }
  return out;
}

void save_matrix(const std::filesystem::path& path, const MatrixFile& file) {
  const std::string text = write_matrix_text(file);
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw IoError("cannot open " + path.string() + " for writing");
  os.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!os) throw IoError("write failed: " + path.string());
}

MatrixFile load_matrix(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << is.rdbuf();
  if (is.bad()) throw IoError("read failed: " + path.string());
  return parse_matrix_text(buf.str());
}

DensityOperator load_state(const std::filesystem::path& path,
                           const Tolerances& tol) {
  return validate_state(load_matrix(path).matrix, tol);
}

}  // namespace qfdiv::cli
