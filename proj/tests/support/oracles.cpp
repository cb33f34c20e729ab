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

#include "support/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>
#include <unsupported/Eigen/MatrixFunctions>

namespace qfdiv::oracle {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Eigen::CompleteOrthogonalDecomposition<ComplexMatrix> cod(const ComplexMatrix& a) {
  Eigen::CompleteOrthogonalDecomposition<ComplexMatrix> d;
  d.setThreshold(1e-10);
  d.compute(a);
  return d;
}

ComplexMatrix pinv(const ComplexMatrix& a) { return cod(a).pseudoInverse(); }

}  // namespace

ComplexMatrix logm(const ComplexMatrix& a) { return a.log(); }
ComplexMatrix sqrtm(const ComplexMatrix& a) { return a.sqrt(); }
ComplexMatrix powm(const ComplexMatrix& a, double p) { return a.pow(p); }

double umegaki(const ComplexMatrix& rho, const ComplexMatrix& sigma) {
  return (rho * (logm(rho) - logm(sigma))).trace().real();
}

double petz_renyi(const ComplexMatrix& rho, const ComplexMatrix& sigma,
                  double alpha) {
  const double t = (powm(rho, alpha) * powm(sigma, 1.0 - alpha)).trace().real();
  return std::log(t) / (alpha - 1.0);
}

double hellinger_sq(const ComplexMatrix& rho, const ComplexMatrix& sigma) {
  return 1.0 - (sqrtm(rho) * sqrtm(sigma)).trace().real();
}

double trace_norm(const ComplexMatrix& m) {
  return Eigen::JacobiSVD<ComplexMatrix>(m).singularValues().sum();
}

ComplexMatrix range_projector(const ComplexMatrix& a) { return a * pinv(a); }

double mass_off_range(const ComplexMatrix& sigma, const ComplexMatrix& rho) {
  const ComplexMatrix id = ComplexMatrix::Identity(rho.rows(), rho.cols());
  return (sigma * (id - range_projector(rho))).trace().real();
}

bool range_contained(const ComplexMatrix& rho, const ComplexMatrix& sigma,
                     double tol) {
  const ComplexMatrix pr = range_projector(rho);
  const ComplexMatrix ps = range_projector(sigma);
  return (ps * pr - pr).norm() <= tol;
}

std::vector<double> superoperator_spectrum(const ComplexMatrix& rho,
                                           const ComplexMatrix& sigma) {
  const ComplexMatrix sp = pinv(sigma);
  const Eigen::Index d = rho.rows();
  // vec(A X B) = (B^T kron A) vec(X) for column-major vec.
  ComplexMatrix m(d * d, d * d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      m.block(i * d, j * d, d, d) = sp(j, i) * rho;
    }
  }
  Eigen::ComplexEigenSolver<ComplexMatrix> es(m, false);
  if (es.info() != Eigen::Success) throw std::runtime_error("eigensolver");
  const double scale = es.eigenvalues().cwiseAbs().maxCoeff();
  std::vector<double> out;
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
    const Complex z = es.eigenvalues()(k);
    if (std::abs(z) > 1e-9 * scale) out.push_back(z.real());
  }
  std::sort(out.begin(), out.end());
  return out;
}

double classical(std::string_view name, double alpha,
                 const std::vector<double>& p, const std::vector<double>& q) {
  if (p.size() != q.size()) throw std::invalid_argument("length mismatch");
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double a = p[i];
    const double b = q[i];
    if (a == 0.0 && b == 0.0) continue;
    if (name == "kl") {
      if (a == 0.0) continue;
      if (b == 0.0) return kInf;
      sum += a * std::log(a / b);
    } else if (name == "chi_sq") {
      if (b == 0.0) return kInf;
      sum += (a - b) * (a - b) / b;
    } else if (name == "total_variation") {
      sum += std::abs(a - b);
    } else if (name == "hellinger_sq") {
      const double d = std::sqrt(a) - std::sqrt(b);
      sum += 0.5 * d * d;
    } else if (name == "renyi_alpha") {
      if (b == 0.0) {
        if (alpha > 1.0) return kInf;
        continue;
      }
      sum += std::pow(a, alpha) * std::pow(b, 1.0 - alpha);
    } else if (name == "hellinger_alpha") {
      // (sum p^a q^(1-a) - 1) / (a - 1), assembled after the loop.
      if (b == 0.0) {
        if (alpha > 1.0) return kInf;
        continue;
      }
      sum += std::pow(a, alpha) * std::pow(b, 1.0 - alpha);
    } else {
      throw std::invalid_argument("unknown divergence " + std::string(name));
    }
  }
  if (name == "hellinger_alpha") return (sum - 1.0) / (alpha - 1.0);
  return sum;
}

}  // namespace qfdiv::oracle
