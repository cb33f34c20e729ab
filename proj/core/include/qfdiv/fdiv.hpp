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

#ifndef QFDIV_FDIV_HPP
#define QFDIV_FDIV_HPP

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qfdiv/extended_real.hpp"
#include "qfdiv/ns.hpp"

namespace qfdiv {

enum class Shape { Convex, Concave };

/// A convex or concave f on (0, inf) together with its boundary values
///
///   f(0) = lim_{t -> 0+} f(t),    f'(inf) = lim_{t -> inf} f(t) / t,
///
/// which must be given explicitly. All logarithms are natural (base e).
/// The evaluator must be reentrant.
class DivergenceFunction {
 public:
  /// Throws InvalidDivergenceFunction when a convex f declares a -inf
  /// boundary value or a concave f declares a +inf one.
  DivergenceFunction(std::string name, std::function<double(double)> f,
                     ExtendedReal f_at_zero, ExtendedReal f_prime_at_infinity,
                     Shape shape);

  double operator()(double t) const { return f_(t); }
  const std::string& name() const noexcept { return name_; }
  const ExtendedReal& f_at_zero() const noexcept { return f0_; }
  const ExtendedReal& f_prime_at_infinity() const noexcept { return finf_; }
  Shape shape() const noexcept { return shape_; }

 private:
  std::string name_;
  std::function<double(double)> f_;
  ExtendedReal f0_;
  ExtendedReal finf_;
  Shape shape_;
};

/// Result of the optional midpoint-convexity spot check.
struct ConvexityCheck {
  bool consistent = true;       ///< no midpoint violation beyond tolerance
  double worst_violation = 0;   ///< largest violation seen (>= 0)
  double worst_t = 0;           ///< left grid point of that violation
};

/// Midpoint (con|con)vexity on a log-spaced grid over [1e-6, 1e6]. Advisory
/// only: a failure is a warning, never an error.
ConvexityCheck convexity_spot_check(const DivergenceFunction& f,
                                    int points = 241);

/// Probability weights on a finite index set.
class DiscreteDistribution {
 public:
  /// Throws InvalidDistribution unless weights are finite, >= 0 and sum to 1
  /// within 1e-9.
  explicit DiscreteDistribution(std::vector<double> weights);

  std::span<const double> weights() const noexcept { return weights_; }
  std::size_t size() const noexcept { return weights_.size(); }
  double operator[](std::size_t i) const { return weights_[i]; }

 private:
  std::vector<double> weights_;
};

/// D_f(P||Q) = sum_{P>0,Q>0} Q f(P/Q) + f(0) Q(P=0) + f'(inf) P(Q=0),
/// with 0 * (+-inf) = 0. Throws IndexMismatch, IllFormedInfinitySum.
ExtendedReal classical_f_divergence(const DiscreteDistribution& p,
                                    const DiscreteDistribution& q,
                                    const DivergenceFunction& f);

/// D_f of the NS distributions straight from (r, s, overlaps): ratios are
/// r_i / s_j, never P(i,j) / Q(i,j).
ExtendedReal ns_f_divergence(const NSPair& ns, const DivergenceFunction& f);

/// Row-major flattening of P and Q as distributions on I x I.
std::pair<DiscreteDistribution, DiscreteDistribution> flatten(
    const NSPair& ns);

/// Built-in divergence generators.
///
///   kl               t ln t              f(0)=0        f'(inf)=+inf
///   renyi_alpha      t^a                 (a<1: 0, 0, concave; a>1: 0, +inf)
///   hellinger_sq     (sqrt t - 1)^2 / 2  f(0)=1/2      f'(inf)=1/2
///   hellinger_alpha  (t^a - 1)/(a - 1)   (a<1: 1/(1-a), 0; a>1: -1/(a-1), +inf)
///   total_variation  |t - 1|             f(0)=1        f'(inf)=1
///   chi_sq           (t - 1)^2           f(0)=1        f'(inf)=+inf
///
/// Throws UnknownName, AlphaOutOfRange (a <= 0, a == 1, or non-finite).
DivergenceFunction builtin(std::string_view name, double alpha = 0.0);

/// Names accepted by builtin().
std::span<const std::string_view> builtin_names();
bool builtin_takes_alpha(std::string_view name);

/// (1/(a-1)) ln(value) for value = D_{t^a}, in extended arithmetic.
/// Throws AlphaOutOfRange, NegativeDivergenceValue.
ExtendedReal renyi_from_power_divergence(const ExtendedReal& value,
                                         double alpha);

/// Throws AlphaOutOfRange unless alpha in (0,1) U (1,inf).
void require_alpha(double alpha);

/// Kahan-compensated sum.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double y = x - c_;
    const double t = sum_ + y;
    c_ = (t - sum_) - y;
    sum_ = t;
  }
  double get() const noexcept { return sum_; }

 private:
  double sum_ = 0.0;
  double c_ = 0.0;
};

}  // namespace qfdiv

#endif  // QFDIV_FDIV_HPP
