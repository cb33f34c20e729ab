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

#include "qfdiv/fdiv.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "qfdiv/error.hpp"

namespace qfdiv {
namespace {

constexpr double kDistributionSumTolerance = 1e-9;

// Accumulates sum_k y_k f(x_k) plus the two boundary masses.
struct DivergenceAccumulator {
  CompensatedSum finite;
  ExtendedReal infinite_terms;
  CompensatedSum mass_where_p_zero;
  CompensatedSum mass_where_q_zero;

  void add_term(const DivergenceFunction& f, double ratio, double weight) {
    const double v = f(ratio);
    if (std::isfinite(v)) {
      finite.add(v * weight);
    } else {
      infinite_terms += ExtendedReal::from_double(v).scaled(weight);
    }
  }

  ExtendedReal result(const DivergenceFunction& f) const {
    ExtendedReal out = ExtendedReal::from_double(finite.get());
    out += infinite_terms;
    out += f.f_at_zero().scaled(mass_where_p_zero.get());
    out += f.f_prime_at_infinity().scaled(mass_where_q_zero.get());
    return out;
  }
};

constexpr std::array<std::string_view, 6> kBuiltinNames = {
    "kl",      "renyi_alpha",     "hellinger_sq",
    "hellinger_alpha", "total_variation", "chi_sq"};

std::string with_alpha(std::string_view name, double alpha) {
  return std::string(name) + "(" + format_double(alpha) + ")";
}

}  // namespace

DivergenceFunction::DivergenceFunction(std::string name,
                                       std::function<double(double)> f,
                                       ExtendedReal f_at_zero,
                                       ExtendedReal f_prime_at_infinity,
                                       Shape shape)
    : name_(std::move(name)),
      f_(std::move(f)),
      f0_(f_at_zero),
      finf_(f_prime_at_infinity),
      shape_(shape) {
  if (!f_) {
    throw Error(ErrorCode::InvalidDivergenceFunction, name_ + ": empty evaluator");
  }
  if (shape_ == Shape::Convex &&
      (f0_.is_minus_infinity() || finf_.is_minus_infinity())) {
    throw Error(ErrorCode::InvalidDivergenceFunction,
                name_ + ": convex f cannot have f(0) or f'(inf) equal to -inf");
  }
  if (shape_ == Shape::Concave &&
      (f0_.is_plus_infinity() || finf_.is_plus_infinity())) {
    throw Error(ErrorCode::InvalidDivergenceFunction,
                name_ + ": concave f cannot have f(0) or f'(inf) equal to +inf");
  }
}

ConvexityCheck convexity_spot_check(const DivergenceFunction& f, int points) {
  ConvexityCheck out;
  const double sign = f.shape() == Shape::Convex ? 1.0 : -1.0;
  std::vector<double> grid(static_cast<std::size_t>(std::max(points, 3)));
  for (std::size_t k = 0; k < grid.size(); ++k) {
    grid[k] = std::pow(10.0, -6.0 + 12.0 * static_cast<double>(k) /
                                         static_cast<double>(grid.size() - 1));
  }
  for (std::size_t step = 1; step <= 2; ++step) {
    for (std::size_t k = 0; k + step < grid.size(); ++k) {
      const double a = grid[k];
      const double b = grid[k + step];
      const double fa = f(a);
      const double fb = f(b);
      const double fm = f(0.5 * (a + b));
      const double violation = sign * (fm - 0.5 * (fa + fb));
      const double scale = 1e-9 * (1.0 + std::abs(fa) + std::abs(fb));
      if (violation > scale && violation > out.worst_violation) {
        out.consistent = false;
        out.worst_violation = violation;
        out.worst_t = a;
      }
    }
  }
  return out;
}

DiscreteDistribution::DiscreteDistribution(std::vector<double> weights)
    : weights_(std::move(weights)) {
  CompensatedSum total;
  for (double w : weights_) {
    if (!std::isfinite(w) || w < 0.0) {
      throw Error(ErrorCode::InvalidDistribution,
                  "weight " + std::to_string(w) + " is not a probability");
    }
    total.add(w);
  }
  if (std::abs(total.get() - 1.0) > kDistributionSumTolerance) {
    throw Error(ErrorCode::InvalidDistribution,
                "weights sum to " + format_double(total.get()));
  }
}

ExtendedReal classical_f_divergence(const DiscreteDistribution& p,
                                    const DiscreteDistribution& q,
                                    const DivergenceFunction& f) {
  if (p.size() != q.size()) {
    throw Error(ErrorCode::IndexMismatch,
                "classical_f_divergence: sizes " + std::to_string(p.size()) +
                    " and " + std::to_string(q.size()));
  }
  DivergenceAccumulator acc;
  for (std::size_t k = 0; k < p.size(); ++k) {
    const double pk = p[k];
    const double qk = q[k];
    if (pk > 0.0 && qk > 0.0) {
      acc.add_term(f, pk / qk, qk);
    } else if (pk == 0.0) {
      acc.mass_where_p_zero.add(qk);
    } else {
      acc.mass_where_q_zero.add(pk);
    }
  }
  return acc.result(f);
}

ExtendedReal ns_f_divergence(const NSPair& ns, const DivergenceFunction& f) {
  DivergenceAccumulator acc;
  for (Eigen::Index i = 0; i < ns.dim; ++i) {
    const double ri = ns.r(i);
    for (Eigen::Index j = 0; j < ns.dim; ++j) {
      const double sj = ns.s(j);
      const double ov = ns.overlaps(i, j);
      if (ov == 0.0) continue;
      if (ri > 0.0 && sj > 0.0) {
        acc.add_term(f, ri / sj, sj * ov);
      } else if (ri == 0.0 && sj > 0.0) {
        acc.mass_where_p_zero.add(sj * ov);
      } else if (ri > 0.0 && sj == 0.0) {
        acc.mass_where_q_zero.add(ri * ov);
      }
    }
  }
  return acc.result(f);
}

std::pair<DiscreteDistribution, DiscreteDistribution> flatten(
    const NSPair& ns) {
  std::vector<double> p;
  std::vector<double> q;
  p.reserve(static_cast<std::size_t>(ns.dim * ns.dim));
  q.reserve(p.capacity());
  for (Eigen::Index i = 0; i < ns.dim; ++i) {
    for (Eigen::Index j = 0; j < ns.dim; ++j) {
      p.push_back(ns.P(i, j));
      q.push_back(ns.Q(i, j));
    }
  }
  return {DiscreteDistribution(std::move(p)), DiscreteDistribution(std::move(q))};
}

void require_alpha(double alpha) {
  if (!std::isfinite(alpha) || alpha <= 0.0 || alpha == 1.0) {
    throw Error(ErrorCode::AlphaOutOfRange,
                "alpha must lie in (0,1) U (1,inf), got " + format_double(alpha));
  }
}

std::span<const std::string_view> builtin_names() { return kBuiltinNames; }

bool builtin_takes_alpha(std::string_view name) {
  return name == "renyi_alpha" || name == "hellinger_alpha";
}

DivergenceFunction builtin(std::string_view name, double alpha) {
  const auto inf = ExtendedReal::plus_infinity();
  const auto fin = [](double v) { return ExtendedReal::finite(v); };
  if (name == "kl") {
    return {"kl", [](double t) { return t * std::log(t); }, fin(0.0), inf,
            Shape::Convex};
  }
  if (name == "hellinger_sq") {
    return {"hellinger_sq",
            [](double t) {
              const double d = std::sqrt(t) - 1.0;
              return 0.5 * d * d;
            },
            fin(0.5), fin(0.5), Shape::Convex};
  }
  if (name == "total_variation") {
    return {"total_variation", [](double t) { return std::abs(t - 1.0); },
            fin(1.0), fin(1.0), Shape::Convex};
  }
  if (name == "chi_sq") {
    return {"chi_sq",
            [](double t) {
              const double d = t - 1.0;
              return d * d;
            },
            fin(1.0), inf, Shape::Convex};
  }
  if (name == "renyi_alpha") {
    require_alpha(alpha);
    auto f = [alpha](double t) { return std::pow(t, alpha); };
    if (alpha < 1.0) {
      return {with_alpha(name, alpha), f, fin(0.0), fin(0.0), Shape::Concave};
    }
    return {with_alpha(name, alpha), f, fin(0.0), inf, Shape::Convex};
  }
  if (name == "hellinger_alpha") {
    require_alpha(alpha);
    auto f = [alpha](double t) {
      return std::expm1(alpha * std::log(t)) / (alpha - 1.0);
    };
    if (alpha < 1.0) {
      return {with_alpha(name, alpha), f, fin(1.0 / (1.0 - alpha)), fin(0.0),
              Shape::Convex};
    }
    return {with_alpha(name, alpha), f, fin(-1.0 / (alpha - 1.0)), inf,
            Shape::Convex};
  }
  throw Error(ErrorCode::UnknownName,
              "unknown divergence '" + std::string(name) + "'");
}

ExtendedReal renyi_from_power_divergence(const ExtendedReal& value,
                                         double alpha) {
  require_alpha(alpha);
  if (value < ExtendedReal::zero()) {
    throw Error(ErrorCode::NegativeDivergenceValue,
                "power divergence " + value.to_string() + " < 0");
  }
  const ExtendedReal ln = log(value);
  if (alpha > 1.0) return ln.scaled(1.0 / (alpha - 1.0));
  return -ln.scaled(1.0 / (1.0 - alpha));
}

}  // namespace qfdiv
