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

#include "qfdiv/inequalities.hpp"

#include <algorithm>
#include <cmath>

#include "qfdiv/error.hpp"
#include "qfdiv/qdiv.hpp"

namespace qfdiv {
namespace {

using ER = ExtendedReal;

// V within this of 2 is clamped to 2; items 4 and 7 then compare +inf to +inf.
constexpr double kVariationCeilingGuard = 1e-9;
// |D| below this counts as zero when D' vanishes in item 5a.
constexpr double kRoundoffDivergence = 1e-12;

ER fin(double v) { return ER::finite(v); }

double clamp_variation(double v) { return std::clamp(v, 0.0, 2.0); }
bool at_variation_ceiling(double v) {
  return v > 2.0 - kVariationCeilingGuard;
}

// Divergences of one ordered pair plus its reverse, computed once.
struct Panel {
  const DensityOperator& rho;
  const DensityOperator& sigma;

  ER kl() const { return umegaki(rho, sigma); }
  ER kl_rev() const { return umegaki(sigma, rho); }
  ER chi() const { return chi_sq_q(rho, sigma); }
  ER chi_rev() const { return chi_sq_q(sigma, rho); }
  double variation() const {
    return clamp_variation(total_variation_q(rho, sigma));
  }
  double hellinger_sq() const {
    return std::clamp(hellinger_sq_q(rho, sigma), 0.0, 1.0);
  }
};

std::vector<InequalityReport> item1(const Panel& p, const std::string& id) {
  const double h2 = p.hellinger_sq();
  const double half_v = 0.5 * p.variation();
  return {
      make_report(1, "1a H^2 <= V/2", fin(h2), fin(half_v), id),
      make_report(1, "1b V/2 <= H sqrt(2-H^2)", fin(half_v),
                  fin(std::sqrt(h2) * std::sqrt(std::max(0.0, 2.0 - h2))), id),
  };
}

std::vector<InequalityReport> item2(const Panel& p, const std::string& id) {
  return {make_report(2, "2 D <= ln(1+chi^2)", p.kl(),
                      log(fin(1.0) + p.chi()), id)};
}

std::vector<InequalityReport> item3(const Panel& p, const InequalityParams& params,
                                    const std::string& id) {
  std::vector<InequalityReport> out;
  const ER chi = p.chi();
  for (double a : params.chi_alphas) {
    if (!(a > 2.0) || !std::isfinite(a)) {
      throw Error(ErrorCode::ParameterOutOfRange,
                  "item 3 needs alpha > 2, got " + format_double(a));
    }
    const ER h = hellinger_alpha_q(p.rho, p.sigma, a);
    ER rhs = ER::plus_infinity();
    if (h.is_finite()) {
      const double base = std::max(0.0, 1.0 + (a - 1.0) * h.value());
      rhs = fin(std::pow(base, 1.0 / (a - 1.0)) - 1.0);
    }
    out.push_back(make_report(
        3, "3 chi^2 <= (1+(a-1)H_a)^(1/(a-1))-1 a=" + format_double(a), chi,
        rhs, id));
  }
  return out;
}

std::vector<InequalityReport> item4(const Panel& p, const std::string& id) {
  const double v = p.variation();
  if (at_variation_ceiling(v)) {
    return {make_report(4, "4 chi^2 >= V^2 | V/(2-V)", ER::plus_infinity(),
                        ER::plus_infinity(), id)};
  }
  ER bound;
  if (v <= 1.0) {
    bound = fin(v * v);
  } else {
    bound = fin(v / (2.0 - v));
  }
  return {make_report(4, "4 chi^2 >= V^2 | V/(2-V)", bound, p.chi(), id)};
}

std::vector<InequalityReport> item5(const Panel& p, const std::string& id) {
  const ER d = p.kl();
  const ER dr = p.kl_rev();
  const ER chi = p.chi();
  const ER chir = p.chi_rev();
  const double h2 = p.hellinger_sq();

  ER ratio;
  if (d.is_plus_infinity()) {
    ratio = ER::plus_infinity();
  } else if (dr.is_plus_infinity()) {
    ratio = ER::zero();
  } else if (dr.value() <= 0.0) {
    ratio = std::abs(d.value()) <= kRoundoffDivergence ? ER::zero()
                                                       : ER::plus_infinity();
  } else {
    ratio = fin(d.value() * d.value() / dr.value());
  }
  const ER half = fin(0.5);
  const ER quarter = fin(0.25);
  return {
      make_report(5, "5a D^2/D' <= chi^2/2", ratio, half * chi, id),
      make_report(5, "5b 16H^4 <= D D'", fin(16.0 * h2 * h2), d * dr, id),
      make_report(5, "5c D D' <= chi^2 chi'^2/4", d * dr, quarter * chi * chir,
                  id),
      make_report(5, "5d 8H^2 <= D + D'", fin(8.0 * h2), d + dr, id),
      make_report(5, "5e D + D' <= (chi^2 + chi'^2)/2", d + dr,
                  half * (chi + chir), id),
  };
}

std::vector<InequalityReport> item6(const Panel& p, const std::string& id) {
  return {make_report(6, "6 D <= (V + chi^2)/2", p.kl(),
                      fin(0.5) * (fin(p.variation()) + p.chi()), id)};
}

std::vector<InequalityReport> item7(const Panel& p, const std::string& id) {
  const double v = p.variation();
  const std::string la = "7a V ln((2+V)/(2-V)) <= D + D'";
  const std::string lb = "7b 8V^2/(4-V^2) <= chi^2 + chi'^2";
  if (at_variation_ceiling(v)) {
    const ER inf = ER::plus_infinity();
    return {make_report(7, la, inf, inf, id), make_report(7, lb, inf, inf, id)};
  }
  return {
      make_report(7, la, fin(v * std::log((2.0 + v) / (2.0 - v))),
                  p.kl() + p.kl_rev(), id),
      make_report(7, lb, fin(8.0 * v * v / (4.0 - v * v)),
                  p.chi() + p.chi_rev(), id),
  };
}

std::vector<InequalityReport> item8(const Panel& p, const InequalityParams& params,
                                    const std::string& id) {
  const double a = params.alpha;
  const double b = params.beta;
  if (!(a > 0.0 && a < 1.0)) {
    throw Error(ErrorCode::ParameterOutOfRange,
                "item 8 needs 0 < alpha < 1, got " + format_double(a));
  }
  if (!(b > 1.0) || !std::isfinite(b)) {
    throw Error(ErrorCode::ParameterOutOfRange,
                "item 8 needs beta > 1, got " + format_double(b));
  }
  const ER ha = hellinger_alpha_q(p.rho, p.sigma, a);
  const ER da = petz_renyi(p.rho, p.sigma, a);
  const ER d = p.kl();
  const ER db = petz_renyi(p.rho, p.sigma, b);
  const ER hb = hellinger_alpha_q(p.rho, p.sigma, b);
  const std::string tag = " a=" + format_double(a) + " b=" + format_double(b);
  return {
      make_report(8, "8a H_a <= D_a" + tag, ha, da, id),
      make_report(8, "8b D_a <= D" + tag, da, d, id),
      make_report(8, "8c D <= D_b" + tag, d, db, id),
      make_report(8, "8d D_b <= H_b" + tag, db, hb, id),
  };
}

std::vector<InequalityReport> item9(const Panel& p, const std::string& id) {
  const double v = p.variation();
  const double h2 = p.hellinger_sq();
  const ER chi = p.chi();
  const ER chi_env = chi.is_finite() ? fin(std::sqrt(std::max(0.0, chi.value())))
                                     : ER::plus_infinity();
  return {
      make_report(9, "9 V <= 2 sqrt(H^2 (2-H^2))", fin(v),
                  fin(2.0 * std::sqrt(h2 * (2.0 - h2))), id),
      make_report(9, "9 V <= sqrt(chi^2)", fin(v), chi_env, id),
  };
}

}  // namespace

bool InequalityReport::holds(double slack) const {
  if (margin.is_plus_infinity()) return true;
  if (margin.is_minus_infinity()) return false;
  double scale = 1.0;
  if (lhs.is_finite()) scale = std::max(scale, std::abs(lhs.value()));
  if (rhs.is_finite()) scale = std::max(scale, std::abs(rhs.value()));
  return margin.value() >= -slack * scale;
}

InequalityReport make_report(int item, std::string label, ExtendedReal lhs,
                             ExtendedReal rhs, std::string pair_id) {
  ExtendedReal margin;
  if (!lhs.is_finite() && lhs == rhs) {
    margin = ExtendedReal::zero();
  } else if (lhs.is_minus_infinity() || rhs.is_plus_infinity()) {
    margin = ExtendedReal::plus_infinity();
  } else if (lhs.is_plus_infinity() || rhs.is_minus_infinity()) {
    margin = ExtendedReal::minus_infinity();
  } else {
    margin = rhs - lhs;
  }
  return {item, std::move(label), lhs, rhs, margin, std::move(pair_id)};
}

std::vector<InequalityReport> check_item(int item, const DensityOperator& rho,
                                         const DensityOperator& sigma,
                                         const InequalityParams& params,
                                         const std::string& pair_id) {
  if (rho.dim() != sigma.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "check_item");
  }
  const Panel p{rho, sigma};
  switch (item) {
    case 1: return item1(p, pair_id);
    case 2: return item2(p, pair_id);
    case 3: return item3(p, params, pair_id);
    case 4: return item4(p, pair_id);
    case 5: return item5(p, pair_id);
    case 6: return item6(p, pair_id);
    case 7: return item7(p, pair_id);
    case 8: return item8(p, params, pair_id);
    case 9: return item9(p, pair_id);
    default: break;
  }
  throw Error(ErrorCode::ParameterOutOfRange,
              "no per-pair inequality item " + std::to_string(item));
}

std::vector<InequalityReport> check_all_items(const DensityOperator& rho,
                                              const DensityOperator& sigma,
                                              const InequalityParams& params,
                                              const std::string& pair_id) {
  std::vector<InequalityReport> out;
  for (int item = kFirstItem; item <= kLastPairItem; ++item) {
    auto reports = check_item(item, rho, sigma, params, pair_id);
    out.insert(out.end(), std::make_move_iterator(reports.begin()),
               std::make_move_iterator(reports.end()));
  }
  return out;
}

std::vector<InequalityReport> renyi_monotonicity(const DensityOperator& rho,
                                                 const DensityOperator& sigma,
                                                 std::span<const double> alphas,
                                                 const std::string& pair_id) {
  std::vector<InequalityReport> out;
  std::vector<ExtendedReal> values;
  for (double a : alphas) values.push_back(petz_renyi(rho, sigma, a));
  for (std::size_t k = 0; k + 1 < alphas.size(); ++k) {
    if (!(alphas[k] < alphas[k + 1])) {
      throw Error(ErrorCode::ParameterOutOfRange, "alpha grid must increase");
    }
    out.push_back(make_report(8,
                              "8m D_" + format_double(alphas[k]) + " <= D_" +
                                  format_double(alphas[k + 1]),
                              values[k], values[k + 1], pair_id));
  }
  return out;
}

namespace {

void require_convergence_hypotheses(const DivergenceFunction& f) {
  const auto fail = [&f](const std::string& why) {
    throw Error(ErrorCode::HypothesisViolation, f.name() + ": " + why);
  };
  if (f.shape() != Shape::Convex) fail("f must be convex");
  if (std::abs(f(1.0)) > 1e-12) fail("f(1) must be 0");
  if (!convexity_spot_check(f).consistent) fail("f fails midpoint convexity");
  if (f.f_at_zero() < ExtendedReal::zero()) fail("f(0) must be >= 0");
  for (int k = -24; k <= 24; ++k) {
    const double t = std::pow(10.0, k / 4.0);
    if (f(t) < -1e-12) fail("f must be non-negative");
  }
  // Strictness: a chord strictly above the graph on every decade pair.
  for (int k = -4; k < 4; ++k) {
    for (double lo : {std::pow(10.0, k), 0.5 * std::pow(10.0, k)}) {
      const double hi = 10.0 * lo;
      const double fa = f(lo);
      const double fb = f(hi);
      const double gap = 0.5 * (fa + fb) - f(0.5 * (lo + hi));
      if (!(gap > 1e-12 * (std::abs(fa) + std::abs(fb) + 1.0))) {
        fail("f must be strictly convex");
      }
    }
  }
}

}  // namespace

ConvergenceReport check_convergence_item10(const StatePairSequence& sequence,
                                           const DivergenceFunction& f,
                                           int n_max,
                                           double divergence_threshold,
                                           double variation_threshold) {
  require_convergence_hypotheses(f);
  if (n_max < 1) {
    throw Error(ErrorCode::ParameterOutOfRange, "n_max must be >= 1");
  }
  ConvergenceReport report;
  report.f_name = f.name();
  report.divergence_threshold = divergence_threshold;
  report.variation_threshold = variation_threshold;
  const DivergenceFunction tv = builtin("total_variation");
  for (int n = 1; n <= n_max; ++n) {
    const auto [rho, sigma] = sequence(n);
    ConvergenceSample s;
    s.n = n;
    s.divergence = quantum_f_divergence_ns(rho, sigma, f);
    s.variation = quantum_f_divergence_ns(rho, sigma, tv).value();
    if (s.divergence < ExtendedReal::finite(divergence_threshold)) {
      report.premise_reached = true;
      if (!(s.variation < variation_threshold)) report.implication_holds = false;
    }
    if (s.divergence.is_finite() &&
        s.variation > std::sqrt(8.0 * std::max(0.0, s.divergence.value())) + 1e-12) {
      report.envelope_holds = false;
    }
    if (!report.trace.empty()) {
      const auto& prev = report.trace.back();
      if (s.divergence > prev.divergence + ExtendedReal::finite(1e-12)) {
        report.divergence_nonincreasing = false;
      }
      if (s.variation > prev.variation + 1e-12) {
        report.variation_nonincreasing = false;
      }
    }
    report.trace.push_back(s);
  }
  return report;
}

}  // namespace qfdiv
