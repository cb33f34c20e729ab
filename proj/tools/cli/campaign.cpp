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

#include "cli/campaign.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "qfdiv/error.hpp"
#include "qfdiv/generators.hpp"
#include "qfdiv/qdiv.hpp"

namespace qfdiv::cli {
namespace {

constexpr std::array<std::string_view, 6> kPairKinds{
    "full-rank", "fixed-rank", "pure", "commuting", "near-identical",
    "mixed-rank"};

constexpr std::array<double, 6> kRenyiGrid{0.25, 0.5, 0.75, 1.5, 2.0, 3.0};

constexpr double kNearIdenticalWeight = 1e-6;

std::uint64_t kind_id(std::string_view kind) {
  const auto it = std::find(kPairKinds.begin(), kPairKinds.end(), kind);
  if (it == kPairKinds.end()) {
    throw std::invalid_argument("unknown pair kind '" + std::string(kind) + "'");
  }
  return static_cast<std::uint64_t>(it - kPairKinds.begin());
}

// Disjoint generator streams per (dim, kind, index, slot).
std::uint64_t stream_of(const PairKey& key, std::uint64_t slot) {
  return (static_cast<std::uint64_t>(key.dim) << 48) ^
         (kind_id(key.kind) << 44) ^ (key.index << 2) ^ slot;
}

template <class T>
T parse_number(std::string_view text, const char* what) {
  T v{};
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw std::invalid_argument(std::string("bad ") + what + " '" +
                                std::string(text) + "'");
  }
  return v;
}

DensityOperator state(const PairKey& key, StateKind kind, Eigen::Index rank,
                      std::uint64_t slot) {
  GeneratorConfig cfg{key.seed, key.dim, rank, kind, stream_of(key, slot)};
  return random_state(cfg);
}

}  // namespace

std::span<const std::string_view> pair_kinds() { return kPairKinds; }

bool is_pair_kind(std::string_view kind) {
  return std::find(kPairKinds.begin(), kPairKinds.end(), kind) !=
         kPairKinds.end();
}

std::span<const double> renyi_grid() { return kRenyiGrid; }

std::string PairKey::to_string() const {
  return std::to_string(seed) + ":" + std::to_string(dim) + ":" + kind + ":" +
         std::to_string(index);
}

PairKey PairKey::parse(std::string_view text) {
  std::array<std::string_view, 4> parts;
  std::size_t start = 0;
  for (std::size_t k = 0; k < 4; ++k) {
    const std::size_t colon = text.find(':', start);
    if ((k < 3) == (colon == std::string_view::npos)) {
      throw std::invalid_argument("pair key must be seed:dim:kind:index");
    }
    parts[k] = text.substr(start, k < 3 ? colon - start : std::string_view::npos);
    start = colon + 1;
  }
  PairKey key;
  key.seed = parse_number<std::uint64_t>(parts[0], "seed");
  key.dim = parse_number<Eigen::Index>(parts[1], "dim");
  key.kind = std::string(parts[2]);
  key.index = parse_number<std::uint64_t>(parts[3], "index");
  kind_id(key.kind);
  return key;
}

StatePair make_pair(const PairKey& key) {
  const Eigen::Index d = key.dim;
  switch (kind_id(key.kind)) {
    case 0:
      return {state(key, StateKind::FullRank, d, 0),
              state(key, StateKind::FullRank, d, 1)};
    case 1:
      return {state(key, StateKind::FixedRank, (d + 1) / 2, 0),
              state(key, StateKind::FixedRank, (d + 1) / 2, 1)};
    case 2:
      return {state(key, StateKind::Pure, 1, 0),
              state(key, StateKind::Pure, 1, 1)};
    case 3: {
      CommutingPair p = commuting_pair(
          {key.seed, d, d, StateKind::CommutingPair, stream_of(key, 0)});
      return {std::move(p.rho), std::move(p.sigma)};
    }
    case 4: {
      DensityOperator rho = state(key, StateKind::FullRank, d, 0);
      DensityOperator tau = state(key, StateKind::FullRank, d, 1);
      DensityOperator sigma = mix(rho, tau, kNearIdenticalWeight);
      return {std::move(rho), std::move(sigma)};
    }
    default:
      break;
  }
  Philox4x32 rng(key.seed, stream_of(key, 2));
  const auto draw_rank = [&] {
    return std::min<Eigen::Index>(
        d, 1 + static_cast<Eigen::Index>(rng.uniform() * static_cast<double>(d)));
  };
  const Eigen::Index rr = draw_rank();
  const Eigen::Index rs = draw_rank();
  return {state(key, StateKind::FixedRank, rr, 0),
          state(key, StateKind::FixedRank, rs, 1)};
}

unsigned resolve_workers(std::optional<unsigned> requested) {
  unsigned n = requested.value_or(std::max(1u, std::thread::hardware_concurrency()));
  if (const char* cap = std::getenv("QFDIV_MAX_WORKERS")) {
    unsigned c = 0;
    const std::string_view s(cap);
    const auto res = std::from_chars(s.data(), s.data() + s.size(), c);
    if (res.ec == std::errc() && c > 0) n = std::min(n, c);
  }
  return std::max(1u, n);
}

void parallel_for(std::size_t n, unsigned workers,
                  const std::function<void(std::size_t)>& body) {
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(
                                                         std::max<std::size_t>(n, 1))));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) body(i);
    });
  }
}

std::string FunctionSpec::label() const {
  return builtin_takes_alpha(name) ? name + ":" + format_double(alpha) : name;
}

DivergenceFunction FunctionSpec::make() const { return builtin(name, alpha); }

FunctionSpec FunctionSpec::parse(std::string_view text) {
  FunctionSpec spec;
  const std::size_t colon = text.find(':');
  spec.name = std::string(text.substr(0, colon));
  if (colon != std::string_view::npos) {
    spec.alpha = parse_number<double>(text.substr(colon + 1), "alpha");
  }
  return spec;
}

std::vector<FunctionSpec> default_theorem_functions() {
  return {{"kl", 0.0},
          {"chi_sq", 0.0},
          {"total_variation", 0.0},
          {"hellinger_sq", 0.0},
          {"hellinger_alpha", 0.3},
          {"hellinger_alpha", 0.5},
          {"hellinger_alpha", 2.0},
          {"hellinger_alpha", 3.0},
          {"renyi_alpha", 0.5},
          {"renyi_alpha", 2.0}};
}

bool routes_agree(const ExtendedReal& ns, const ExtendedReal& modular,
                  double tol) {
  if (ns.is_finite() != modular.is_finite()) return false;
  if (!ns.is_finite()) return ns == modular;
  const double a = ns.value();
  return std::abs(a - modular.value()) <= tol * std::max(1.0, std::abs(a));
}

std::vector<PairKey> theorem_keys(const TheoremCampaign& c) {
  std::vector<PairKey> keys;
  for (Eigen::Index d : c.dims) {
    for (const auto& kind : c.kinds) {
      for (int k = 0; k < c.pairs_per_cell; ++k) {
        keys.push_back({c.seed, d, kind, static_cast<std::uint64_t>(k)});
      }
    }
  }
  return keys;
}

TheoremCaseResult run_theorem_case(const PairKey& key,
                                   const std::vector<FunctionSpec>& functions,
                                   double tolerance) {
  TheoremCaseResult out;
  out.key = key;
  try {
    const StatePair pair = make_pair(key);
    out.passed = true;
    for (const auto& spec : functions) {
      const DivergenceFunction f = spec.make();
      RouteComparison row;
      row.function = spec.label();
      row.ns = quantum_f_divergence_ns(pair.rho, pair.sigma, f);
      row.modular = quantum_f_divergence_modular(pair.rho, pair.sigma, f);
      row.agree = routes_agree(row.ns, row.modular, tolerance);
      out.passed = out.passed && row.agree;
      out.rows.push_back(std::move(row));
    }
  } catch (const std::exception& e) {
    out.error = e.what();
    out.passed = false;
  }
  return out;
}

std::vector<TheoremCaseResult> run_theorem_campaign(const TheoremCampaign& c) {
  const std::vector<PairKey> keys = theorem_keys(c);
  std::vector<TheoremCaseResult> results(keys.size());
  parallel_for(keys.size(), c.workers, [&](std::size_t i) {
    results[i] = run_theorem_case(keys[i], c.functions, c.tolerance);
  });
  return results;
}

std::vector<PairKey> inequality_keys(const InequalityCampaign& c) {
  if (c.dims.empty() || c.kinds.empty()) {
    throw std::invalid_argument("dims and kinds must be non-empty");
  }
  std::vector<PairKey> keys;
  const std::size_t nd = c.dims.size();
  const std::size_t nk = c.kinds.size();
  for (int k = 0; k < c.pairs; ++k) {
    const auto i = static_cast<std::size_t>(k);
    keys.push_back({c.seed, c.dims[i % nd], c.kinds[(i / nd) % nk],
                    static_cast<std::uint64_t>(k)});
  }
  return keys;
}

InequalityCaseResult run_inequality_case(const PairKey& key,
                                         const InequalityCampaign& c) {
  InequalityCaseResult out;
  out.key = key;
  try {
    const StatePair pair = make_pair(key);
    const std::string id = key.to_string();
    for (int item : c.items) {
      auto reports = check_item(item, pair.rho, pair.sigma, c.params, id);
      out.reports.insert(out.reports.end(), reports.begin(), reports.end());
    }
    if (c.renyi_monotonicity) {
      auto reports = renyi_monotonicity(pair.rho, pair.sigma, renyi_grid(), id);
      out.reports.insert(out.reports.end(), reports.begin(), reports.end());
    }
    out.passed = std::all_of(out.reports.begin(), out.reports.end(),
                             [&](const auto& r) { return r.holds(c.slack); });
  } catch (const std::exception& e) {
    out.error = e.what();
    out.passed = false;
  }
  return out;
}

std::vector<InequalityCaseResult> run_inequality_campaign(
    const InequalityCampaign& c) {
  const std::vector<PairKey> keys = inequality_keys(c);
  std::vector<InequalityCaseResult> results(keys.size());
  parallel_for(keys.size(), c.workers, [&](std::size_t i) {
    results[i] = run_inequality_case(keys[i], c);
  });
  return results;
}

std::vector<ConvergenceCase> run_convergence_campaign(std::uint64_t seed,
                                                      Eigen::Index dim,
                                                      int n_max) {
  const std::array<std::pair<SequenceShape, const char*>, 3> shapes{{
      {SequenceShape::MixingLinear, "mixing-linear"},
      {SequenceShape::MixingQuadratic, "mixing-quadratic"},
      {SequenceShape::Rotation, "rotation"},
  }};
  std::vector<ConvergenceCase> out;
  std::uint64_t stream = 0;
  for (const auto& [shape, name] : shapes) {
    const PerturbationSequence seq = perturbation_sequence(
        {seed, dim, dim, StateKind::PerturbationSequence, stream++}, shape);
    const StatePairSequence pairs = [&seq](int n) {
      return std::pair<DensityOperator, DensityOperator>(seq.term(n), seq.sigma);
    };
    for (const char* f : {"hellinger_sq", "chi_sq"}) {
      ConvergenceCase c;
      c.sequence = name;
      c.report = check_convergence_item10(pairs, builtin(f), n_max);
      c.passed = c.report.implication_holds && c.report.envelope_holds;
      out.push_back(std::move(c));
    }
  }
  return out;
}

}  // namespace qfdiv::cli
