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

// Acceptance run: one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "cli/campaign.hpp"
#include "cli/commands.hpp"
#include "cli/matrix_file.hpp"
#include "qfdiv/generators.hpp"
#include "qfdiv/hyptest.hpp"
#include "qfdiv/ns.hpp"
#include "qfdiv/qdiv.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace qfdiv;
using namespace qfdiv::fixtures;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

struct Tally {
  long checks = 0;
  long failures = 0;
  double worst = 0.0;
  std::string first;

  void check(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      if (failures == 0) first = what;
      ++failures;
    }
  }
  void error(double e, double tol, const std::string& what) {
    worst = std::max(worst, std::isnan(e) ? INFINITY : e);
    check(e <= tol, what + " err=" + format_double(e));
  }
  Outcome outcome() const {
    std::ostringstream os;
    os << checks << " checks, " << failures << " failed, worst " << format_double(worst);
    if (failures) os << ", first: " << first;
    return {failures == 0, os.str()};
  }
};

Eigen::Index dim_2_to_8(std::uint64_t k) { return 2 + static_cast<Eigen::Index>(k % 7); }

std::string tag(std::uint64_t k) { return "pair " + std::to_string(k); }

Outcome criterion1() {
  cli::TheoremCampaign c;
  c.seed = 1;
  c.dims = {2, 3, 4, 6, 8};
  c.kinds = {"full-rank", "fixed-rank", "pure", "commuting"};
  c.pairs_per_cell = 100;
  c.tolerance = 1e-8;
  c.workers = cli::resolve_workers(std::nullopt);
  Tally t;
  for (const auto& r : cli::run_theorem_campaign(c)) {
    t.check(r.passed, r.key.to_string() + (r.error.empty() ? "" : " " + r.error));
    for (const auto& row : r.rows) {
      if (row.ns.is_finite() && row.modular.is_finite()) {
        t.worst = std::max(t.worst, std::abs(row.ns.value() - row.modular.value()) /
                                        std::max(1.0, std::abs(row.ns.value())));
      }
    }
  }
  return t.outcome();
}

Outcome criterion2() {
  Tally t;
  for (std::uint64_t k = 0; k < 200; ++k) {
    const auto rho = random_full(100 + k, dim_2_to_8(k), 0);
    const auto sigma = random_full(100 + k, dim_2_to_8(k), 1);
    const ExtendedReal got = umegaki(rho, sigma);
    const double want = oracle::umegaki(rho.matrix(), sigma.matrix());
    t.error(got.is_finite() ? std::abs(got.value() - want) : INFINITY, 1e-8, tag(k));
  }
  return t.outcome();
}

Outcome criterion3() {
  Tally t;
  for (std::uint64_t k = 0; k < 200; ++k) {
    const auto rho = random_full(300 + k, dim_2_to_8(k), 0);
    const auto sigma = random_full(300 + k, dim_2_to_8(k), 1);
    for (double a : {0.25, 0.5, 0.75, 1.5, 2.0, 3.0}) {
      const ExtendedReal got = petz_renyi(rho, sigma, a);
      const double want = oracle::petz_renyi(rho.matrix(), sigma.matrix(), a);
      t.error(got.is_finite() ? std::abs(got.value() - want) : INFINITY, 1e-8,
              tag(k) + " alpha=" + format_double(a));
    }
  }
  return t.outcome();
}

Outcome criterion4() {
  Tally t;
  for (std::uint64_t k = 0; k < 200; ++k) {
    const auto rho = random_full(500 + k, dim_2_to_8(k), 0);
    const auto sigma = random_full(500 + k, dim_2_to_8(k), 1);
    t.error(std::abs(hellinger_sq_q(rho, sigma) -
                     oracle::hellinger_sq(rho.matrix(), sigma.matrix())),
            1e-8, tag(k));
  }
  return t.outcome();
}

Outcome criterion5() {
  Tally t;
  for (std::uint64_t k = 0; k < 200; ++k) {
    const Eigen::Index d = dim_2_to_8(k);
    const Eigen::Index r = k % 4 == 0 ? 1 + static_cast<Eigen::Index>(k % d) : d;
    const CommutingPair p = commuting_pair({700 + k, d, r, StateKind::CommutingPair, 0});
    const auto pv = to_vector(p.rho_weights);
    const auto qv = to_vector(p.sigma_weights);
    for (const auto& spec : cli::default_theorem_functions()) {
      const ExtendedReal got = quantum_f_divergence_ns(p.rho, p.sigma, spec.make());
      const double want = oracle::classical(spec.name, spec.alpha, pv, qv);
      double err;
      if (std::isinf(want)) {
        err = got == ExtendedReal::plus_infinity() ? 0.0 : INFINITY;
      } else {
        err = got.is_finite() ? std::abs(got.value() - want) / std::max(1.0, std::abs(want))
                              : INFINITY;
      }
      t.error(err, 1e-10, tag(k) + " " + spec.label());
    }
    t.error(std::abs(total_variation_q(p.rho, p.sigma) -
                     oracle::trace_norm(p.rho.matrix() - p.sigma.matrix())),
            1e-10, tag(k) + " trace norm");
  }
  return t.outcome();
}

Outcome criterion6() {
  Tally t;
  const auto ns_of = [](const DensityOperator& a, const DensityOperator& b) {
    return build_ns(spectral_decompose(a), spectral_decompose(b));
  };
  const auto judge = [&](const DensityOperator& a, const DensityOperator& b,
                         const std::string& what) {
    const NSPair ns = ns_of(a, b);
    const bool equal = (a.matrix() - b.matrix()).norm() <= 1e-9;
    t.check(ns_equal(ns) == equal, what + " equality");
    t.check(ns_absolutely_continuous(ns) == oracle::range_contained(a.matrix(), b.matrix()),
            what + " continuity");
  };
  for (std::uint64_t k = 0; k < 200; ++k) {
    const Eigen::Index d = 2 + static_cast<Eigen::Index>(k % 5);
    const Eigen::Index ra = 1 + static_cast<Eigen::Index>(k % d);
    const Eigen::Index rb = 1 + static_cast<Eigen::Index>((k / 5) % d);
    judge(random_rank(900 + k, d, ra, 0), random_rank(900 + k, d, rb, 1), "random " + tag(k));

    const auto same = random_rank(1100 + k, d, ra, 0);
    judge(same, validate_state(same.matrix()), "identical " + tag(k));

    // rho = P_sigma X P_sigma / tr, so range(rho) lies inside range(sigma).
    const Eigen::Index rs = std::max<Eigen::Index>(1, d - 1);
    const auto sigma = random_rank(1300 + k, d, rs, 0);
    const ComplexMatrix proj = support_projector(spectral_decompose(sigma));
    const ComplexMatrix x = random_rank(1300 + k, d, 1 + static_cast<Eigen::Index>(k % d), 1).matrix();
    ComplexMatrix inner = proj * x * proj;
    inner = (inner + inner.adjoint()) * 0.5;
    inner /= inner.trace().real();
    const auto rho = validate_state(inner);
    t.check(oracle::range_contained(rho.matrix(), sigma.matrix()), "contained " + tag(k) + " construction");
    judge(rho, sigma, "contained " + tag(k));
  }
  return t.outcome();
}

Outcome criterion7() {
  Tally t;
  for (std::uint64_t k = 0; k < 200; ++k) {
    const Eigen::Index d = dim_2_to_8(k);
    const Eigen::Index r = 1 + static_cast<Eigen::Index>(k % (d - 1));
    const auto rho = random_rank(1500 + k, d, r, 0);
    const auto sigma = random_rank(1500 + k, d, 1 + static_cast<Eigen::Index>((k / 7) % d), 1);
    const auto spec = relative_modular_spectrum(spectral_decompose(rho), spectral_decompose(sigma));
    t.error(std::abs(spec.kernel_mass - oracle::mass_off_range(sigma.matrix(), rho.matrix())),
            1e-9, tag(k));
  }
  return t.outcome();
}

Outcome criterion8() {
  Tally t;
  for (std::uint64_t k = 0; k < 50; ++k) {
    const Eigen::Index d = 2 + static_cast<Eigen::Index>(k % 3);
    const auto rho = random_rank(1700 + k, d, 1 + static_cast<Eigen::Index>(k % d), 0);
    const auto sigma = random_rank(1700 + k, d, 1 + static_cast<Eigen::Index>((k / 3) % d), 1);
    const auto spec = relative_modular_spectrum(spectral_decompose(rho), spectral_decompose(sigma));
    std::vector<double> ours;
    for (const auto& e : spec.eigenpairs) ours.insert(ours.end(), e.multiplicity, e.eigenvalue);
    const auto ref = oracle::superoperator_spectrum(rho.matrix(), sigma.matrix());
    t.check(ours.size() == ref.size(), tag(k) + " size " + std::to_string(ours.size()) +
                                           " vs " + std::to_string(ref.size()));
    if (ours.size() != ref.size()) continue;
    for (std::size_t i = 0; i < ours.size(); ++i) {
      t.error(std::abs(ours[i] - ref[i]) / std::abs(ref[i]), 1e-8, tag(k));
    }
  }
  return t.outcome();
}

Outcome criterion9() {
  cli::InequalityCampaign c;
  c.seed = 1;
  c.pairs = 1000;
  c.params.alpha = 0.5;
  c.params.beta = 2.0;
  c.params.chi_alphas = {2.5, 3.0};
  c.workers = cli::resolve_workers(std::nullopt);
  Tally t;
  double worst_margin = INFINITY;
  for (const auto& r : cli::run_inequality_campaign(c)) {
    t.check(r.passed, r.key.to_string() + (r.error.empty() ? "" : " " + r.error));
    for (const auto& rep : r.reports) {
      if (rep.margin.is_finite()) worst_margin = std::min(worst_margin, rep.margin.value());
    }
  }
  int premise = 0;
  const auto conv = cli::run_convergence_campaign(1, 3, 64);
  for (const auto& cc : conv) {
    t.check(cc.passed, cc.sequence + " " + cc.report.f_name);
    premise += cc.report.premise_reached ? 1 : 0;
  }
  Outcome o = t.outcome();
  o.detail += ", min margin " + format_double(worst_margin) + ", item 10 premise reached in " +
              std::to_string(premise) + "/" + std::to_string(conv.size());
  return o;
}

Outcome criterion10() {
  Tally t;
  // (a) pure qubits with |<psi|phi>|^2 = c.
  {
    const double c = 0.36;
    ComplexVector phi(2);
    phi << std::sqrt(c), Complex(0.0, std::sqrt(1.0 - c));
    const auto rho = ket0();
    const auto sigma = pure_state(phi);
    const ExtendedReal cb = chernoff_bound(rho, sigma);
    t.error(cb.is_finite() ? std::abs(cb.value() + std::log(c)) : INFINITY, 1e-8, "(a) chernoff");
    const auto h = helstrom_error(make_instance(rho, sigma), 1);
    t.error(std::abs(h.p_min - 0.5 * (1.0 - std::sqrt(1.0 - c))), 1e-9, "(a) helstrom");
  }
  // (b) and (c) on random qubit pairs.
  for (std::uint64_t k = 0; k < 20; ++k) {
    const auto rho = random_full(1900 + k, 2, 0);
    const auto sigma = random_full(1900 + k, 2, 1);
    const auto inst = make_instance(rho, sigma);
    const ExtendedReal cv = chernoff_bound(rho, sigma);
    const auto trace = empirical_exponent_trace(inst, 8);
    for (const auto& s : trace) {
      const double bound = cv.is_finite() ? 0.5 * std::exp(-s.n * cv.value()) : 0.0;
      t.check(s.p_min <= bound, "(b) " + tag(k) + " n=" + std::to_string(s.n) + " p=" +
                                     format_double(s.p_min) + " bound=" + format_double(bound));
    }
    Philox4x32 rng(1900 + k, 99);
    for (int j = 0; j < 50; ++j) {
      const int n = 1 + j % 3;
      const Eigen::Index big = Eigen::Index{1} << n;
      const ComplexMatrix u =
          random_unitary({1900 + k, big, big, StateKind::RandomUnitary,
                          static_cast<std::uint64_t>(100 + j)});
      const auto rank = static_cast<Eigen::Index>(rng.uniform() * static_cast<double>(big + 1));
      const ComplexMatrix cols = u.leftCols(std::min(rank, big));
      const ComplexMatrix proj = cols * cols.adjoint();
      const double err = error_probabilities(proj, inst, n).bayes(inst);
      const double p_min = helstrom_error(inst, n).p_min;
      t.check(err >= p_min - 1e-9, "(c) " + tag(k) + " projection " + std::to_string(j));
    }
  }
  // (d) identical inputs.
  for (std::uint64_t k = 0; k < 20; ++k) {
    const auto rho = random_rank(2100 + k, 2 + static_cast<Eigen::Index>(k % 4),
                                 1 + static_cast<Eigen::Index>(k % 2), 0);
    t.check(chernoff_bound(rho, rho) == ExtendedReal::zero(), "(d) " + tag(k));
  }
  return t.outcome();
}

struct CliRun {
  int code;
  std::string out;
};

CliRun cli_run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run_cli(args, out, err);
  return {code, out.str() + err.str()};
}

std::string slurp(const fs::path& path) {
  std::ifstream is(path, std::ios::binary);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

Outcome criterion11() {
  Tally t;
  const fs::path dir =
      fs::temp_directory_path() / ("qfdiv_acceptance_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);

  for (std::uint64_t k = 0; k < 20; ++k) {
    const Eigen::Index d = dim_2_to_8(k);
    const auto m = random_rank(2300 + k, d, 1 + static_cast<Eigen::Index>(k % d), 0);
    cli::save_matrix((dir / "a.json").string(), {m.matrix(), {{"k", k}}});
    const auto back = cli::load_matrix((dir / "a.json").string());
    cli::save_matrix((dir / "b.json").string(), back);
    t.check(back.matrix == m.matrix() && slurp(dir / "a.json") == slurp(dir / "b.json"),
            "round trip " + tag(k));
  }

  for (std::uint64_t k = 0; k < 50; ++k) {
    const cli::PairKey key{1, 2 + static_cast<Eigen::Index>(k % 5),
                           std::string(cli::pair_kinds()[k % cli::pair_kinds().size()]), k};
    const auto pair = cli::make_pair(key);
    cli::save_matrix((dir / "r.json").string(), {pair.rho.matrix(), {}});
    cli::save_matrix((dir / "s.json").string(), {pair.sigma.matrix(), {}});
    for (const auto& spec : cli::default_theorem_functions()) {
      std::vector<std::string> args{"divergence", "--rho", (dir / "r.json").string(),
                                    "--sigma", (dir / "s.json").string(), "--route", "both",
                                    "--f", spec.name};
      if (builtin_takes_alpha(spec.name)) {
        args.push_back("--alpha");
        args.push_back(format_double(spec.alpha));
      }
      const auto r = cli_run(args);
      t.check(r.code == 0, key.to_string() + " " + spec.label() + " exit " +
                               std::to_string(r.code));
    }
  }

  // Dump a campaign case, corrupt it, then replay it.
  const std::string key = "1:4:mixed-rank:17";
  const fs::path replay = dir / "replay";
  t.check(cli_run({"verify-theorem", "--replay", key, "--dump-dir", replay.string()}).code == 0,
          "replay dump");
  const fs::path rho_file = replay / "1_4_mixed-rank_17_rho.json";
  const fs::path sigma_file = replay / "1_4_mixed-rank_17_sigma.json";
  const std::string original = slurp(rho_file);
  {
    auto file = cli::load_matrix(rho_file.string());
    file.matrix(0, 0) -= 2.0;  // no longer positive semidefinite
    cli::save_matrix(rho_file.string(), file);
  }
  t.check(cli_run({"divergence", "--rho", rho_file.string(), "--sigma", sigma_file.string()})
                  .code == 4,
          "corrupted state exit");
  {
    std::ofstream os(sigma_file, std::ios::binary | std::ios::trunc);
    os << "{\"format_version\": \"qfdiv-matrix/1\", \"dim\": 4, \"entries\": [";
  }
  t.check(cli_run({"divergence", "--rho", rho_file.string(), "--sigma",
                   sigma_file.string()})
                  .code == 4,
          "truncated file exit");
  t.check(cli_run({"verify-theorem", "--replay", key, "--dump-dir", replay.string()}).code == 0,
          "replay again");
  t.check(slurp(rho_file) == original, "replay reproduces bytes");
  t.check(cli_run({"divergence", "--rho", rho_file.string(), "--sigma", sigma_file.string(),
                   "--route", "both"})
                  .code == 0,
          "replayed case runs");

  fs::remove_all(dir);
  return t.outcome();
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"route agreement campaign", criterion1},
      {"umegaki oracle", criterion2},
      {"petz-renyi oracle", criterion3},
      {"hellinger oracle", criterion4},
      {"commuting reduction", criterion5},
      {"ns equality and absolute continuity", criterion6},
      {"kernel mass", criterion7},
      {"superoperator spectrum", criterion8},
      {"inequality suite", criterion9},
      {"hypothesis testing", criterion10},
      {"cli contract", criterion11},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2zu %s (%s; %.2fs)\n", o.passed ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += o.passed ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
