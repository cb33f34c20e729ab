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

#include "cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <functional>
#include <optional>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "cli/campaign.hpp"
#include "cli/matrix_file.hpp"
#include "cli/report.hpp"
#include "qfdiv/error.hpp"
#include "qfdiv/generators.hpp"
#include "qfdiv/hyptest.hpp"
#include "qfdiv/ns.hpp"
#include "qfdiv/qdiv.hpp"

namespace qfdiv::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class StateFileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CheckFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool is_parameter_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidConfig:
    case ErrorCode::UnknownName:
    case ErrorCode::AlphaOutOfRange:
    case ErrorCode::ParameterOutOfRange:
    case ErrorCode::InvalidPriors:
    case ErrorCode::DimensionCapExceeded:
    case ErrorCode::HypothesisViolation:
      return true;
    default:
      return false;
  }
}

struct StateOptions {
  std::string rho_path;
  std::string sigma_path;
  Tolerances tol;
  std::string report_path;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--rho", rho_path, "State file for rho")->required();
    cmd->add_option("--sigma", sigma_path, "State file for sigma")->required();
    cmd->add_option("--tol-hermitian", tol.hermitian, "Hermiticity tolerance")
        ->capture_default_str();
    cmd->add_option("--tol-psd", tol.psd, "Negative-eigenvalue tolerance")
        ->capture_default_str();
    cmd->add_option("--tol-trace", tol.trace, "Trace deviation tolerance")
        ->capture_default_str();
    cmd->add_option("--report", report_path, "Write a JSON run report");
  }
};

DensityOperator load_state_arg(const std::string& path, const Tolerances& tol) {
  try {
    return load_state(path, tol);
  } catch (const MatrixFormatError& e) {
    throw StateFileError(path + ": " + e.what());
  } catch (const Error& e) {
    throw StateFileError(path + ": " + e.what());
  }
}

StatePair load_pair(const StateOptions& o) {
  DensityOperator rho = load_state_arg(o.rho_path, o.tol);
  DensityOperator sigma = load_state_arg(o.sigma_path, o.tol);
  if (rho.dim() != sigma.dim()) {
    throw StateFileError("rho has dim " + std::to_string(rho.dim()) +
                         ", sigma has dim " + std::to_string(sigma.dim()));
  }
  return {std::move(rho), std::move(sigma)};
}

void finish_report(const RunReport& report, const std::string& path) {
  if (!path.empty()) report.write(path);
}

std::string file_stem(const PairKey& key) {
  std::string s = key.to_string();
  std::replace(s.begin(), s.end(), ':', '_');
  return s;
}

json key_metadata(const PairKey& key, const char* role) {
  return {{"pair_key", key.to_string()},
          {"role", role},
          {"generator", std::string(Philox4x32::kVersion)}};
}

void dump_pair(const fs::path& dir, const PairKey& key) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
  const StatePair pair = make_pair(key);
  save_matrix(dir / (file_stem(key) + "_rho.json"),
              {pair.rho.matrix(), key_metadata(key, "rho")});
  save_matrix(dir / (file_stem(key) + "_sigma.json"),
              {pair.sigma.matrix(), key_metadata(key, "sigma")});
}

std::vector<FunctionSpec> parse_functions(const std::vector<std::string>& names) {
  std::vector<FunctionSpec> out;
  for (const auto& n : names) {
    FunctionSpec spec;
    try {
      spec = FunctionSpec::parse(n);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    spec.make();
    out.push_back(spec);
  }
  return out;
}

void check_kinds(const std::vector<std::string>& kinds) {
  for (const auto& k : kinds) {
    if (!is_pair_kind(k)) throw UsageError("unknown pair kind '" + k + "'");
  }
}

void check_dims(const std::vector<Eigen::Index>& dims) {
  if (dims.empty()) throw UsageError("--dims must not be empty");
  for (auto d : dims) {
    if (d < 1 || d > 64) throw UsageError("dims must lie in [1, 64]");
  }
}

PairKey parse_key(const std::string& text) {
  try {
    return PairKey::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

// ---------------------------------------------------------------- generate

struct GenerateOptions {
  std::string kind;
  Eigen::Index dim = 0;
  std::optional<Eigen::Index> rank;
  std::uint64_t seed = 0;
  int count = 1;
  std::string out_dir;
};

int cmd_generate(const GenerateOptions& o, std::ostream& out) {
  GeneratorConfig cfg;
  try {
    cfg.kind = parse_state_kind(o.kind);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  if (o.count < 1) throw UsageError("--count must be >= 1");
  cfg.seed = o.seed;
  cfg.dim = o.dim;
  switch (cfg.kind) {
    case StateKind::FixedRank: cfg.rank = o.rank.value_or((o.dim + 1) / 2); break;
    case StateKind::Pure: cfg.rank = 1; break;
    case StateKind::CommutingPair: cfg.rank = o.rank.value_or(o.dim); break;
    default: cfg.rank = o.dim; break;
  }
  try {
    validate_config(cfg);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  const fs::path dir(o.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());

  const std::string kind_name(to_string(cfg.kind));
  const auto meta = [&](std::uint64_t stream, const char* role) {
    return json{{"kind", kind_name},  {"dim", cfg.dim},   {"rank", cfg.rank},
                {"seed", cfg.seed},   {"stream", stream}, {"role", role},
                {"generator", std::string(Philox4x32::kVersion)}};
  };
  const auto write = [&](const std::string& name, const ComplexMatrix& m,
                         json metadata) {
    const fs::path path = dir / name;
    save_matrix(path, {m, std::move(metadata)});
    out << path.string() << '\n';
  };
  for (int i = 0; i < o.count; ++i) {
    cfg.stream = static_cast<std::uint64_t>(i);
    const std::string base = kind_name + "_d" + std::to_string(cfg.dim) + "_s" +
                             std::to_string(cfg.seed) + "_" + std::to_string(i);
    switch (cfg.kind) {
      case StateKind::FullRank:
      case StateKind::FixedRank:
      case StateKind::Pure:
        write(base + ".json", random_state(cfg).matrix(), meta(cfg.stream, "state"));
        break;
      case StateKind::CommutingPair: {
        const CommutingPair p = commuting_pair(cfg);
        write(base + "_rho.json", p.rho.matrix(), meta(cfg.stream, "rho"));
        write(base + "_sigma.json", p.sigma.matrix(), meta(cfg.stream, "sigma"));
        break;
      }
      case StateKind::PerturbationSequence: {
        const PerturbationSequence p =
            perturbation_sequence(cfg, SequenceShape::MixingLinear);
        write(base + "_sigma.json", p.sigma.matrix(), meta(cfg.stream, "sigma"));
        write(base + "_tau.json", p.tau.matrix(), meta(cfg.stream, "tau"));
        write(base + "_generator.json", p.generator, meta(cfg.stream, "generator"));
        break;
      }
      case StateKind::RandomUnitary:
        write(base + ".json", random_unitary(cfg), meta(cfg.stream, "unitary"));
        break;
    }
  }
  return kExitOk;
}

// -------------------------------------------------------------- divergence

struct DivergenceOptions {
  StateOptions states;
  std::string f = "kl";
  double alpha = 0.0;
  std::string route = "ns";
  double tolerance = 1e-8;
};

int cmd_divergence(const DivergenceOptions& o, std::ostream& out) {
  const DivergenceFunction f = builtin(o.f, o.alpha);
  const StatePair pair = load_pair(o.states);
  RunReport report("divergence");
  report.inputs() = {{"rho", o.states.rho_path}, {"sigma", o.states.sigma_path},
                     {"f", f.name()},            {"route", o.route},
                     {"tolerance", format_double(o.tolerance)}};
  json result{{"f", f.name()}};
  bool ok = true;
  std::optional<ExtendedReal> ns;
  std::optional<ExtendedReal> modular;
  if (o.route == "ns" || o.route == "both") {
    ns = quantum_f_divergence_ns(pair.rho, pair.sigma, f);
    out << "ns " << encode(*ns) << '\n';
    result["ns"] = encode(*ns);
  }
  if (o.route == "modular" || o.route == "both") {
    modular = quantum_f_divergence_modular(pair.rho, pair.sigma, f);
    out << "modular " << encode(*modular) << '\n';
    result["modular"] = encode(*modular);
  }
  if (ns && modular) {
    ok = routes_agree(*ns, *modular, o.tolerance);
    ExtendedReal delta = ExtendedReal::plus_infinity();
    if (ns->is_finite() && modular->is_finite()) {
      delta = ExtendedReal::finite(std::abs(ns->value() - modular->value()));
    } else if (*ns == *modular) {
      delta = ExtendedReal::zero();
    }
    out << "delta " << encode(delta) << '\n';
    result["delta"] = encode(delta);
  }
  report.add_case(std::move(result), ok);
  finish_report(report, o.states.report_path);
  if (!ok) throw CheckFailed("routes disagree beyond tolerance");
  return kExitOk;
}

// ---------------------------------------------------------------------- ns

int cmd_ns(const StateOptions& o, std::ostream& out) {
  const StatePair pair = load_pair(o);
  const NSPair ns =
      build_ns(spectral_decompose(pair.rho), spectral_decompose(pair.sigma));
  RunReport report("ns");
  report.inputs() = {{"rho", o.rho_path}, {"sigma", o.sigma_path}};
  out << "i\tj\tr_i\ts_j\toverlap\tP\tQ\n";
  json rows = json::array();
  for (Eigen::Index i = 0; i < ns.dim; ++i) {
    for (Eigen::Index j = 0; j < ns.dim; ++j) {
      out << i << '\t' << j << '\t' << format_double(ns.r(i)) << '\t'
          << format_double(ns.s(j)) << '\t' << format_double(ns.overlaps(i, j))
          << '\t' << format_double(ns.P(i, j)) << '\t'
          << format_double(ns.Q(i, j)) << '\n';
      rows.push_back({i, j, format_double(ns.P(i, j)), format_double(ns.Q(i, j))});
    }
  }
  report.add_case({{"table", std::move(rows)},
                   {"ns_equal", ns_equal(ns)},
                   {"absolutely_continuous", ns_absolutely_continuous(ns)}},
                  true);
  finish_report(report, o.report_path);
  return kExitOk;
}

// ---------------------------------------------------------- verify-theorem

struct CampaignOptions {
  std::vector<Eigen::Index> dims;
  std::vector<std::string> kinds;
  int pairs = 0;
  std::uint64_t seed = 1;
  std::optional<unsigned> jobs;
  std::string report_path;
  std::string replay;
  std::string dump_dir;
};

CampaignOptions campaign_defaults(std::vector<Eigen::Index> dims,
                                  std::vector<std::string> kinds, int pairs) {
  CampaignOptions c;
  c.dims = std::move(dims);
  c.kinds = std::move(kinds);
  c.pairs = pairs;
  return c;
}

struct VerifyOptions {
  CampaignOptions c = campaign_defaults(
      {2, 3, 4}, {"full-rank", "fixed-rank", "pure", "commuting"}, 100);
  std::vector<std::string> functions;
  double tolerance = 1e-8;
};

json theorem_case_json(const TheoremCaseResult& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"function", row.function},
                    {"ns", encode(row.ns)},
                    {"modular", encode(row.modular)},
                    {"agree", row.agree}});
  }
  json j{{"key", r.key.to_string()}, {"rows", std::move(rows)}};
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

int cmd_verify_theorem(const VerifyOptions& o, std::ostream& out) {
  std::vector<FunctionSpec> functions = o.functions.empty()
                                            ? default_theorem_functions()
                                            : parse_functions(o.functions);
  if (!(o.tolerance > 0.0)) throw UsageError("--tolerance must be > 0");
  RunReport report("verify-theorem");
  std::vector<TheoremCaseResult> results;
  if (!o.c.replay.empty()) {
    const PairKey key = parse_key(o.c.replay);
    report.inputs() = {{"replay", key.to_string()}};
    results.push_back(run_theorem_case(key, functions, o.tolerance));
    for (const auto& row : results.back().rows) {
      out << row.function << '\t' << encode(row.ns) << '\t'
          << encode(row.modular) << '\t' << (row.agree ? "ok" : "MISMATCH")
          << '\n';
    }
    if (!o.c.dump_dir.empty()) dump_pair(o.c.dump_dir, key);
  } else {
    check_dims(o.c.dims);
    check_kinds(o.c.kinds);
    if (o.c.pairs < 1) throw UsageError("--pairs must be >= 1");
    TheoremCampaign c;
    c.seed = o.c.seed;
    c.dims = o.c.dims;
    c.kinds = o.c.kinds;
    c.pairs_per_cell = o.c.pairs;
    c.functions = functions;
    c.tolerance = o.tolerance;
    c.workers = resolve_workers(o.c.jobs);
    json names = json::array();
    for (const auto& f : functions) names.push_back(f.label());
    report.inputs() = {{"seed", c.seed},         {"dims", c.dims},
                       {"kinds", c.kinds},       {"pairs_per_cell", c.pairs_per_cell},
                       {"functions", names},     {"tolerance", format_double(c.tolerance)},
                       {"workers", c.workers}};
    results = run_theorem_campaign(c);
  }
  for (const auto& r : results) {
    report.add_case(theorem_case_json(r), r.passed);
    if (r.passed) continue;
    report.add_failure_key(r.key.to_string());
    if (!r.error.empty()) {
      out << "FAIL " << r.key.to_string() << " error: " << r.error << '\n';
    }
    for (const auto& row : r.rows) {
      if (row.agree) continue;
      out << "FAIL " << r.key.to_string() << ' ' << row.function << " ns="
          << encode(row.ns) << " modular=" << encode(row.modular) << '\n';
    }
    if (!o.c.dump_dir.empty() && o.c.replay.empty()) dump_pair(o.c.dump_dir, r.key);
  }
  out << "verify-theorem: " << results.size() << " cases, " << report.failed()
      << " failed\n";
  finish_report(report, o.c.report_path);
  if (report.failed() > 0) {
    throw CheckFailed("replay with --replay KEY; failing keys listed above");
  }
  return kExitOk;
}

// ------------------------------------------------------------ inequalities

struct InequalityOptions {
  CampaignOptions c = campaign_defaults({2, 3, 4, 5, 6},
                                        {"full-rank", "fixed-rank", "pure",
                                         "commuting", "near-identical",
                                         "mixed-rank"},
                                        1000);
  std::vector<int> items{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  double alpha = 0.5;
  double beta = 2.0;
  std::vector<double> chi_alphas{2.5, 3.0};
  double slack = kInequalitySlack;
  bool no_monotonicity = false;
  Eigen::Index sequence_dim = 3;
  int n_max = 64;
};

json inequality_case_json(const InequalityCaseResult& r, double slack) {
  json reports = json::array();
  for (const auto& x : r.reports) {
    reports.push_back({{"item", x.item},
                       {"label", x.label},
                       {"lhs", encode(x.lhs)},
                       {"rhs", encode(x.rhs)},
                       {"margin", encode(x.margin)},
                       {"holds", x.holds(slack)}});
  }
  json j{{"key", r.key.to_string()}, {"reports", std::move(reports)}};
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

int cmd_inequalities(const InequalityOptions& o, std::ostream& out) {
  InequalityCampaign c;
  std::vector<int> pair_items;
  bool with_item10 = false;
  for (int item : o.items) {
    if (item == 10) {
      with_item10 = true;
    } else if (item >= kFirstItem && item <= kLastPairItem) {
      pair_items.push_back(item);
    } else {
      throw UsageError("items lie in 1..10, got " + std::to_string(item));
    }
  }
  c.items = pair_items;
  c.params.alpha = o.alpha;
  c.params.beta = o.beta;
  c.params.chi_alphas = o.chi_alphas;
  c.renyi_monotonicity = !o.no_monotonicity;
  c.slack = o.slack;
  c.seed = o.c.seed;
  c.dims = o.c.dims;
  c.kinds = o.c.kinds;
  c.pairs = o.c.pairs;
  c.workers = resolve_workers(o.c.jobs);
  if (o.n_max < 1) throw UsageError("--n-max must be >= 1");
  if (o.sequence_dim < 1) throw UsageError("--sequence-dim must be >= 1");

  RunReport report("inequalities");
  report.inputs() = {{"seed", c.seed},
                     {"dims", c.dims},
                     {"kinds", c.kinds},
                     {"pairs", c.pairs},
                     {"items", o.items},
                     {"alpha", format_double(o.alpha)},
                     {"beta", format_double(o.beta)},
                     {"chi_alphas", o.chi_alphas},
                     {"slack", format_double(o.slack)},
                     {"workers", c.workers}};

  std::vector<InequalityCaseResult> results;
  if (!o.c.replay.empty()) {
    results.push_back(run_inequality_case(parse_key(o.c.replay), c));
    if (!o.c.dump_dir.empty()) dump_pair(o.c.dump_dir, results.back().key);
  } else if (!c.items.empty() || c.renyi_monotonicity) {
    check_dims(c.dims);
    check_kinds(c.kinds);
    if (c.pairs < 1) throw UsageError("--pairs must be >= 1");
    // Parameter errors surface once, before the campaign.
    for (int item : c.items) {
      if (item == 3 || item == 8) {
        const StatePair probe = make_pair({c.seed, 2, "full-rank", 0});
        check_item(item, probe.rho, probe.sigma, c.params);
      }
    }
    results = run_inequality_campaign(c);
  }

  // label -> worst margin, for the plot-ready summary table.
  std::vector<std::pair<std::string, ExtendedReal>> worst;
  for (const auto& r : results) {
    report.add_case(inequality_case_json(r, c.slack), r.passed);
    if (!r.passed) {
      report.add_failure_key(r.key.to_string());
      if (!r.error.empty()) {
        out << "FAIL " << r.key.to_string() << " error: " << r.error << '\n';
      }
    }
    for (const auto& x : r.reports) {
      if (!x.holds(c.slack)) {
        out << "FAIL " << r.key.to_string() << " [" << x.label
            << "] lhs=" << encode(x.lhs) << " rhs=" << encode(x.rhs)
            << " margin=" << encode(x.margin) << '\n';
      }
      auto it = std::find_if(worst.begin(), worst.end(),
                             [&](const auto& w) { return w.first == x.label; });
      if (it == worst.end()) {
        worst.emplace_back(x.label, x.margin);
      } else if (x.margin < it->second) {
        it->second = x.margin;
      }
    }
  }
  if (!worst.empty()) out << "label\tmin_margin\n";
  for (const auto& [label, m] : worst) out << label << '\t' << encode(m) << '\n';

  if (with_item10 && o.c.replay.empty()) {
    out << "sequence\tf\tn\tD_f\tV\n";
    for (const auto& cc : run_convergence_campaign(c.seed, o.sequence_dim, o.n_max)) {
      json trace = json::array();
      for (const auto& s : cc.report.trace) {
        out << cc.sequence << '\t' << cc.report.f_name << '\t' << s.n << '\t'
            << encode(s.divergence) << '\t' << format_double(s.variation) << '\n';
        trace.push_back({s.n, encode(s.divergence), format_double(s.variation)});
      }
      report.add_case({{"item", 10},
                       {"sequence", cc.sequence},
                       {"f", cc.report.f_name},
                       {"premise_reached", cc.report.premise_reached},
                       {"implication_holds", cc.report.implication_holds},
                       {"envelope_holds", cc.report.envelope_holds},
                       {"divergence_nonincreasing", cc.report.divergence_nonincreasing},
                       {"trace", std::move(trace)}},
                      cc.passed);
      if (!cc.passed) {
        report.add_failure_key("item10:" + cc.sequence + ":" + cc.report.f_name);
        out << "FAIL item 10 " << cc.sequence << ' ' << cc.report.f_name << '\n';
      }
    }
  }
  out << "inequalities: " << report.passed() + report.failed() << " cases, "
      << report.failed() << " failed\n";
  finish_report(report, o.c.report_path);
  if (report.failed() > 0) throw CheckFailed("inequality failures");
  return kExitOk;
}

// ---------------------------------------------------- chernoff / helstrom

struct ChernoffOptions {
  StateOptions states;
  int n_max = 8;
  double pi0 = 0.5;
};

int cmd_chernoff(const ChernoffOptions& o, std::ostream& out) {
  if (o.n_max < 1) throw UsageError("--n-max must be >= 1");
  StatePair pair = load_pair(o.states);
  const ChernoffResult c = chernoff(pair.rho, pair.sigma);
  const HypothesisInstance inst =
      make_instance(std::move(pair.rho), std::move(pair.sigma), o.pi0, 1.0 - o.pi0);
  RunReport report("chernoff");
  report.inputs() = {{"rho", o.states.rho_path}, {"sigma", o.states.sigma_path},
                     {"n_max", o.n_max},         {"pi0", format_double(o.pi0)}};
  out << "chernoff " << encode(c.value) << '\n';
  out << "s_star " << format_double(c.s_star) << '\n';
  out << "n\tp_min\tbound\texponent\n";
  const double prior = std::max(inst.pi0, inst.pi1);
  for (const auto& s : empirical_exponent_trace(inst, o.n_max)) {
    const double bound =
        c.value.is_finite() ? prior * std::exp(-s.n * c.value.value()) : 0.0;
    const bool ok = s.p_min <= bound + 1e-9;
    out << s.n << '\t' << format_double(s.p_min) << '\t' << format_double(bound)
        << '\t' << encode(s.exponent) << '\n';
    report.add_case({{"n", s.n},
                     {"p_min", format_double(s.p_min)},
                     {"bound", format_double(bound)},
                     {"exponent", encode(s.exponent)}},
                    ok);
    if (!ok) report.add_failure_key("n=" + std::to_string(s.n));
  }
  json& in = report.inputs();
  in["chernoff"] = encode(c.value);
  in["s_star"] = format_double(c.s_star);
  finish_report(report, o.states.report_path);
  if (report.failed() > 0) throw CheckFailed("p_min exceeded the Chernoff bound");
  return kExitOk;
}

struct HelstromOptions {
  StateOptions states;
  int n = 1;
  double pi0 = 0.5;
  std::string projector_out;
};

int cmd_helstrom(const HelstromOptions& o, std::ostream& out) {
  StatePair pair = load_pair(o.states);
  const HypothesisInstance inst =
      make_instance(std::move(pair.rho), std::move(pair.sigma), o.pi0, 1.0 - o.pi0);
  const HelstromResult h = helstrom_error(inst, o.n);
  out << "p_min " << format_double(h.p_min) << '\n';
  out << "bayes_error " << format_double(h.bayes_error) << '\n';
  if (!o.projector_out.empty()) {
    save_matrix(o.projector_out, {h.projector, {{"role", "helstrom-projector"},
                                                {"n", o.n}}});
  }
  RunReport report("helstrom");
  report.inputs() = {{"rho", o.states.rho_path}, {"sigma", o.states.sigma_path},
                     {"n", o.n}, {"pi0", format_double(o.pi0)}};
  report.add_case({{"p_min", format_double(h.p_min)},
                   {"bayes_error", format_double(h.bayes_error)}},
                  true);
  finish_report(report, o.states.report_path);
  return kExitOk;
}

void add_campaign_options(CLI::App* cmd, CampaignOptions& c) {
  cmd->add_option("--dims", c.dims, "Dimensions")->delimiter(',')->capture_default_str();
  cmd->add_option("--kinds", c.kinds, "Pair kinds")->delimiter(',')->capture_default_str();
  cmd->add_option("--pairs", c.pairs, "Number of pairs")->capture_default_str();
  cmd->add_option("--seed", c.seed, "Campaign seed")->capture_default_str();
  cmd->add_option("--jobs", c.jobs, "Worker threads (default: all cores)");
  cmd->add_option("--report", c.report_path, "Write a JSON run report");
  cmd->add_option("--replay", c.replay, "Rerun one case by its seed:dim:kind:index key");
  cmd->add_option("--dump-dir", c.dump_dir, "Write failing (or replayed) inputs here");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Quantum f-divergences: computation, cross-checks and campaigns",
               "qfdiv"};
  app.require_subcommand(1);

  GenerateOptions gen;
  auto* generate = app.add_subcommand("generate", "Write random states as matrix files");
  generate->add_option("--kind", gen.kind,
                       "full-rank, fixed-rank, pure, commuting, perturbation, unitary")
      ->required();
  generate->add_option("--dim", gen.dim, "Hilbert-space dimension")->required();
  generate->add_option("--rank", gen.rank, "Rank for fixed-rank / commuting");
  generate->add_option("--seed", gen.seed, "Seed")->capture_default_str();
  generate->add_option("--count", gen.count, "Number of draws")->capture_default_str();
  generate->add_option("--out-dir", gen.out_dir, "Output directory")->required();

  DivergenceOptions div;
  auto* divergence = app.add_subcommand("divergence", "Compute D_f(rho||sigma)");
  div.states.add_to(divergence);
  divergence->add_option("--f", div.f, "Builtin divergence name")->capture_default_str();
  divergence->add_option("--alpha", div.alpha, "Parameter for *_alpha builtins");
  divergence->add_option("--route", div.route, "ns, modular or both")
      ->check(CLI::IsMember({"ns", "modular", "both"}))
      ->capture_default_str();
  divergence->add_option("--tolerance", div.tolerance, "Route agreement tolerance")
      ->capture_default_str();

  StateOptions ns_opts;
  auto* ns = app.add_subcommand("ns", "Dump the Nussbaum-Szkola tables P and Q");
  ns_opts.add_to(ns);

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand(
      "verify-theorem", "Cross-check the NS and modular routes over random pairs");
  add_campaign_options(verify_cmd, verify.c);
  verify_cmd->add_option("--functions", verify.functions,
                         "name or name:alpha list (default: all builtins)")
      ->delimiter(',');
  verify_cmd->add_option("--tolerance", verify.tolerance, "Agreement tolerance")
      ->capture_default_str();

  InequalityOptions ineq;
  auto* ineq_cmd = app.add_subcommand("inequalities", "Fuzz the divergence inequalities");
  add_campaign_options(ineq_cmd, ineq.c);
  ineq_cmd->add_option("--items", ineq.items, "Items 1..10")->delimiter(',')
      ->capture_default_str();
  ineq_cmd->add_option("--alpha", ineq.alpha, "Item 8 alpha in (0,1)")->capture_default_str();
  ineq_cmd->add_option("--beta", ineq.beta, "Item 8 beta > 1")->capture_default_str();
  ineq_cmd->add_option("--chi-alphas", ineq.chi_alphas, "Item 3 alphas > 2")
      ->delimiter(',')->capture_default_str();
  ineq_cmd->add_option("--slack", ineq.slack, "Relative margin slack")->capture_default_str();
  ineq_cmd->add_flag("--no-monotonicity", ineq.no_monotonicity,
                     "Skip the Renyi alpha-monotonicity check");
  ineq_cmd->add_option("--sequence-dim", ineq.sequence_dim, "Item 10 sequence dim")
      ->capture_default_str();
  ineq_cmd->add_option("--n-max", ineq.n_max, "Item 10 sequence length")
      ->capture_default_str();

  ChernoffOptions ch;
  auto* chernoff_cmd = app.add_subcommand("chernoff", "Chernoff bound and error trace");
  ch.states.add_to(chernoff_cmd);
  chernoff_cmd->add_option("--n-max", ch.n_max, "Largest copy number")->capture_default_str();
  chernoff_cmd->add_option("--pi0", ch.pi0, "Prior of rho")->capture_default_str();

  HelstromOptions hs;
  auto* helstrom_cmd = app.add_subcommand("helstrom", "Minimum error on n copies");
  hs.states.add_to(helstrom_cmd);
  helstrom_cmd->add_option("--n", hs.n, "Copies")->capture_default_str();
  helstrom_cmd->add_option("--pi0", hs.pi0, "Prior of rho")->capture_default_str();
  helstrom_cmd->add_option("--projector-out", hs.projector_out,
                           "Write the optimal projector");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (generate->parsed()) return cmd_generate(gen, out);
    if (divergence->parsed()) return cmd_divergence(div, out);
    if (ns->parsed()) return cmd_ns(ns_opts, out);
    if (verify_cmd->parsed()) return cmd_verify_theorem(verify, out);
    if (ineq_cmd->parsed()) return cmd_inequalities(ineq, out);
    if (chernoff_cmd->parsed()) return cmd_chernoff(ch, out);
    if (helstrom_cmd->parsed()) return cmd_helstrom(hs, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    err << "io error: " << e.what() << '\n';
    return kExitIo;
  } catch (const StateFileError& e) {
    err << "invalid state file: " << e.what() << '\n';
    return kExitInvalidState;
  } catch (const CheckFailed& e) {
    err << "check failed: " << e.what() << '\n';
    return kExitCheckFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_parameter_error(e.code()) ? kExitUsage : kExitInvalidState;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace qfdiv::cli
