#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "facloc/audit.hpp"
#include "facloc/instances.hpp"
#include "facloc/mechanism.hpp"
#include "facloc/optimal.hpp"
#include "facloc/types.hpp"

namespace {

using facloc::Agent;
using facloc::DeviatorMode;
using facloc::GeneratorConfig;
using facloc::Instance;
using facloc::Mechanism;
using facloc::MechanismOne;
using facloc::MechanismOutput;
using facloc::Placement;
using facloc::Rational;
using facloc::RatioKind;
using facloc::ViolationReport;

std::string fmt(const Rational& value) {
  return value.str() + " (" + value.decimal(6) + ")";
}

std::string read_input(const std::string& path) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    buffer << in.rdbuf();
  }
  return buffer.str();
}

Instance load_instance(const std::string& path) {
  return facloc::parse_instance(read_input(path));
}

void print_placement(const Placement& placement) {
  for (std::size_t j = 0; j < placement.locations.size(); ++j) {
    std::cout << "  F" << (j + 1) << " @ " << fmt(placement.locations[j]) << "\n";
  }
}

std::string location_tuple(const std::vector<Rational>& locations) {
  std::string out = "(";
  for (std::size_t j = 0; j < locations.size(); ++j) {
    if (j > 0) out += ", ";
    out += locations[j].str();
  }
  out += ")";
  return out;
}

struct ChosenMechanism {
  std::unique_ptr<Mechanism> mechanism;
  std::string label;
  bool expected_strategyproof;
};

ChosenMechanism pick_mechanism(const Instance& instance, int k_flag) {
  if (k_flag > 0 && k_flag != instance.k()) {
    throw std::invalid_argument("--k must match the instance facility count");
  }
  if (instance.k() == 2 && k_flag == 0) {
    return {std::make_unique<MechanismOne>(), "mechanism-one", true};
  }
  return {std::make_unique<facloc::GeneralizedMechanism>(instance.k()),
          "generalized (k=" + std::to_string(instance.k()) + ")", false};
}

void print_witness(const Instance& instance, const ViolationReport& report) {
  const Agent& agent = instance.agents()[report.agent_index];
  std::cout << "agent@" << agent.location.str() << " "
            << report.true_preference.display() << "→"
            << report.misreport.display() << ": cost "
            << report.cost_truthful.str() << "→"
            << report.cost_after_misreport.str() << "\n";
}

// Flag bundle shared by `sweep` and `gen`; rational-valued knobs arrive as
// strings so they parse exactly.
struct ConfigFlags {
  int n_min = 1;
  int n_max = 10;
  std::string loc_min = "0";
  std::string loc_max = "10";
  std::int64_t grid_denominator = 4;
  std::int64_t weight_min = 1;
  std::int64_t weight_max = 3;
  std::string p_f1 = "1/3";
  std::string p_f2 = "1/3";
  std::string p_both = "1/3";
  int k = 2;

  void attach(CLI::App* cmd) {
    cmd->add_option("--n-min", n_min, "minimum agent count");
    cmd->add_option("--n-max", n_max, "maximum agent count");
    cmd->add_option("--loc-min", loc_min, "left end of the location range");
    cmd->add_option("--loc-max", loc_max, "right end of the location range");
    cmd->add_option("--grid-denom", grid_denominator,
                    "locations are multiples of 1/denominator");
    cmd->add_option("--weight-min", weight_min, "minimum agent weight");
    cmd->add_option("--weight-max", weight_max, "maximum agent weight");
    cmd->add_option("--p-f1", p_f1, "probability of preference {F1}");
    cmd->add_option("--p-f2", p_f2, "probability of preference {F2}");
    cmd->add_option("--p-both", p_both, "probability of preference {F1,F2}");
    cmd->add_option("--k", k, "facility count of generated instances");
  }

  GeneratorConfig to_config() const {
    GeneratorConfig config;
    config.n_min = n_min;
    config.n_max = n_max;
    config.location_min = Rational::parse(loc_min);
    config.location_max = Rational::parse(loc_max);
    config.grid_denominator = grid_denominator;
    config.weight_min = weight_min;
    config.weight_max = weight_max;
    config.pref_f1 = Rational::parse(p_f1);
    config.pref_f2 = Rational::parse(p_f2);
    config.pref_both = Rational::parse(p_both);
    config.k = k;
    return config;
  }
};

int cmd_solve(const std::string& file) {
  Instance instance = load_instance(file);
  if (instance.k() == 2) {
    facloc::OptimalResult result = facloc::optimal_heterogeneous(instance);
    std::cout << "optimal placement:\n";
    print_placement(result.placement);
    std::cout << "social cost: " << fmt(result.cost) << "\n";
  } else {
    facloc::KMedianResult result =
        facloc::optimal_homogeneous_k(instance, instance.k());
    std::cout << "optimal placement (homogeneous " << instance.k()
              << "-median, preferences ignored):\n";
    print_placement(Placement{result.locations});
    std::cout << "social cost: " << fmt(result.cost) << "\n";
  }
  return 0;
}

int cmd_mech(const std::string& file, int k_flag) {
  Instance instance = load_instance(file);
  ChosenMechanism chosen = pick_mechanism(instance, k_flag);
  MechanismOutput out = chosen.mechanism->apply(instance);

  std::cout << "mechanism: " << chosen.label << "\n";
  std::cout << "candidates: ";
  for (std::size_t j = 0; j < out.candidates.size(); ++j) {
    if (j > 0) std::cout << ", ";
    std::cout << fmt(out.candidates[j]);
  }
  std::cout << "\n";
  if (out.candidate_costs_complete) {
    std::cout << "candidate costs:\n";
    for (const facloc::CandidateCost& entry : out.candidate_costs) {
      std::vector<Rational> combo;
      combo.reserve(entry.assignment.size());
      for (int a : entry.assignment) {
        combo.push_back(out.candidates[static_cast<std::size_t>(a)]);
      }
      std::cout << "  " << location_tuple(combo) << ": " << fmt(entry.cost) << "\n";
    }
  } else {
    std::size_t combos = 1;
    for (int j = 0; j < instance.k(); ++j) combos *= out.candidates.size();
    std::cout << "candidate costs: " << combos
              << " assignments enumerated (table omitted)\n";
  }
  std::cout << "placement:\n";
  print_placement(out.placement);
  std::cout << "social cost: " << fmt(out.cost) << "\n";
  return 0;
}

int cmd_audit(const std::string& file, bool unit_deviator) {
  Instance instance = load_instance(file);
  ChosenMechanism chosen = pick_mechanism(instance, 0);
  DeviatorMode mode =
      unit_deviator ? DeviatorMode::kUnitSplit : DeviatorMode::kWholeWeight;
  std::vector<ViolationReport> reports =
      facloc::check_strategyproof(instance, *chosen.mechanism, mode);

  std::cout << "mechanism: " << chosen.label << "\n";
  std::cout << "deviator mode: " << (unit_deviator ? "unit-split" : "whole-weight")
            << "\n";
  if (reports.empty()) {
    std::cout << "strategyproof under exhaustive misreports\n";
    return 0;
  }
  std::cout << "violations: " << reports.size() << "\n";
  for (const ViolationReport& report : reports) print_witness(instance, report);
  // A manipulable generalized mechanism is a finding, not a failure; a
  // witness against mechanism-one would contradict its strategyproofness.
  return chosen.expected_strategyproof ? 1 : 0;
}

int cmd_diag(const std::string& file) {
  Instance instance = load_instance(file);
  facloc::Diagnostics d = facloc::diagnostics(instance);
  std::cout << "COST: " << fmt(d.cost) << "\n";
  std::cout << "OPT: " << fmt(d.opt) << "\n";
  std::cout << "BEST: " << fmt(d.best) << "\n";
  bool violated = false;
  switch (d.ratio_kind) {
    case RatioKind::kFinite:
      std::cout << "ratio: " << fmt(d.ratio) << "\n";
      violated = d.ratio > Rational(11, 4);
      break;
    case RatioKind::kUndefined:
      std::cout << "ratio: undefined (zero optimal cost)\n";
      break;
    case RatioKind::kInfinite:
      std::cout << "ratio: infinite (zero optimal cost, positive mechanism cost)\n";
      violated = true;
      break;
  }
  std::cout << "bound 11/4: " << (violated ? "violated" : "satisfied") << "\n";
  if (d.per_facility) {
    const facloc::FacilityDiagnostics& f = *d.per_facility;
    std::cout << "per-facility:\n";
    std::cout << "  COST_1: " << fmt(f.cost_1) << "\n";
    std::cout << "  OPT_1: " << fmt(f.opt_1) << "\n";
    std::cout << "  BEST_1: " << fmt(f.best_1) << "\n";
    std::cout << "  delta_1: " << fmt(f.delta_1) << "\n";
    std::cout << "  COST_2: " << fmt(f.cost_2) << "\n";
    std::cout << "  OPT_2: " << fmt(f.opt_2) << "\n";
    std::cout << "  BEST_2: " << fmt(f.best_2) << "\n";
    std::cout << "  delta_2: " << fmt(f.delta_2) << "\n";
  } else {
    std::cout << "per-facility: omitted (instance has agents accepting both "
                 "facilities)\n";
  }
  return violated ? 1 : 0;
}

int cmd_sweep(const ConfigFlags& flags, std::uint64_t count, std::uint64_t seed,
              int threads) {
  facloc::SweepReport report =
      facloc::ratio_sweep(flags.to_config(), count, seed, threads);
  std::cout << facloc::sweep_report_json(report);
  return report.bound_ok ? 0 : 1;
}

int cmd_repro_lower_bound(std::int64_t n, std::int64_t w, const std::string& r_text) {
  Rational r = r_text.empty() ? facloc::default_sqrt2_approx()
                              : Rational::parse(r_text);
  if (w == 0) w = std::max<std::int64_t>(1'000'000, 1000 * n);
  Instance instance = facloc::lower_bound_family(n, w, r);
  facloc::Diagnostics d = facloc::diagnostics(instance);
  std::cout << "lower-bound family: N=" << n << " W=" << w << " r=" << r.str()
            << "\n";
  std::cout << "COST: " << fmt(d.cost) << "\n";
  std::cout << "OPT: " << fmt(d.opt) << "\n";
  std::cout << "ratio: " << fmt(d.ratio) << "\n";
  std::cout << "limit 1+r: " << fmt(Rational(1) + r) << "\n";
  if (d.ratio > Rational(11, 4)) {
    std::cout << "bound 11/4: violated\n";
    return 1;
  }
  return 0;
}

int cmd_repro_k3(const std::string& l1_text, const std::string& l2_text,
                 std::int64_t w) {
  Rational l1 = Rational::parse(l1_text);
  Rational l2 = Rational::parse(l2_text);
  Instance instance = facloc::k3_counterexample(l1, l2, w);
  facloc::KMedianResult medians = facloc::optimal_homogeneous_k(instance, 3);
  facloc::GeneralizedMechanism mechanism(3);
  MechanismOutput truthful = mechanism.apply(instance);

  std::cout << "k3 counterexample: l1=" << l1.str() << " l2=" << l2.str()
            << " W=" << w << "\n";
  std::cout << "optimal 3-median: " << location_tuple(medians.locations) << "\n";
  std::cout << "truthful placement: " << location_tuple(truthful.placement.locations)
            << " cost " << fmt(truthful.cost) << "\n";
  std::vector<ViolationReport> reports = facloc::check_strategyproof(
      instance, mechanism, DeviatorMode::kWholeWeight);
  if (reports.empty()) {
    std::cout << "no violation found\n";
    return 1;
  }
  print_witness(instance, reports.front());
  return 0;
}

int cmd_gen(const ConfigFlags& flags, std::uint64_t seed) {
  std::cout << facloc::serialize_instance(
      facloc::random_instance(flags.to_config(), seed));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two-facility location game: mechanisms, exact solvers, audits"};
  app.require_subcommand(1);

  std::string solve_file;
  CLI::App* solve = app.add_subcommand("solve", "exact optimal placement");
  solve->add_option("file", solve_file, "instance file, or - for stdin")->required();

  std::string mech_file;
  int mech_k = 0;
  CLI::App* mech = app.add_subcommand("mech", "run the mechanism");
  mech->add_option("file", mech_file, "instance file, or - for stdin")->required();
  mech->add_option("--k", mech_k, "force the generalized k-facility mechanism");

  std::string audit_file;
  bool audit_unit = false;
  CLI::App* audit =
      app.add_subcommand("audit", "exhaustive misreport strategyproofness check");
  audit->add_option("file", audit_file, "instance file, or - for stdin")->required();
  audit->add_flag("--unit-deviator", audit_unit,
                  "split one unit off each weighted agent to deviate alone");

  std::string diag_file;
  CLI::App* diag = app.add_subcommand("diag", "COST/OPT/BEST ratio diagnostics");
  diag->add_option("file", diag_file, "instance file, or - for stdin")->required();

  ConfigFlags sweep_flags;
  std::uint64_t sweep_count = 0;
  std::uint64_t sweep_seed = 0;
  int sweep_threads = 1;
  CLI::App* sweep = app.add_subcommand("sweep", "random-instance ratio sweep");
  sweep->add_option("--count", sweep_count, "number of instances")->required();
  sweep->add_option("--seed", sweep_seed, "base seed")->required();
  sweep->add_option("--threads", sweep_threads, "worker threads");
  sweep_flags.attach(sweep);

  CLI::App* repro = app.add_subcommand("repro", "reproduce the analytic constructions");
  repro->require_subcommand(1);

  std::int64_t lb_n = 10000;
  std::int64_t lb_w = 0;
  std::string lb_r;
  CLI::App* lower_bound = repro->add_subcommand(
      "lower-bound", "family whose ratio approaches 1+sqrt(2)");
  lower_bound->add_option("--N", lb_n, "agents at the origin");
  lower_bound->add_option("--W", lb_w, "pinning weight (default max(1e6, 1000N))");
  lower_bound->add_option("--r", lb_r, "rational stand-in for sqrt(2)");

  std::string k3_l1 = "5";
  std::string k3_l2 = "2";
  std::int64_t k3_w = 1'000'000;
  CLI::App* k3 = repro->add_subcommand(
      "k3", "three-facility counterexample to strategyproofness");
  k3->add_option("--l1", k3_l1, "outer distance (default 5)");
  k3->add_option("--l2", k3_l2, "inner distance (default 2)");
  k3->add_option("--W", k3_w, "pinning weight");

  ConfigFlags gen_flags;
  std::uint64_t gen_seed = 0;
  CLI::App* gen = app.add_subcommand("gen", "emit a random instance file");
  gen->add_option("--seed", gen_seed, "generator seed")->required();
  gen_flags.attach(gen);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*solve) return cmd_solve(solve_file);
    if (*mech) return cmd_mech(mech_file, mech_k);
    if (*audit) return cmd_audit(audit_file, audit_unit);
    if (*diag) return cmd_diag(diag_file);
    if (*sweep) return cmd_sweep(sweep_flags, sweep_count, sweep_seed, sweep_threads);
    if (*lower_bound) return cmd_repro_lower_bound(lb_n, lb_w, lb_r);
    if (*k3) return cmd_repro_k3(k3_l1, k3_l2, k3_w);
    if (*gen) return cmd_gen(gen_flags, gen_seed);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
