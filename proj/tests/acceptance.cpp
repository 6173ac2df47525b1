// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Everything is exact rational arithmetic; the only timing-sensitive
// piece is the large strategyproofness audit.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "facloc/audit.hpp"
#include "facloc/instances.hpp"
#include "facloc/mechanism.hpp"
#include "facloc/optimal.hpp"
#include "oracles.hpp"

using facloc::DeviatorMode;
using facloc::Instance;
using facloc::Rational;

namespace {

constexpr std::uint64_t kCorpusSeed = 1;
constexpr std::uint64_t kCorpusSize = 10000;

int g_failures = 0;

void report(int number, bool pass, const std::string& label) {
  std::cout << (pass ? "[PASS] " : "[FAIL] ") << number << ". " << label
            << std::endl;
  if (!pass) ++g_failures;
}

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(FACLOC_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return result;
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
    result.out.append(buffer, got);
  }
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string write_fixture(const std::string& name, const std::string& text) {
  static std::filesystem::path dir = [] {
    auto d = std::filesystem::temp_directory_path() /
             ("facloc_acceptance_" + std::to_string(getpid()));
    std::filesystem::create_directories(d);
    return d;
  }();
  std::filesystem::path path = dir / name;
  std::ofstream out(path, std::ios::binary);
  out << text;
  return path.string();
}

std::vector<Instance> build_corpus() {
  facloc::GeneratorConfig config;  // n <= 10, weights <= 3, quarter grid
  std::vector<Instance> corpus;
  corpus.reserve(kCorpusSize);
  for (std::uint64_t i = 0; i < kCorpusSize; ++i) {
    corpus.push_back(
        facloc::random_instance(config, facloc::derive_seed(kCorpusSeed, i)));
  }
  return corpus;
}

std::vector<Instance> family_instances() {
  Rational r = facloc::default_sqrt2_approx();
  std::vector<Instance> out;
  for (std::int64_t n : {1, 10, 100, 1000, 10000}) {
    std::int64_t w = 1000 * n < 1000000 ? 1000000 : 1000 * n;
    out.push_back(facloc::lower_bound_family(n, w, r));
  }
  return out;
}

void criterion_1(const std::vector<Instance>& corpus) {
  facloc::MechanismOne mech;
  std::size_t violations = 0;
  auto start = std::chrono::steady_clock::now();
  for (const Instance& instance : corpus) {
    violations +=
        facloc::check_strategyproof(instance, mech, DeviatorMode::kWholeWeight)
            .size();
    violations +=
        facloc::check_strategyproof(instance, mech, DeviatorMode::kUnitSplit)
            .size();
  }
  double seconds = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  std::ostringstream label;
  label << "strategyproofness: 10,000 instances, exhaustive misreports, both "
           "deviator modes, "
        << violations << " violations, " << seconds << " s (< 60 s)";
  report(1, violations == 0 && seconds < 60.0, label.str());
}

void criterion_2(const std::vector<facloc::Diagnostics>& diags) {
  const Rational eleven_quarters(11, 4);
  const Rational three(3);
  std::size_t over_275 = 0;
  std::size_t over_3 = 0;
  for (const auto& d : diags) {
    if (d.cost > eleven_quarters * d.opt) ++over_275;
    if (d.cost > three * d.opt) ++over_3;
  }
  std::ostringstream label;
  label << "approximation bounds on corpus and lower-bound family: COST <= "
           "(11/4)*OPT exactly ("
        << over_275 << " exceptions), COST <= 3*OPT (" << over_3
        << " exceptions)";
  report(2, over_275 == 0 && over_3 == 0, label.str());
}

void criterion_3() {
  RunResult cli = run_cli("repro lower-bound --N 10000");
  bool cli_ok = cli.exit_code == 0 &&
                cli.out.find("ratio: 12071/5000 (2.414200)") != std::string::npos;

  Rational r = facloc::default_sqrt2_approx();
  Rational target(2414213, 1000000);
  bool close = false;
  bool monotone = true;
  Rational previous(0);
  std::int64_t previous_n = 1;
  for (std::int64_t n : {1, 10, 100, 1000, 10000}) {
    std::int64_t w = 1000 * n < 1000000 ? 1000000 : 1000 * n;
    facloc::Diagnostics d =
        facloc::diagnostics(facloc::lower_bound_family(n, w, r));
    if (d.ratio + Rational(1, previous_n) < previous) monotone = false;
    previous = d.ratio;
    previous_n = n;
    if (n == 10000) {
      Rational gap = d.ratio - target;
      if (gap.sign() < 0) gap = -gap;
      close = gap < Rational(1, 1000);
    }
  }
  std::ostringstream label;
  label << "lower-bound family: CLI ratio line "
        << (cli_ok ? "reproduced" : "missing")
        << ", N=10000 ratio within 1e-3 of 2.414213 ("
        << (close ? "yes" : "no") << "), non-decreasing in N up to 1/N jitter ("
        << (monotone ? "yes" : "no") << ")";
  report(3, cli_ok && close && monotone, label.str());
}

void criterion_4() {
  Instance example =
      facloc::k3_counterexample(Rational(5), Rational(2), 1000000);
  facloc::GeneralizedMechanism mech(3);
  bool ok = true;
  for (DeviatorMode mode :
       {DeviatorMode::kWholeWeight, DeviatorMode::kUnitSplit}) {
    auto reports = facloc::check_strategyproof(example, mech, mode);
    bool narrowed_seen = false;
    if (reports.empty()) ok = false;
    for (const auto& rep : reports) {
      if (example.agents()[rep.agent_index].location != Rational(7)) ok = false;
      if (rep.cost_truthful != Rational(5)) ok = false;
      if (rep.cost_after_misreport != Rational(2)) ok = false;
      if (rep.misreport == facloc::Preference({2})) narrowed_seen = true;
    }
    if (!narrowed_seen) ok = false;
  }
  facloc::KMedianResult medians = facloc::optimal_homogeneous_k(example, 3);
  bool medians_ok =
      medians.locations ==
      std::vector<Rational>{Rational(0), Rational(5), Rational(12)};
  RunResult cli = run_cli("repro k3");
  bool cli_ok =
      cli.exit_code == 0 &&
      cli.out.find("agent@7 {F2,F3}→{F2}: cost 5→2") != std::string::npos;
  std::ostringstream label;
  label << "three-facility manipulation: all witnesses are the agent at 7 "
           "with true cost 5 -> 2 ("
        << (ok ? "yes" : "no") << "), 3-median is (0, 5, 12) ("
        << (medians_ok ? "yes" : "no") << "), CLI witness line ("
        << (cli_ok ? "yes" : "no") << ")";
  report(4, ok && medians_ok && cli_ok, label.str());
}

void criterion_5(const std::vector<facloc::Diagnostics>& diags) {
  std::size_t bad = 0;
  for (const auto& d : diags) {
    if (!(d.best <= d.opt)) ++bad;
  }
  std::ostringstream label;
  label << "BEST <= OPT exactly on every corpus and family instance (" << bad
        << " exceptions)";
  report(5, bad == 0, label.str());
}

void criterion_6() {
  facloc::GeneratorConfig config;
  config.n_max = 12;
  std::size_t mismatches = 0;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    Instance instance =
        facloc::random_instance(config, facloc::derive_seed(6001, i));
    facloc::OptimalPair pair = facloc::optimal_homogeneous_pair(instance);
    oracles::BrutePair brute_pair = oracles::brute_homogeneous_pair(instance);
    if (pair.s_left != brute_pair.s_left || pair.s_right != brute_pair.s_right ||
        pair.cost != brute_pair.cost) {
      ++mismatches;
    }
    facloc::OptimalResult het = facloc::optimal_heterogeneous(instance);
    oracles::BruteOptimal brute_het = oracles::brute_heterogeneous(instance);
    if (het.placement != brute_het.placement || het.cost != brute_het.cost) {
      ++mismatches;
    }
  }
  std::ostringstream label;
  label << "oracle equivalence: both exact solvers match brute force on 1,000 "
           "instances with n <= 12, tie-breaks included ("
        << mismatches << " mismatches)";
  report(6, mismatches == 0, label.str());
}

void criterion_7() {
  facloc::GeneratorConfig config;
  std::size_t bad = 0;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    Instance instance =
        facloc::random_instance(config, facloc::derive_seed(7001, i));
    std::vector<std::pair<Rational, facloc::Weight>> points;
    for (const auto& a : instance.agents()) {
      points.emplace_back(a.location, a.weight);
    }
    facloc::WeightedPoints pts(points);
    Rational at_median = pts.cost_at(facloc::weighted_median(points));
    for (const Rational& loc : pts.locations()) {
      if (at_median > pts.cost_at(loc)) ++bad;
    }
  }
  std::ostringstream label;
  label << "median optimality: objective at the weighted median <= objective "
           "at every agent location, 1,000 weighted sets ("
        << bad << " exceptions)";
  report(7, bad == 0, label.str());
}

void criterion_8() {
  std::string family = write_fixture(
      "family.txt", facloc::serialize_instance(facloc::lower_bound_family(
                        1, 1000000, facloc::default_sqrt2_approx())));
  std::string two = write_fixture("two.txt", "2 2\n0 1 F1\n10 1 F2\n");
  std::string k3 = write_fixture(
      "k3.txt", facloc::serialize_instance(facloc::k3_counterexample(
                    Rational(5), Rational(2), 1000000)));
  const std::string commands[] = {
      "solve " + two,
      "solve " + k3,
      "mech " + family,
      "mech --k 2 " + two,
      "audit " + family,
      "audit --unit-deviator " + family,
      "audit " + k3,
      "diag " + family,
      "sweep --count 100 --seed 11",
      "sweep --count 100 --seed 11 --threads 4",
      "repro lower-bound --N 1000",
      "repro k3",
      "gen --seed 17",
      "gen --seed 17 --k 3",
  };
  std::size_t unstable = 0;
  for (const std::string& cmd : commands) {
    RunResult first = run_cli(cmd);
    RunResult second = run_cli(cmd);
    if (first.exit_code != second.exit_code || first.out != second.out ||
        first.out.empty()) {
      ++unstable;
    }
  }
  // The sweep must also be independent of the worker count.
  if (run_cli("sweep --count 100 --seed 11").out !=
      run_cli("sweep --count 100 --seed 11 --threads 4").out) {
    ++unstable;
  }
  std::ostringstream label;
  label << "determinism: every subcommand byte-identical across repeated "
           "fixed-seed runs ("
        << unstable << " unstable commands)";
  report(8, unstable == 0, label.str());
}

}  // namespace

int main() {
  std::vector<Instance> corpus = build_corpus();
  std::vector<Instance> family = family_instances();

  std::vector<facloc::Diagnostics> diags;
  diags.reserve(corpus.size() + family.size());
  for (const Instance& instance : corpus) {
    diags.push_back(facloc::diagnostics(instance));
  }
  for (const Instance& instance : family) {
    diags.push_back(facloc::diagnostics(instance));
  }

  criterion_1(corpus);
  criterion_2(diags);
  criterion_3();
  criterion_4();
  criterion_5(diags);
  criterion_6();
  criterion_7();
  criterion_8();

  if (g_failures != 0) {
    std::cout << g_failures << " criteria failed" << std::endl;
    return 1;
  }
  std::cout << "all criteria passed" << std::endl;
  return 0;
}
