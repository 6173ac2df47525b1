#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "facloc/instances.hpp"
#include "facloc/mechanism.hpp"
#include "facloc/types.hpp"

namespace facloc {

// Whole-weight moves an agent's entire multiplicity to the misreport;
// unit-split peels one unit off to deviate alone while the rest stay
// truthful. Both must come up empty for a strategyproof mechanism.
enum class DeviatorMode { kWholeWeight, kUnitSplit };

struct ViolationReport {
  std::size_t agent_index;
  Preference true_preference;
  Preference misreport;
  // Both costs are the deviator's TRUE cost (per unit in kUnitSplit mode);
  // a report exists only when the misreport strictly lowers it.
  Rational cost_truthful;
  Rational cost_after_misreport;
  Placement placement_truthful;
  Placement placement_after;
  DeviatorMode mode;
};

// Exhaustive unilateral misreport enumeration: every agent, every alternative
// non-empty acceptable set. Candidates are computed once; they depend only on
// the location/weight profile, which misreports cannot touch.
std::vector<ViolationReport> check_strategyproof(
    const Instance& instance, const Mechanism& mechanism,
    DeviatorMode mode = DeviatorMode::kWholeWeight);

enum class RatioKind {
  kFinite,     // OPT > 0, ratio = COST/OPT
  kUndefined,  // COST = OPT = 0
  kInfinite,   // OPT = 0 with COST > 0; cannot happen for mechanism-one
};

// Per-facility split of the diagnostics; defined only when no agent accepts
// both facilities, since S_1/S_2 are the single-preference groups.
struct FacilityDiagnostics {
  Rational cost_1, cost_2;
  Rational opt_1, opt_2;
  Rational best_1, best_2;
  Rational delta_1, delta_2;
};

struct Diagnostics {
  Rational cost;  // mechanism-one social cost
  Rational opt;   // true heterogeneous optimum
  Rational best;  // homogeneous optimum at (s_left, s_right)
  RatioKind ratio_kind = RatioKind::kFinite;
  Rational ratio;  // meaningful only when ratio_kind == kFinite
  std::optional<FacilityDiagnostics> per_facility;
};

// Two-facility instances only. Invariants: best <= opt <= cost, and the
// per-facility pieces sum to the totals when present.
Diagnostics diagnostics(const Instance& instance);

// Ratio histogram over [1, 11/4] with bucket width 1/100.
inline constexpr std::size_t kHistogramBuckets = 175;

struct SweepReport {
  std::uint64_t count = 0;
  std::uint64_t seed = 0;
  GeneratorConfig config;
  Rational max_ratio;
  std::uint64_t argmax_index = 0;
  std::uint64_t argmax_seed = 0;
  std::string argmax_instance;
  Rational argmax_cost;
  Rational argmax_opt;
  std::array<std::uint64_t, kHistogramBuckets> histogram{};
  bool bound_ok = true;  // max_ratio <= 11/4, compared exactly
};

// Deterministic for a fixed (config, count, seed) regardless of the thread
// count: instance i always uses derive_seed(seed, i) and chunk results merge
// with an associative max (ratio desc, serialized witness asc, index asc).
// Zero-cost instances count as ratio 1.
SweepReport ratio_sweep(const GeneratorConfig& config, std::uint64_t count,
                        std::uint64_t seed, int threads = 1);

// Stable-key JSON rendering of the report; schema documented in the README.
std::string sweep_report_json(const SweepReport& report);

}  // namespace facloc
