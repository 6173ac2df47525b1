#include "facloc/audit.hpp"

#include <json.hpp>

#include <stdexcept>
#include <thread>
#include <utility>

#include "facloc/optimal.hpp"

namespace facloc {

namespace {

Rational unit_cost(const Rational& location, const Preference& pref,
                   const Placement& placement) {
  Agent probe{location, pref, 1};
  return agent_cost(probe, placement);
}

std::vector<std::uint32_t> alternative_masks(const Preference& pref, int k) {
  std::vector<std::uint32_t> masks;
  std::uint32_t all = (std::uint32_t{1} << k) - 1;
  for (std::uint32_t m = 1; m <= all; ++m) {
    if (m != pref.mask()) masks.push_back(m);
  }
  return masks;
}

WeightedPoints group_points(const Instance& instance, std::uint32_t mask) {
  std::vector<std::pair<Rational, Weight>> pts;
  for (const Agent& a : instance.agents()) {
    if (a.preference.mask() == mask) pts.emplace_back(a.location, a.weight);
  }
  return WeightedPoints(std::move(pts));
}

struct ChunkResult {
  bool has_max = false;
  Rational max_ratio;
  std::uint64_t argmax_index = 0;
  std::uint64_t argmax_seed = 0;
  std::string argmax_instance;
  Rational argmax_cost;
  Rational argmax_opt;
  std::array<std::uint64_t, kHistogramBuckets> histogram{};
  bool saw_infinite = false;
};

// True when (ratio, serialized, index) should replace the current champion.
bool improves(const ChunkResult& cur, const Rational& ratio,
              const std::string& serialized, std::uint64_t index) {
  if (!cur.has_max) return true;
  if (ratio != cur.max_ratio) return ratio > cur.max_ratio;
  if (serialized != cur.argmax_instance) return serialized < cur.argmax_instance;
  return index < cur.argmax_index;
}

ChunkResult sweep_chunk(const GeneratorConfig& config, std::uint64_t seed,
                        std::uint64_t begin, std::uint64_t end) {
  ChunkResult result;
  for (std::uint64_t i = begin; i < end; ++i) {
    std::uint64_t instance_seed = derive_seed(seed, i);
    Instance instance = random_instance(config, instance_seed);
    Diagnostics d = diagnostics(instance);
    if (d.ratio_kind == RatioKind::kInfinite) {
      result.saw_infinite = true;
      continue;
    }
    Rational ratio = d.ratio_kind == RatioKind::kFinite ? d.ratio : Rational(1);

    Rational offset = (ratio - Rational(1)) * Rational(100);
    std::int64_t bucket = offset.floor().convert_to<std::int64_t>();
    if (bucket < 0) bucket = 0;
    if (bucket >= static_cast<std::int64_t>(kHistogramBuckets)) {
      bucket = static_cast<std::int64_t>(kHistogramBuckets) - 1;
    }
    ++result.histogram[static_cast<std::size_t>(bucket)];

    if (!result.has_max || ratio >= result.max_ratio) {
      std::string serialized = serialize_instance(instance);
      if (improves(result, ratio, serialized, i)) {
        result.has_max = true;
        result.max_ratio = ratio;
        result.argmax_index = i;
        result.argmax_seed = instance_seed;
        result.argmax_instance = std::move(serialized);
        result.argmax_cost = d.cost;
        result.argmax_opt = d.opt;
      }
    }
  }
  return result;
}

void merge_into(ChunkResult& acc, ChunkResult&& next) {
  for (std::size_t b = 0; b < kHistogramBuckets; ++b) {
    acc.histogram[b] += next.histogram[b];
  }
  acc.saw_infinite = acc.saw_infinite || next.saw_infinite;
  if (next.has_max &&
      improves(acc, next.max_ratio, next.argmax_instance, next.argmax_index)) {
    acc.has_max = true;
    acc.max_ratio = std::move(next.max_ratio);
    acc.argmax_index = next.argmax_index;
    acc.argmax_seed = next.argmax_seed;
    acc.argmax_instance = std::move(next.argmax_instance);
    acc.argmax_cost = std::move(next.argmax_cost);
    acc.argmax_opt = std::move(next.argmax_opt);
  }
}

nlohmann::ordered_json rational_json(const Rational& value) {
  return {{"exact", value.str()}, {"decimal", value.decimal(6)}};
}

}  // namespace

std::vector<ViolationReport> check_strategyproof(const Instance& instance,
                                                 const Mechanism& mechanism,
                                                 DeviatorMode mode) {
  std::vector<Rational> candidates = mechanism.candidates(instance);
  MechanismOutput truthful = mechanism.select(instance, candidates);

  std::vector<ViolationReport> reports;
  const std::vector<Agent>& agents = instance.agents();
  for (std::size_t i = 0; i < agents.size(); ++i) {
    const Agent& agent = agents[i];
    Rational base_cost =
        mode == DeviatorMode::kWholeWeight
            ? agent_cost(agent, truthful.placement)
            : unit_cost(agent.location, agent.preference, truthful.placement);

    for (std::uint32_t mask : alternative_masks(agent.preference, instance.k())) {
      Preference lie(mask);
      std::vector<Agent> modified = agents;
      if (mode == DeviatorMode::kWholeWeight || agent.weight == 1) {
        modified[i].preference = lie;
      } else {
        modified[i].weight = agent.weight - 1;
        modified.insert(modified.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                        Agent{agent.location, lie, 1});
      }
      Instance deviated(std::move(modified), instance.k());
      MechanismOutput outcome = mechanism.select(deviated, candidates);
      Rational lied_cost =
          mode == DeviatorMode::kWholeWeight
              ? agent_cost(agent, outcome.placement)
              : unit_cost(agent.location, agent.preference, outcome.placement);
      if (lied_cost < base_cost) {
        reports.push_back({i, agent.preference, lie, base_cost, lied_cost,
                           truthful.placement, outcome.placement, mode});
      }
    }
  }
  return reports;
}

Diagnostics diagnostics(const Instance& instance) {
  if (instance.k() != 2) {
    throw std::invalid_argument("diagnostics are defined for two-facility instances");
  }
  OptimalPair pair = optimal_homogeneous_pair(instance);
  MechanismOutput mech = MechanismOne().select(instance, {pair.s_left, pair.s_right});
  OptimalResult opt = optimal_heterogeneous(instance);

  Diagnostics d;
  d.cost = mech.cost;
  d.opt = opt.cost;
  d.best = pair.cost;
  if (d.opt.is_zero()) {
    d.ratio_kind = d.cost.is_zero() ? RatioKind::kUndefined : RatioKind::kInfinite;
  } else {
    d.ratio_kind = RatioKind::kFinite;
    d.ratio = d.cost / d.opt;
  }

  bool any_both = false;
  for (const Agent& a : instance.agents()) {
    if (a.preference.mask() == 0b11) {
      any_both = true;
      break;
    }
  }
  if (!any_both) {
    WeightedPoints s1 = group_points(instance, 0b01);
    WeightedPoints s2 = group_points(instance, 0b10);
    FacilityDiagnostics f;
    auto fill = [&](const WeightedPoints& s, Rational& cost_k, Rational& opt_k,
                    Rational& best_k, Rational& delta_k) {
      if (s.empty()) {
        cost_k = opt_k = best_k = delta_k = Rational(0);
        return;
      }
      Rational at_left = s.cost_at(pair.s_left);
      Rational at_right = s.cost_at(pair.s_right);
      cost_k = at_left <= at_right ? at_left : at_right;
      opt_k = s.cost_at(s.median());
      best_k = s.cost_nearest(pair.s_left, pair.s_right);
      delta_k = (cost_k - opt_k) / 2;
    };
    fill(s1, f.cost_1, f.opt_1, f.best_1, f.delta_1);
    fill(s2, f.cost_2, f.opt_2, f.best_2, f.delta_2);
    d.per_facility = std::move(f);
  }
  return d;
}

SweepReport ratio_sweep(const GeneratorConfig& config, std::uint64_t count,
                        std::uint64_t seed, int threads) {
  config.validate();
  if (config.k != 2) {
    throw std::invalid_argument("ratio sweep requires a two-facility config");
  }
  if (count < 1) throw std::invalid_argument("sweep count must be >= 1");

  std::uint64_t workers = threads < 1 ? 1 : static_cast<std::uint64_t>(threads);
  if (workers > count) workers = count;

  ChunkResult merged;
  if (workers <= 1) {
    merged = sweep_chunk(config, seed, 0, count);
  } else {
    std::vector<ChunkResult> chunks(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::uint64_t w = 0; w < workers; ++w) {
      std::uint64_t begin = count * w / workers;
      std::uint64_t end = count * (w + 1) / workers;
      pool.emplace_back([&, w, begin, end] {
        chunks[w] = sweep_chunk(config, seed, begin, end);
      });
    }
    for (std::thread& t : pool) t.join();
    for (ChunkResult& chunk : chunks) merge_into(merged, std::move(chunk));
  }

  if (merged.saw_infinite) {
    throw std::logic_error("mechanism cost positive with zero optimal cost");
  }

  SweepReport report;
  report.count = count;
  report.seed = seed;
  report.config = config;
  report.max_ratio = std::move(merged.max_ratio);
  report.argmax_index = merged.argmax_index;
  report.argmax_seed = merged.argmax_seed;
  report.argmax_instance = std::move(merged.argmax_instance);
  report.argmax_cost = std::move(merged.argmax_cost);
  report.argmax_opt = std::move(merged.argmax_opt);
  report.histogram = merged.histogram;
  report.bound_ok = report.max_ratio <= Rational(11, 4);
  return report;
}

std::string sweep_report_json(const SweepReport& report) {
  nlohmann::ordered_json j;
  j["count"] = report.count;
  j["seed"] = report.seed;
  j["config"] = {
      {"n", {report.config.n_min, report.config.n_max}},
      {"location", {report.config.location_min.str(), report.config.location_max.str()}},
      {"grid_denominator", report.config.grid_denominator},
      {"weight", {report.config.weight_min, report.config.weight_max}},
      {"preference_probabilities",
       {{"F1", report.config.pref_f1.str()},
        {"F2", report.config.pref_f2.str()},
        {"F1F2", report.config.pref_both.str()}}},
      {"k", report.config.k},
  };
  j["max_ratio"] = rational_json(report.max_ratio);
  j["argmax"] = {
      {"index", report.argmax_index},
      {"seed", report.argmax_seed},
      {"cost", rational_json(report.argmax_cost)},
      {"opt", rational_json(report.argmax_opt)},
      {"instance", report.argmax_instance},
  };
  j["bound"] = {{"limit", "11/4"}, {"satisfied", report.bound_ok}};
  j["histogram"] = {
      {"range", {"1", "11/4"}},
      {"bucket_width", "1/100"},
      {"counts", report.histogram},
  };
  return j.dump(2) + "\n";
}

}  // namespace facloc
