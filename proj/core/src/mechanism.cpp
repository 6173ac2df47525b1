#include "facloc/mechanism.hpp"

#include <optional>
#include <stdexcept>

namespace facloc {

namespace {

// Defensive ceiling on candidate^k enumeration; 8^8 stays well inside.
constexpr std::size_t kSelectEnumerationLimit = std::size_t{1} << 27;

}  // namespace

MechanismOutput Mechanism::select(const Instance& instance,
                                  const std::vector<Rational>& candidates) const {
  if (candidates.empty()) throw std::invalid_argument("empty candidate set");
  const std::size_t k = static_cast<std::size_t>(instance.k());
  const std::size_t c = candidates.size();
  std::size_t combos = 1;
  for (std::size_t j = 0; j < k; ++j) {
    if (combos > kSelectEnumerationLimit / c) {
      throw std::invalid_argument("candidate enumeration too large");
    }
    combos *= c;
  }

  const std::vector<Agent>& agents = instance.agents();
  std::vector<Rational> dist(agents.size() * c);
  for (std::size_t i = 0; i < agents.size(); ++i) {
    for (std::size_t a = 0; a < c; ++a) {
      dist[i * c + a] = distance(agents[i].location, candidates[a]);
    }
  }

  MechanismOutput out;
  out.candidates = candidates;
  out.candidate_costs_complete = combos <= kCandidateTableLimit;
  if (out.candidate_costs_complete) out.candidate_costs.reserve(combos);

  std::vector<int> assign(k, 0);
  std::optional<Rational> best_cost;
  std::vector<int> best_assign;
  for (;;) {
    Rational cost;
    for (std::size_t i = 0; i < agents.size(); ++i) {
      const Rational* nearest = nullptr;
      for (std::size_t f = 0; f < k; ++f) {
        if (!agents[i].preference.accepts(static_cast<int>(f) + 1)) continue;
        const Rational& d = dist[i * c + static_cast<std::size_t>(assign[f])];
        if (nearest == nullptr || d < *nearest) nearest = &d;
      }
      cost += Rational(agents[i].weight) * *nearest;
    }
    if (out.candidate_costs_complete) out.candidate_costs.push_back({assign, cost});
    if (!best_cost || cost < *best_cost) {
      best_cost = std::move(cost);
      best_assign = assign;
    }
    // Odometer over assignment vectors, last digit fastest, so combos arrive
    // in lexicographic order and the first strict minimum wins ties.
    std::size_t pos = k;
    while (pos > 0) {
      if (static_cast<std::size_t>(++assign[pos - 1]) < c) break;
      assign[pos - 1] = 0;
      --pos;
    }
    if (pos == 0) break;
  }

  if (!out.candidate_costs_complete) {
    out.candidate_costs.push_back({best_assign, *best_cost});
  }
  out.chosen_combo = best_assign;
  out.cost = *best_cost;
  std::vector<Rational> locations;
  locations.reserve(k);
  for (int a : best_assign) {
    locations.push_back(candidates[static_cast<std::size_t>(a)]);
  }
  out.placement = Placement{std::move(locations)};
  return out;
}

MechanismOutput Mechanism::apply(const Instance& instance) const {
  return select(instance, candidates(instance));
}

std::vector<Rational> MechanismOne::candidates(const Instance& instance) const {
  if (instance.k() != 2) {
    throw std::invalid_argument("mechanism-one requires a two-facility instance");
  }
  OptimalPair pair = optimal_homogeneous_pair(instance);
  return {pair.s_left, pair.s_right};
}

GeneralizedMechanism::GeneralizedMechanism(int k) : k_(k) {
  if (k < 2 || k > kGeneralizedMechanismMaxK) {
    throw std::invalid_argument("generalized mechanism supports 2 <= k <= 8");
  }
}

std::vector<Rational> GeneralizedMechanism::candidates(const Instance& instance) const {
  if (instance.k() != k_) {
    throw std::invalid_argument("instance facility count does not match mechanism");
  }
  return optimal_homogeneous_k(instance, k_).locations;
}

MechanismOutput mechanism_one(const Instance& instance) {
  return MechanismOne().apply(instance);
}

MechanismOutput generalized_mechanism(const Instance& instance, int k) {
  return GeneralizedMechanism(k).apply(instance);
}

}  // namespace facloc
