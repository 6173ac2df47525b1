#include "facloc/types.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

namespace facloc {

Preference::Preference(std::uint32_t mask) : mask_(mask) {
  if (mask == 0) throw std::invalid_argument("preference must not be empty");
  if (mask >= (1u << kMaxFacilities)) {
    throw std::invalid_argument("preference names a facility beyond F" +
                                std::to_string(kMaxFacilities));
  }
}

Preference::Preference(std::initializer_list<int> facilities) : mask_(0) {
  for (int f : facilities) {
    if (f < 1 || f > kMaxFacilities) {
      throw std::invalid_argument("facility index out of range: " + std::to_string(f));
    }
    mask_ |= 1u << (f - 1);
  }
  if (mask_ == 0) throw std::invalid_argument("preference must not be empty");
}

Preference Preference::all_of(int k) {
  if (k < 1 || k > kMaxFacilities) {
    throw std::invalid_argument("facility count out of range: " + std::to_string(k));
  }
  return Preference((1u << k) - 1);
}

bool Preference::accepts(int facility) const {
  return facility >= 1 && facility <= kMaxFacilities &&
         (mask_ & (1u << (facility - 1))) != 0;
}

int Preference::count() const { return std::popcount(mask_); }

int Preference::max_facility() const {
  return std::bit_width(mask_);
}

std::string Preference::display() const {
  std::string out = "{";
  bool first = true;
  for (int f = 1; f <= max_facility(); ++f) {
    if (!accepts(f)) continue;
    if (!first) out += ",";
    out += "F" + std::to_string(f);
    first = false;
  }
  return out + "}";
}

Instance::Instance(std::vector<Agent> agents, int k)
    : agents_(std::move(agents)), k_(k), total_weight_(0) {
  if (agents_.empty()) throw std::invalid_argument("instance has no agents");
  if (k_ < 1 || k_ > Preference::kMaxFacilities) {
    throw std::invalid_argument("facility count out of range: " + std::to_string(k_));
  }
  std::stable_sort(agents_.begin(), agents_.end(),
                   [](const Agent& a, const Agent& b) { return a.location < b.location; });

  // Keep 2 * total_weight representable for exact median threshold tests.
  constexpr Weight kMaxTotal = std::numeric_limits<Weight>::max() / 4;
  for (const Agent& a : agents_) {
    if (a.weight < 1) throw std::invalid_argument("agent weight must be >= 1");
    if (a.preference.max_facility() > k_) {
      throw std::invalid_argument("preference " + a.preference.display() +
                                  " names a facility beyond F" + std::to_string(k_));
    }
    if (total_weight_ > kMaxTotal - a.weight) {
      throw std::invalid_argument("total agent weight too large");
    }
    total_weight_ += a.weight;
  }
}

std::vector<Rational> Instance::distinct_locations() const {
  std::vector<Rational> locs;
  locs.reserve(agents_.size());
  for (const Agent& a : agents_) {
    if (locs.empty() || locs.back() != a.location) locs.push_back(a.location);
  }
  return locs;
}

Rational distance(const Rational& a, const Rational& b) { return abs(a - b); }

Rational agent_cost(const Agent& agent, const Placement& placement) {
  int k = static_cast<int>(placement.locations.size());
  if (agent.preference.max_facility() > k) {
    throw std::invalid_argument("preference " + agent.preference.display() +
                                " names a facility beyond F" + std::to_string(k));
  }
  bool found = false;
  Rational best;
  for (int f = 1; f <= k; ++f) {
    if (!agent.preference.accepts(f)) continue;
    Rational d = distance(agent.location, placement.locations[f - 1]);
    if (!found || d < best) {
      best = d;
      found = true;
    }
  }
  return Rational(agent.weight) * best;
}

Rational social_cost(const Instance& instance, const Placement& placement) {
  if (static_cast<int>(placement.locations.size()) != instance.k()) {
    throw std::invalid_argument("placement size does not match facility count");
  }
  Rational total;
  for (const Agent& a : instance.agents()) total += agent_cost(a, placement);
  return total;
}

}  // namespace facloc
