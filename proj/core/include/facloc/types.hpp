#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "facloc/rational.hpp"

namespace facloc {

/// Integer multiplicity of an agent. A weight-w agent is semantically
/// identical to w coincident unit agents with the same preference.
using Weight = std::int64_t;

/// The non-empty set of facilities an agent accepts, as 1-based indices
/// F1..Fk. For the two-facility game this is one of {F1}, {F2}, {F1,F2}.
class Preference {
 public:
  static constexpr int kMaxFacilities = 16;

  /// Bit j-1 set means facility Fj is accepted. Throws on an empty mask.
  explicit Preference(std::uint32_t mask);

  /// From 1-based facility indices, e.g. Preference{1, 2} accepts F1 and F2.
  Preference(std::initializer_list<int> facilities);

  /// Accepts every facility in {F1..Fk}.
  static Preference all_of(int k);

  bool accepts(int facility) const;  // 1-based
  int count() const;
  int max_facility() const;
  std::uint32_t mask() const { return mask_; }

  /// Human-readable form, e.g. "{F1,F2}".
  std::string display() const;

  friend bool operator==(const Preference&, const Preference&) = default;
  friend bool operator<(const Preference& a, const Preference& b) {
    return a.mask_ < b.mask_;
  }

 private:
  std::uint32_t mask_;
};

struct Agent {
  Rational location;
  Preference preference;
  Weight weight = 1;

  friend bool operator==(const Agent&, const Agent&) = default;
};

/// Where the facilities stand: locations[j] hosts facility F(j+1).
struct Placement {
  std::vector<Rational> locations;

  friend bool operator==(const Placement&, const Placement&) = default;
};

/// An ordered, validated profile: agents sorted ascending by location
/// (ties keep construction order) plus the facility count k. Immutable
/// after construction; all operations on it are pure.
class Instance {
 public:
  /// Sorts and validates; throws std::invalid_argument when empty, k is out
  /// of range, a weight is < 1, or a preference names a facility beyond Fk.
  Instance(std::vector<Agent> agents, int k);

  const std::vector<Agent>& agents() const { return agents_; }
  int k() const { return k_; }
  Weight total_weight() const { return total_weight_; }

  /// Sorted distinct agent locations.
  std::vector<Rational> distinct_locations() const;

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  std::vector<Agent> agents_;
  int k_;
  Weight total_weight_;
};

/// |a - b|, exactly.
Rational distance(const Rational& a, const Rational& b);

/// weight x min over accepted facilities of the distance to that facility.
/// Throws std::invalid_argument when the preference names a facility the
/// placement does not cover.
Rational agent_cost(const Agent& agent, const Placement& placement);

/// Sum of agent_cost over all agents; placement size must equal instance.k().
Rational social_cost(const Instance& instance, const Placement& placement);

}  // namespace facloc
