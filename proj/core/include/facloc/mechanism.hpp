#pragma once

#include <vector>

#include "facloc/optimal.hpp"
#include "facloc/types.hpp"

namespace facloc {

// Largest k accepted by the generalized mechanism; the selection stage
// enumerates k^k assignments, so this caps the blow-up at 8^8 ~ 1.7e7.
inline constexpr int kGeneralizedMechanismMaxK = 8;

// Full candidate-cost tables are kept only up to this many assignments
// (covers k <= 6); beyond it the output records the winner alone.
inline constexpr std::size_t kCandidateTableLimit = 50'000;

struct CandidateCost {
  // assignment[j] is the candidate index hosting facility F_{j+1}.
  std::vector<int> assignment;
  Rational cost;
};

struct MechanismOutput {
  std::vector<Rational> candidates;
  Placement placement;
  std::vector<int> chosen_combo;
  Rational cost;
  // Enumeration order: lexicographic over assignment vectors, F1 slowest.
  std::vector<CandidateCost> candidate_costs;
  bool candidate_costs_complete = true;
};

// Two-stage interface: candidates() sees only the location/weight profile
// (preferences are ignored per the homogeneous relaxation), select() ranks
// every assignment of facilities to candidates under reported preferences.
// Auditors exploit the split to reuse stage one across misreports.
class Mechanism {
 public:
  virtual ~Mechanism() = default;

  virtual std::vector<Rational> candidates(const Instance& instance) const = 0;

  MechanismOutput select(const Instance& instance,
                         const std::vector<Rational>& candidates) const;

  MechanismOutput apply(const Instance& instance) const;
};

// Deterministic strategyproof mechanism for the two-facility game: candidates
// are the homogeneous optimal pair (s_left, s_right), and the four placements
// (s_l,s_l), (s_l,s_r), (s_r,s_l), (s_r,s_r) are ranked in exactly that order.
class MechanismOne : public Mechanism {
 public:
  std::vector<Rational> candidates(const Instance& instance) const override;
};

// k-facility extension: candidates are the homogeneous k-median locations and
// all k^k facility-to-candidate assignments are ranked. Coincides with
// MechanismOne at k = 2 but is not strategyproof for k >= 3.
class GeneralizedMechanism : public Mechanism {
 public:
  explicit GeneralizedMechanism(int k);

  std::vector<Rational> candidates(const Instance& instance) const override;

  int k() const { return k_; }

 private:
  int k_;
};

MechanismOutput mechanism_one(const Instance& instance);
MechanismOutput generalized_mechanism(const Instance& instance, int k);

}  // namespace facloc
