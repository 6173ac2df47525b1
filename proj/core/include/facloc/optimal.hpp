#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "facloc/types.hpp"

namespace facloc {

/// Sorted weighted point multiset with prefix sums. Coincident points are
/// aggregated; absolute-deviation cost queries run in O(log n).
class WeightedPoints {
 public:
  WeightedPoints() = default;
  explicit WeightedPoints(std::vector<std::pair<Rational, Weight>> points);

  bool empty() const { return xs_.empty(); }
  std::size_t size() const { return xs_.size(); }
  Weight total_weight() const { return wsum_.empty() ? 0 : wsum_.back(); }

  /// Distinct locations, ascending.
  const std::vector<Rational>& locations() const { return xs_; }
  Weight weight_at(std::size_t i) const { return ws_[i]; }

  /// Sum of w * |x - y| over all points; 0 for the empty set.
  Rational cost_at(const Rational& y) const;

  /// Sum of w * min(|x - a|, |x - b|) over all points, in either order.
  Rational cost_nearest(const Rational& a, const Rational& b) const;

  /// Sum of w * |x - y| over points with index in [lo, hi).
  Rational range_cost(const Rational& y, std::size_t lo, std::size_t hi) const;

  /// Leftmost weighted median: the smallest location m such that the weight
  /// at locations <= m reaches half the total. Minimizes cost_at over the
  /// whole line. Throws std::invalid_argument on an empty set.
  Rational median() const;

  /// Index of the leftmost weighted median of points [lo, hi).
  std::size_t median_index(std::size_t lo, std::size_t hi) const;

  /// One-median cost of serving points [lo, hi) from their weighted median.
  Rational block_cost(std::size_t lo, std::size_t hi) const;

 private:
  std::size_t split_above(const Rational& y, std::size_t lo, std::size_t hi) const;

  std::vector<Rational> xs_;
  std::vector<Weight> ws_;
  std::vector<Weight> wsum_;     // wsum_[i] = sum of ws_[0..i)
  std::vector<Rational> wxsum_;  // wxsum_[i] = sum of ws_[j] * xs_[j] for j < i
};

/// Smallest location minimizing the total weighted distance to the points.
/// Throws std::invalid_argument on an empty list.
Rational weighted_median(const std::vector<std::pair<Rational, Weight>>& points);

/// The optimal two-facility pair over agent locations for the profile where
/// every agent accepts both facilities, lexicographically first (minimum
/// first coordinate, then minimum second). cost is that profile's minimum
/// social cost.
struct OptimalPair {
  Rational s_left;
  Rational s_right;
  Rational cost;
};

/// Enumerates ordered pairs of distinct agent locations in lexicographic
/// order, O(log n) cost each, keeping the first strict minimum. Preferences
/// are ignored. O(n^2 log n).
OptimalPair optimal_homogeneous_pair(const Instance& instance);

struct OptimalResult {
  Placement placement;
  Rational cost;
};

/// Exact minimum social cost over all real two-facility placements under the
/// reported preferences (k = 2 only).
///
/// Some optimal placement puts each facility at a weighted median of the
/// agents it ends up serving, and a weighted median of a subset of agents is
/// itself an agent location, so exhaustive search over ordered pairs of
/// agent locations is exact. Ties go to the lexicographically first pair.
/// When nobody accepts one of the facilities, that facility is placed at the
/// other facility's location by convention and contributes zero cost.
OptimalResult optimal_heterogeneous(const Instance& instance);

struct KMedianResult {
  std::vector<Rational> locations;  // ascending
  Rational cost;
};

/// Exact weighted k-median of the agent locations on the line (preferences
/// ignored), via dynamic programming over consecutive blocks of the sorted
/// distinct locations. Among optimal solutions the returned vector is the
/// lexicographically smallest, with each facility at the left median of its
/// block. When k exceeds the number of distinct locations, returns every
/// distinct location padded with copies of the smallest one (cost 0).
KMedianResult optimal_homogeneous_k(const Instance& instance, int k);

}  // namespace facloc
