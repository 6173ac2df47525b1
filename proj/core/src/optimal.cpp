#include "facloc/optimal.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <stdexcept>

namespace facloc {

namespace {

WeightedPoints points_of(const Instance& instance) {
  std::vector<std::pair<Rational, Weight>> pts;
  pts.reserve(instance.agents().size());
  for (const Agent& a : instance.agents()) pts.emplace_back(a.location, a.weight);
  return WeightedPoints(std::move(pts));
}

WeightedPoints points_with_preference(const Instance& instance, std::uint32_t mask) {
  std::vector<std::pair<Rational, Weight>> pts;
  for (const Agent& a : instance.agents()) {
    if (a.preference.mask() == mask) pts.emplace_back(a.location, a.weight);
  }
  return WeightedPoints(std::move(pts));
}

}  // namespace

WeightedPoints::WeightedPoints(std::vector<std::pair<Rational, Weight>> points) {
  std::sort(points.begin(), points.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [x, w] : points) {
    if (w < 1) throw std::invalid_argument("point weight must be >= 1");
    if (!xs_.empty() && xs_.back() == x) {
      ws_.back() += w;
    } else {
      xs_.push_back(std::move(x));
      ws_.push_back(w);
    }
  }
  wsum_.resize(xs_.size() + 1, 0);
  wxsum_.resize(xs_.size() + 1);
  for (std::size_t i = 0; i < xs_.size(); ++i) {
    wsum_[i + 1] = wsum_[i] + ws_[i];
    wxsum_[i + 1] = wxsum_[i] + Rational(ws_[i]) * xs_[i];
  }
}

std::size_t WeightedPoints::split_above(const Rational& y, std::size_t lo,
                                        std::size_t hi) const {
  return static_cast<std::size_t>(
      std::upper_bound(xs_.begin() + static_cast<std::ptrdiff_t>(lo),
                       xs_.begin() + static_cast<std::ptrdiff_t>(hi), y) -
      xs_.begin());
}

Rational WeightedPoints::range_cost(const Rational& y, std::size_t lo,
                                    std::size_t hi) const {
  if (lo >= hi) return Rational();
  std::size_t mid = split_above(y, lo, hi);
  // Points at <= y pay y - x, points above pay x - y.
  Rational left = y * Rational(wsum_[mid] - wsum_[lo]) - (wxsum_[mid] - wxsum_[lo]);
  Rational right = (wxsum_[hi] - wxsum_[mid]) - y * Rational(wsum_[hi] - wsum_[mid]);
  return left + right;
}

Rational WeightedPoints::cost_at(const Rational& y) const {
  return range_cost(y, 0, xs_.size());
}

Rational WeightedPoints::cost_nearest(const Rational& a, const Rational& b) const {
  if (empty()) return Rational();
  const Rational& lo = a <= b ? a : b;
  const Rational& hi = a <= b ? b : a;
  if (lo == hi) return cost_at(lo);
  Rational mid = (lo + hi) / 2;
  std::size_t split = split_above(mid, 0, xs_.size());
  return range_cost(lo, 0, split) + range_cost(hi, split, xs_.size());
}

std::size_t WeightedPoints::median_index(std::size_t lo, std::size_t hi) const {
  if (lo >= hi) throw std::invalid_argument("weighted median of an empty set");
  Weight total = wsum_[hi] - wsum_[lo];
  // Smallest index whose cumulative weight reaches half the total.
  std::size_t left = lo;
  std::size_t right = hi - 1;
  while (left < right) {
    std::size_t mid = left + (right - left) / 2;
    if (2 * (wsum_[mid + 1] - wsum_[lo]) >= total) {
      right = mid;
    } else {
      left = mid + 1;
    }
  }
  return left;
}

Rational WeightedPoints::median() const {
  return xs_[median_index(0, xs_.size())];
}

Rational WeightedPoints::block_cost(std::size_t lo, std::size_t hi) const {
  return range_cost(xs_[median_index(lo, hi)], lo, hi);
}

Rational weighted_median(const std::vector<std::pair<Rational, Weight>>& points) {
  if (points.empty()) throw std::invalid_argument("weighted median of an empty set");
  return WeightedPoints(points).median();
}

OptimalPair optimal_homogeneous_pair(const Instance& instance) {
  WeightedPoints pts = points_of(instance);
  const std::vector<Rational>& locs = pts.locations();

  std::optional<OptimalPair> best;
  for (const Rational& y1 : locs) {
    for (const Rational& y2 : locs) {
      Rational cost = pts.cost_nearest(y1, y2);
      if (!best || cost < best->cost) best = OptimalPair{y1, y2, cost};
    }
  }
  if (best->s_left > best->s_right) {
    throw std::logic_error("homogeneous pair tie-break produced s_left > s_right");
  }
  return *best;
}

OptimalResult optimal_heterogeneous(const Instance& instance) {
  if (instance.k() != 2) {
    throw std::invalid_argument("heterogeneous optimum is defined for k = 2");
  }
  WeightedPoints only1 = points_with_preference(instance, 0b01);
  WeightedPoints only2 = points_with_preference(instance, 0b10);
  WeightedPoints both = points_with_preference(instance, 0b11);

  // Degenerate sides: nobody accepts one facility. Its contribution is zero
  // and it is placed at the other facility's location.
  if (only1.empty() && both.empty()) {
    Rational m = only2.median();
    return {Placement{{m, m}}, only2.cost_at(m)};
  }
  if (only2.empty() && both.empty()) {
    Rational m = only1.median();
    return {Placement{{m, m}}, only1.cost_at(m)};
  }

  std::vector<Rational> grid = instance.distinct_locations();
  std::vector<Rational> c1(grid.size());
  std::vector<Rational> c2(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    c1[i] = only1.cost_at(grid[i]);
    c2[i] = only2.cost_at(grid[i]);
  }

  std::optional<OptimalResult> best;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t j = 0; j < grid.size(); ++j) {
      Rational cost = c1[i] + c2[j] + both.cost_nearest(grid[i], grid[j]);
      if (!best || cost < best->cost) {
        best = OptimalResult{Placement{{grid[i], grid[j]}}, cost};
      }
    }
  }
  return *best;
}

KMedianResult optimal_homogeneous_k(const Instance& instance, int k) {
  if (k < 1) throw std::invalid_argument("facility count must be >= 1");
  WeightedPoints pts = points_of(instance);
  const std::vector<Rational>& locs = pts.locations();
  std::size_t m = locs.size();

  if (static_cast<std::size_t>(k) >= m) {
    KMedianResult result;
    result.locations.assign(static_cast<std::size_t>(k) - m + 1, locs.front());
    result.locations.insert(result.locations.end(), locs.begin() + 1, locs.end());
    result.cost = Rational();
    return result;
  }

  // suffix[j][i]: minimum cost of serving locations [i, m) with j facilities,
  // each covering one consecutive non-empty block.
  std::vector<std::vector<std::optional<Rational>>> suffix(
      static_cast<std::size_t>(k) + 1,
      std::vector<std::optional<Rational>>(m + 1));
  suffix[0][m] = Rational();
  for (std::size_t j = 1; j <= static_cast<std::size_t>(k); ++j) {
    for (std::size_t i = m; i-- > 0;) {
      std::optional<Rational> best;
      for (std::size_t e = i + 1; e + (j - 1) <= m; ++e) {
        if (!suffix[j - 1][e]) continue;
        Rational cost = pts.block_cost(i, e) + *suffix[j - 1][e];
        if (!best || cost < *best) best = cost;
      }
      suffix[j][i] = best;
    }
  }

  // lexmin[j][i]: median indices of the lexicographically smallest optimal
  // location vector serving [i, m) with j facilities. Greedy earliest block
  // boundaries are not enough: distinct partitions can share the first median
  // yet diverge later, so ties must be compared through the whole suffix.
  std::vector<std::vector<std::optional<std::vector<std::size_t>>>> lexmin(
      static_cast<std::size_t>(k) + 1,
      std::vector<std::optional<std::vector<std::size_t>>>(m + 1));
  lexmin[0][m] = std::vector<std::size_t>{};
  for (std::size_t j = 1; j <= static_cast<std::size_t>(k); ++j) {
    for (std::size_t i = 0; i < m; ++i) {
      if (!suffix[j][i]) continue;
      std::optional<std::vector<std::size_t>> best;
      for (std::size_t e = i + 1; e + (j - 1) <= m; ++e) {
        if (!suffix[j - 1][e] || !lexmin[j - 1][e]) continue;
        if (pts.block_cost(i, e) + *suffix[j - 1][e] != *suffix[j][i]) continue;
        std::vector<std::size_t> cand;
        cand.reserve(j);
        cand.push_back(pts.median_index(i, e));
        cand.insert(cand.end(), lexmin[j - 1][e]->begin(), lexmin[j - 1][e]->end());
        if (!best || cand < *best) best = std::move(cand);
      }
      lexmin[j][i] = std::move(best);
    }
  }

  KMedianResult result;
  result.cost = *suffix[static_cast<std::size_t>(k)][0];
  for (std::size_t idx : *lexmin[static_cast<std::size_t>(k)][0]) {
    result.locations.push_back(locs[idx]);
  }
  return result;
}

}  // namespace facloc
