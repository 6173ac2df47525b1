#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "facloc/types.hpp"

namespace facloc {

// Random-instance generator knobs. Locations are drawn from the grid of
// multiples of 1/grid_denominator inside [location_min, location_max]; the
// preference probabilities apply to the two-facility game (other k draw a
// uniform non-empty acceptable set).
struct GeneratorConfig {
  int n_min = 1;
  int n_max = 10;
  Rational location_min = Rational(0);
  Rational location_max = Rational(10);
  std::int64_t grid_denominator = 4;
  Weight weight_min = 1;
  Weight weight_max = 3;
  Rational pref_f1 = Rational(1, 3);
  Rational pref_f2 = Rational(1, 3);
  Rational pref_both = Rational(1, 3);
  int k = 2;

  // Throws std::invalid_argument on any violated constraint.
  void validate() const;
};

// Rational stand-in for sqrt(2); accurate to 4e-9 and slightly below it,
// which keeps the lower-bound family's mechanism choice stable.
Rational default_sqrt2_approx();

// Three weighted groups: N agents at 0 accepting F1, floor((1+r)N) at 1
// accepting F1, and W at r accepting F2. As N grows the mechanism-to-optimum
// ratio climbs toward 1+r. Requires W >= 1000*N and r > 0.
Instance lower_bound_family(std::int64_t n, std::int64_t w, const Rational& r);

// Six weighted groups on k = 3 facilities witnessing that the generalized
// mechanism is manipulable. Requires 2*l2 < l1 < 3*l2 strictly and W at least
// 1000x the combined weight of the small groups.
Instance k3_counterexample(const Rational& l1, const Rational& l2, Weight w);

// Deterministic per seed; draw order is agent count, then per agent
// location, weight, preference.
Instance random_instance(const GeneratorConfig& config, std::uint64_t seed);

// Per-index stream seed for sweeps: mixes base and index through splitmix64
// so any contiguous partition of indices reproduces the same instances.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

// Line-oriented text format. Header "n k", then n lines "location weight
// prefs" with location a decimal or p/q fraction, weight a positive integer,
// prefs facility tokens such as F1, F1F2, or F2+F3. Unsorted input is
// tolerated (the constructor sorts); parse errors carry the line number.
Instance parse_instance(std::string_view text);
std::string serialize_instance(const Instance& instance);

}  // namespace facloc
