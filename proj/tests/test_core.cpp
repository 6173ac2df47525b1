#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <limits>
#include <stdexcept>

#include "facloc/instances.hpp"
#include "facloc/types.hpp"
#include "oracles.hpp"

using facloc::Agent;
using facloc::Instance;
using facloc::Placement;
using facloc::Preference;
using facloc::Rational;
using facloc::Weight;

TEST_CASE("preference masks and display") {
  CHECK(Preference({1, 2}).mask() == 0b11);
  CHECK(Preference({2, 3}).display() == "{F2,F3}");
  CHECK(Preference({1}).display() == "{F1}");
  CHECK(Preference::all_of(2) == Preference({1, 2}));
  CHECK(Preference({2, 3}).count() == 2);
  CHECK(Preference({2, 3}).max_facility() == 3);
  CHECK(Preference({2}).accepts(2));
  CHECK_FALSE(Preference({2}).accepts(1));
  CHECK(Preference({1}) < Preference({2}));
  CHECK(Preference({2}) < Preference({1, 2}));
  CHECK_THROWS_AS(Preference(0u), std::invalid_argument);
  CHECK_THROWS_AS(Preference({17}), std::invalid_argument);
  CHECK_THROWS_AS(Preference(1u << 16), std::invalid_argument);
}

TEST_CASE("instance sorts stably and validates") {
  Instance instance({{Rational(5), Preference({2}), 1},
                     {Rational(0), Preference({1}), 2},
                     {Rational(5), Preference({1}), 3}},
                    2);
  REQUIRE(instance.agents().size() == 3);
  CHECK(instance.agents()[0].location == Rational(0));
  CHECK(instance.agents()[1].preference == Preference({2}));  // input order kept
  CHECK(instance.agents()[2].preference == Preference({1}));
  CHECK(instance.total_weight() == 6);
  CHECK(instance.distinct_locations() ==
        std::vector<Rational>{Rational(0), Rational(5)});

  CHECK_THROWS_AS(Instance({}, 2), std::invalid_argument);
  CHECK_THROWS_AS(Instance({{Rational(0), Preference({1}), 0}}, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(Instance({{Rational(0), Preference({3}), 1}}, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(Instance({{Rational(0), Preference({1}), 1}}, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(Instance({{Rational(0), Preference({1}), 1}}, 17),
                  std::invalid_argument);

  constexpr Weight kHuge = std::numeric_limits<Weight>::max() / 4;
  CHECK_THROWS_AS(Instance({{Rational(0), Preference({1}), kHuge},
                            {Rational(1), Preference({1}), kHuge}},
                           2),
                  std::invalid_argument);
}

TEST_CASE("distance basics") {
  CHECK(facloc::distance(Rational(3), Rational(3)) == Rational(0));
  CHECK(facloc::distance(Rational(0), Rational(7, 2)) == Rational(7, 2));
  CHECK(facloc::distance(Rational(5), Rational(2)) == Rational(3));
  CHECK(facloc::distance(Rational(2), Rational(5)) == Rational(3));
  CHECK(facloc::distance(Rational(-1, 2), Rational(1, 3)) == Rational(5, 6));
}

TEST_CASE("agent cost takes the nearest accepted facility") {
  Placement three{{Rational(0), Rational(0), Rational(12)}};
  CHECK(facloc::agent_cost({Rational(7), Preference({2, 3}), 1}, three) ==
        Rational(5));

  Placement two{{Rational(0), Rational(10)}};
  CHECK(facloc::agent_cost({Rational(1), Preference({1}), 2}, two) == Rational(2));
  CHECK(facloc::agent_cost({Rational(4), Preference({1, 2}), 1},
                           Placement{{Rational(4), Rational(9)}}) == Rational(0));
  CHECK_THROWS_AS(facloc::agent_cost({Rational(1), Preference({3}), 1}, two),
                  std::invalid_argument);
}

TEST_CASE("social cost sums agent costs") {
  Instance coincident({{Rational(0), Preference({1}), 2},
                       {Rational(0), Preference({2}), 1},
                       {Rational(0), Preference({1, 2}), 3}},
                      2);
  CHECK(facloc::social_cost(coincident, Placement{{Rational(0), Rational(0)}}) ==
        Rational(0));

  Rational r = facloc::default_sqrt2_approx();
  Instance family({{Rational(0), Preference({1}), 1},
                   {Rational(1), Preference({1}), 2},
                   {r, Preference({2}), 1000000}},
                  2);
  CHECK(facloc::social_cost(family, Placement{{Rational(0), r}}) == Rational(2));

  Instance subgroup({{Rational(0), Preference({2}), 2},
                     {Rational(3), Preference({2}), 1},
                     {Rational(5), Preference({2}), 1},
                     {Rational(7), Preference({2, 3}), 1}},
                    3);
  CHECK(facloc::social_cost(
            subgroup, Placement{{Rational(0), Rational(0), Rational(12)}}) ==
        Rational(13));

  CHECK_THROWS_AS(facloc::social_cost(family, Placement{{Rational(0)}}),
                  std::invalid_argument);
}

TEST_CASE("weight expansion leaves social cost unchanged") {
  facloc::GeneratorConfig config;
  config.n_max = 6;
  config.weight_max = 4;
  for (std::uint64_t i = 0; i < 200; ++i) {
    Instance instance =
        facloc::random_instance(config, facloc::derive_seed(11, i));
    Instance expanded = oracles::expand_weights(instance);
    std::vector<Rational> grid = instance.distinct_locations();
    for (const Rational& y1 : grid) {
      for (const Rational& y2 : grid) {
        Placement placement{{y1, y2}};
        CHECK(facloc::social_cost(instance, placement) ==
              facloc::social_cost(expanded, placement));
      }
    }
  }
}

TEST_CASE("enlarging a preference never raises agent cost") {
  facloc::GeneratorConfig config;
  config.k = 3;
  config.n_min = 1;
  config.n_max = 1;
  for (std::uint64_t i = 0; i < 300; ++i) {
    Instance one = facloc::random_instance(config, facloc::derive_seed(13, i));
    const Agent& agent = one.agents()[0];
    Placement placement{{Rational(1), Rational(4), Rational(9)}};
    Rational base = facloc::agent_cost(agent, placement);
    for (std::uint32_t extra = 1; extra < 8; ++extra) {
      if ((extra & agent.preference.mask()) != agent.preference.mask()) continue;
      Agent wider{agent.location, Preference(extra), agent.weight};
      CHECK(facloc::agent_cost(wider, placement) <= base);
    }
  }
}
