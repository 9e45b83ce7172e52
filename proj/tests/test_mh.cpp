#include <doctest.h>

#include <cmath>

#include "support.hpp"
#include "ddsynth/dd_game.hpp"
#include "ddsynth/mh_projection.hpp"
#include "ddsynth/synthesis.hpp"

using namespace ddsynth;
using testing::Rng;

namespace {

const Alphabet kAB({"a", "b"});

}  // namespace

TEST_CASE("breakpoint construction preserves the language") {
  Rng rng(81);
  for (int k = 0; k < 150; ++k) {
    Aca a = testing::random_aca(rng, kAB, testing::pick(rng, 1, 4));
    Uca u = aca_to_uca(a);
    CHECK(static_cast<double>(u.num_states()) <= std::pow(3.0, static_cast<double>(a.num_states())));
    for (int j = 0; j < 15; ++j) {
      LassoWord w = testing::random_lasso(rng, kAB, 3, 3);
      CHECK(uca_accepts_lasso(u, w) == aca_accepts_lasso(a, w).accepted);
    }
  }
}

TEST_CASE("universal automata from formulas") {
  Rng rng(82);
  for (int k = 0; k < 100; ++k) {
    Formula f = testing::random_formula(rng, {"a", "b"}, testing::pick(rng, 1, 7));
    Uca u = ltl_to_uca(f, kAB);
    for (int j = 0; j < 10; ++j) {
      LassoWord w = testing::random_lasso(rng, kAB, 3, 3);
      CHECK(uca_accepts_lasso(u, w) == eval_ltl_lasso(f, w));
    }
  }
  CHECK_THROWS_AS(aca_to_uca(testing::random_aca(rng, kAB, 4), MhOptions{2}), Error);
}

TEST_CASE("projection accepts exactly the words all of whose extensions are accepted") {
  Rng rng(83);
  Alphabet full({"a", "h1", "h2"});
  Alphabet visible({"a"});
  int rejected = 0;
  for (int k = 0; k < 60; ++k) {
    Uca u = testing::random_uca(rng, full, testing::pick(rng, 1, 4));
    Uca p = universal_project(u, {"a"});
    CHECK(p.props == visible);
    for (int j = 0; j < 10; ++j) {
      LassoWord w = testing::random_lasso(rng, visible, 1, 2);
      bool all = true;
      for (const auto& e : testing::same_shape_extensions(w, full)) all = all && uca_accepts_lasso(u, e);
      auto witness = testing::rejected_extension(u, w);
      if (uca_accepts_lasso(p, w)) {
        CHECK(all);
        CHECK_FALSE(witness);
      } else {
        ++rejected;
        REQUIRE(witness);
        CHECK_FALSE(uca_accepts_lasso(u, *witness));
        CHECK(same_word(reindex(*witness, visible), w));
      }
    }
  }
  CHECK(rejected > 20);
  Uca u = testing::random_uca(rng, full, 2);
  CHECK_THROWS_AS(universal_project(u, {"a", "h1", "h2"}), Error);
  CHECK_THROWS_AS(universal_project(u, {"z"}), AlphabetMismatch);
}

TEST_CASE("delay-dominance automaton for the message example") {
  Aca a = read_aca(testing::fixture("fig1a.aca")), n = read_aca(testing::fixture("fig1a_neg.aca"));
  DdUcaStages st;
  Uca dd = build_dd_uca(a, n, {"m2"}, {"m1"}, &st);
  CHECK(st.product_states_before_pruning == 2 * 16 + 5);
  CHECK(st.dd_states == dd.num_states());
  CHECK(dd.props.same_set(Alphabet({"m1", "m2"})));
  MooreMachine s1 = read_moore(testing::fixture("s1.moore")), t1 = read_moore(testing::fixture("t1.moore"));
  CHECK(uca_model_check(dd, s1).accepted);
  ModelCheckResult r = uca_model_check(dd, t1);
  REQUIRE_FALSE(r.accepted);
  REQUIRE(r.counterexample);
  CHECK_FALSE(dd_pair_on_lasso(a, t1, s1, *r.counterexample));
  CHECK_THROWS_AS(build_dd_uca(a, n, {"m2"}, {"zz"}), AlphabetMismatch);
}

TEST_CASE("automaton verdict matches games against every small alternative") {
  Rng rng(84);
  Alphabet in({"i"}), out({"o"});
  auto alternatives = enumerate_machines(in, out, 2);
  auto wider = enumerate_machines(in, out, 3);
  std::vector<std::pair<Aca, Aca>> specs;
  Aca f1b = read_aca(testing::fixture("fig1b.aca"));
  specs.push_back({f1b, complement_weak(f1b)});
  for (int k = 0; k < 6; ++k) {
    Aca a = testing::random_weak_aca(rng, Alphabet({"i", "o"}), 2);
    specs.push_back({a, complement_weak(a)});
  }
  int refuted = 0;
  for (const auto& [a, c] : specs) {
    Uca dd = build_dd_uca(a, c, {"i"}, {"o"});
    for (int m = 0; m < 6; ++m) {
      MooreMachine s = testing::random_machine(rng, in, out, 2);
      ModelCheckResult r = uca_model_check(dd, s);
      if (r.accepted) {
        for (int j = 0; j < 5; ++j) {
          LassoWord gamma = testing::random_lasso(rng, in, 2, 2);
          for (const auto& t : alternatives) CHECK(dd_pair_on_lasso(a, s, t, gamma));
        }
      } else {
        bool found = false;
        for (const auto& t : wider)
          if (!dd_pair_on_lasso(a, s, t, *r.counterexample)) {
            found = true;
            break;
          }
        CHECK(found);
        ++refuted;
      }
    }
  }
  CHECK(refuted > 0);
}
