#include <doctest.h>

#include <set>

#include "support.hpp"

using namespace ddsynth;
using testing::Rng;

namespace {

std::size_t fold(const LassoWord& w, std::size_t j) {
  return j < w.prefix.size() ? j : w.prefix.size() + (j - w.prefix.size()) % w.loop.size();
}

bool bit(const Alphabet& p, Letter l, const std::string& n) { return (l >> *p.index_of(n)) & 1U; }

/// Value of proposition n at step j, by running the machine directly.
std::vector<std::map<std::string, bool>> simulate_pair(const MooreMachine& a, const MooreMachine& b,
                                                       const LassoWord& gamma, std::size_t steps) {
  std::vector<std::map<std::string, bool>> out;
  State s = a.initial, t = b.initial;
  for (std::size_t j = 0; j < steps; ++j) {
    std::map<std::string, bool> v;
    Letter g = gamma.at(fold(gamma, j));
    for (const auto& n : gamma.props.names()) v[n] = bit(gamma.props, g, n);
    for (const auto& n : a.outputs.names()) v[n] = bit(a.outputs, a.label[s], n);
    for (const auto& n : b.outputs.names()) v[n] = bit(b.outputs, b.label[t], n);
    auto input = [&](const MooreMachine& m) {
      Letter l = 0;
      for (std::size_t k = 0; k < m.inputs.size(); ++k)
        if (v.at(m.inputs.name(k))) l |= Letter{1} << k;
      return l;
    };
    out.push_back(v);
    State s2 = a.trans[s][input(a)], t2 = b.trans[t][input(b)];
    s = s2;
    t = t2;
  }
  return out;
}

}  // namespace

TEST_CASE("computation of the message machines") {
  MooreMachine s1 = read_moore(testing::fixture("s1.moore")), t1 = read_moore(testing::fixture("t1.moore"));
  LassoWord gamma = parse_lasso("{} {m2} $ {}", s1.inputs);
  CHECK(format_lasso(canonical(computation(s1, gamma))) == "{m1} {m2,m1} $ {m1}");
  CHECK(format_lasso(canonical(computation(t1, gamma))) == "{} {m2} $ {m1}");
  CHECK_THROWS_AS(computation(s1, parse_lasso("$ {}", Alphabet({"x"}))), AlphabetMismatch);
}

TEST_CASE("composition follows the step semantics") {
  Rng rng(61);
  Alphabet i1({"e", "y"}), o1({"x"}), i2({"x"}), o2({"y"});
  for (int k = 0; k < 100; ++k) {
    MooreMachine a = testing::random_machine(rng, i1, o1, 3), b = testing::random_machine(rng, i2, o2, 3);
    MooreMachine c = compose(a, b);
    CHECK(c.inputs == Alphabet({"e"}));
    CHECK(c.outputs == Alphabet({"x", "y"}));
    LassoWord gamma = testing::random_lasso(rng, c.inputs, 3, 3);
    LassoWord trace = computation(c, gamma);
    auto sim = simulate_pair(a, b, gamma, 30);
    for (std::size_t j = 0; j < sim.size(); ++j)
      for (const auto& [n, v] : sim[j]) CHECK(bit(trace.props, trace.at(fold(trace, j)), n) == v);
  }
  MooreMachine s1 = read_moore(testing::fixture("s1.moore")), s2 = read_moore(testing::fixture("s2.moore"));
  MooreMachine both = compose(s1, s2);
  CHECK(both.inputs.size() == 0);
  CHECK(both.num_states() == 1);
  CHECK_THROWS_AS(compose(s1, s1), Error);
}

TEST_CASE("minimization keeps behaviour") {
  Rng rng(62);
  Alphabet in({"i"}), out({"o", "p"});
  for (int k = 0; k < 200; ++k) {
    MooreMachine m = testing::random_machine(rng, in, out, 5);
    MooreMachine small = minimize(m), canon = bfs_canonical(m);
    CHECK(small.num_states() <= canon.num_states());
    CHECK(minimize(small) == small);
    CHECK(bfs_canonical(canon) == canon);
    for (int j = 0; j < 10; ++j) {
      LassoWord g = testing::random_lasso(rng, in, 3, 3);
      CHECK(same_word(computation(small, g), computation(m, g)));
      CHECK(same_word(computation(canon, g), computation(m, g)));
    }
  }
}

TEST_CASE("enumeration yields each canonical machine once") {
  Alphabet in({"i"}), out({"o"});
  auto all = enumerate_machines(in, out, 2);
  std::set<std::string> seen;
  for (const auto& m : all) {
    CHECK(bfs_canonical(m) == m);
    CHECK(seen.insert(write_moore(m)).second);
  }
  // brute force over all labelings and transition tables of 1 and 2 states
  std::size_t expected = 0;
  for (std::size_t n = 1; n <= 2; ++n) {
    std::size_t tables = 1;
    for (std::size_t k = 0; k < n * 2; ++k) tables *= n;
    for (std::size_t labels = 0; labels < (1U << n); ++labels)
      for (std::size_t code = 0; code < tables; ++code) {
        MooreMachine m{in, out, 0, std::vector<Letter>(n), std::vector<std::vector<State>>(n, std::vector<State>(2))};
        std::size_t c = code;
        for (std::size_t s = 0; s < n; ++s) {
          m.label[s] = (labels >> s) & 1U;
          for (auto& t : m.trans[s]) {
            t = static_cast<State>(c % n);
            c /= n;
          }
        }
        if (bfs_canonical(m) == m) ++expected;
      }
  }
  CHECK(all.size() == expected);
}

TEST_CASE("machine files") {
  Rng rng(63);
  Alphabet in({"a", "b"}), out({"c"});
  for (int k = 0; k < 50; ++k) {
    MooreMachine m = testing::random_machine(rng, in, out, 4);
    CHECK(read_moore(write_moore(m)) == m);
  }
  CHECK_THROWS_AS(read_moore("moore\ninputs: a\noutputs: b\nstates: 1\nlabel 0 : {b}\n"), ParseError);
  CHECK_THROWS_AS(read_moore("moore\ninputs: a\noutputs: b\nstates: 1\ntrans 0 * -> 3\n"), ParseError);
  CHECK_THROWS_AS(read_moore("mealy\n"), ParseError);
  CHECK(moore_to_dot(read_moore(testing::fixture("t1.moore"))).find("digraph") != std::string::npos);
}

TEST_CASE("architectures") {
  Architecture a = read_architecture(testing::fixture("message.arch"));
  CHECK(a.processes.size() == 2);
  CHECK(a.process("p1").inputs == std::vector<std::string>{"m2"});
  CHECK(a.system_inputs().empty());
  CHECK(a.variables() == std::vector<std::string>{"m1", "m2"});
  CHECK(read_architecture(write_architecture(a)).variables() == a.variables());
  CHECK_THROWS_AS(a.process("p3"), Error);
  CHECK_THROWS_AS(read_architecture("architecture\nprocess p\noutputs: x\nprocess q\noutputs: x\n"), Error);
  CHECK_THROWS_AS(read_architecture("architecture\ninputs: x\n"), ParseError);
  CHECK_THROWS_AS(read_architecture("architecture\nprocess p\ninputs: x\noutputs: x\n"), Error);
  Architecture e = read_architecture("architecture\nenv: i\nprocess p\ninputs: i\noutputs: o\n");
  CHECK(e.system_inputs() == std::vector<std::string>{"i"});
}
