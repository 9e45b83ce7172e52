#include <doctest.h>

#include "support.hpp"
#include "ddsynth/games.hpp"

using namespace ddsynth;

namespace {

Arena random_arena(testing::Rng& rng, std::size_t n) {
  Arena a;
  for (std::size_t v = 0; v < n; ++v) a.add_node(static_cast<std::uint8_t>(testing::pick(rng, 0, 1)));
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t k = testing::pick(rng, 0, 2);
    for (std::size_t j = 0; j < k; ++j) {
      Node t = static_cast<Node>(testing::pick(rng, 0, n - 1));
      if (std::find(a.succ[v].begin(), a.succ[v].end(), t) == a.succ[v].end()) a.succ[v].push_back(t);
    }
  }
  return a;
}

/// Buchi player wins from v under some positional strategy: the opponent then
/// reaches neither a stuck Buchi node nor a cycle free of accepting nodes.
std::vector<char> buchi_bruteforce(const Arena& a, std::uint8_t player, const std::vector<char>& acc) {
  const std::size_t n = a.size();
  std::vector<std::size_t> choice(n, 0);
  std::vector<char> win(n, 0);
  while (true) {
    std::vector<std::vector<Node>> succ(n);
    std::vector<char> stuck(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
      if (a.owner[v] == player) {
        if (a.succ[v].empty())
          stuck[v] = 1;
        else
          succ[v] = {a.succ[v][choice[v]]};
      } else {
        succ[v] = a.succ[v];
      }
    }
    // bad: stuck nodes and nodes on a cycle avoiding acceptance; lose if one is reachable
    std::vector<char> bad = stuck;
    for (std::size_t v = 0; v < n; ++v) {
      if (acc[v]) continue;
      std::vector<char> seen(n, 0);
      std::vector<Node> st;
      for (Node u : succ[v])
        if (!acc[u]) st.push_back(u);
      while (!st.empty()) {
        Node x = st.back();
        st.pop_back();
        if (x == v) {
          bad[v] = 1;
          break;
        }
        if (seen[x]) continue;
        seen[x] = 1;
        for (Node y : succ[x])
          if (!acc[y]) st.push_back(y);
      }
    }
    for (std::size_t v = 0; v < n; ++v) {
      std::vector<char> seen(n, 0);
      std::vector<Node> st{static_cast<Node>(v)};
      bool lost = false;
      while (!st.empty() && !lost) {
        Node x = st.back();
        st.pop_back();
        if (seen[x]) continue;
        seen[x] = 1;
        if (bad[x]) lost = true;
        for (Node y : succ[x]) st.push_back(y);
      }
      if (!lost) win[v] = 1;
    }
    std::size_t k = 0;
    while (k < n) {
      if (a.owner[k] == player && choice[k] + 1 < a.succ[k].size()) {
        ++choice[k];
        break;
      }
      choice[k] = 0;
      ++k;
    }
    if (k == n) return win;
  }
}

}  // namespace

TEST_CASE("scc decomposition") {
  Graph g;
  g.succ = {{1}, {2}, {0}, {3}, {}};
  Sccs s = tarjan_scc(g);
  CHECK(s.count == 3);
  CHECK(s.comp[0] == s.comp[1]);
  CHECK(s.comp[1] == s.comp[2]);
  CHECK(s.nontrivial[s.comp[0]]);
  CHECK(s.nontrivial[s.comp[3]]);
  CHECK_FALSE(s.nontrivial[s.comp[4]]);
  auto r = reachable_from(g, {3});
  CHECK(r == std::vector<char>{0, 0, 0, 1, 0});
}

TEST_CASE("attractor forces visits") {
  Arena a;
  for (int i = 0; i < 4; ++i) a.add_node(i % 2 ? 1 : 0);
  a.succ = {{1, 2}, {3}, {2}, {3}};
  std::vector<char> alive(4, 1), target{0, 0, 0, 1};
  Attractor at = attractor(a, alive, target, 0);
  CHECK(at.in == std::vector<char>{1, 1, 0, 1});
  CHECK(at.move[0] == 1);
}

TEST_CASE("buchi solver matches positional strategy enumeration") {
  testing::Rng rng(41);
  for (int k = 0; k < 300; ++k) {
    Arena a = random_arena(rng, testing::pick(rng, 1, 7));
    std::vector<char> acc(a.size());
    for (auto& x : acc) x = testing::coin(rng, 0.3);
    auto player = static_cast<std::uint8_t>(testing::pick(rng, 0, 1));
    BuchiSolution s = solve_buchi(a, player, acc);
    CHECK(s.win == buchi_bruteforce(a, player, acc));
    for (std::size_t v = 0; v < a.size(); ++v)
      if (s.win[v] && a.owner[v] == player) {
        REQUIRE(s.buchi_strategy[v] != kNoMove);
        CHECK(s.win[static_cast<std::size_t>(s.buchi_strategy[v])]);
      }
  }
}

TEST_CASE("safety game") {
  Arena a;
  for (int i = 0; i < 4; ++i) a.add_node(i == 1 ? 1 : 0);
  a.succ = {{1, 2}, {0, 3}, {2}, {3}};
  SafetySolution s = solve_safety(a, 0, {1, 1, 1, 0});
  CHECK(s.win == std::vector<char>{1, 0, 1, 0});
  CHECK(s.strategy[0] == 2);
}
