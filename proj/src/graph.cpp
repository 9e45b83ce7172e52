#include <algorithm>

#include "ddsynth/games.hpp"

namespace ddsynth {

Sccs tarjan_scc(const Graph& g) {
  const std::size_t n = g.size();
  constexpr std::uint32_t kUnset = UINT32_MAX;
  Sccs out;
  out.comp.assign(n, kUnset);
  std::vector<std::uint32_t> index(n, kUnset), low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<Node> stack;
  std::vector<std::pair<Node, std::size_t>> call;
  std::uint32_t counter = 0;
  for (Node root = 0; root < n; ++root) {
    if (index[root] != kUnset) continue;
    call.push_back({root, 0});
    while (!call.empty()) {
      auto& [v, i] = call.back();
      if (i == 0) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = 1;
      }
      if (i < g.succ[v].size()) {
        Node w = g.succ[v][i++];
        if (index[w] == kUnset) {
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::uint32_t c = out.count++;
        std::size_t members = 0;
        Node w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          out.comp[w] = c;
          ++members;
        } while (w != v);
        bool self = std::find(g.succ[v].begin(), g.succ[v].end(), v) != g.succ[v].end();
        out.nontrivial.push_back(members > 1 || self);
      }
      Node done = v;
      call.pop_back();
      if (!call.empty()) {
        Node parent = call.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
    }
  }
  return out;
}

std::vector<char> reachable_from(const Graph& g, const std::vector<Node>& roots) {
  std::vector<char> seen(g.size(), 0);
  std::vector<Node> work;
  for (Node r : roots)
    if (!seen[r]) {
      seen[r] = 1;
      work.push_back(r);
    }
  while (!work.empty()) {
    Node v = work.back();
    work.pop_back();
    for (Node w : g.succ[v])
      if (!seen[w]) {
        seen[w] = 1;
        work.push_back(w);
      }
  }
  return seen;
}

}  // namespace ddsynth
