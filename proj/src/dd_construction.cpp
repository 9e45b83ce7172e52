#include <algorithm>

#include "ddsynth/dd_construction.hpp"

namespace ddsynth {

std::string primed(const std::string& name) { return name + "'"; }

std::string unprimed(const std::string& name) {
  if (name.empty() || name.back() != '\'') throw Error("'" + name + "' is not primed");
  return name.substr(0, name.size() - 1);
}

LassoWord prime_trace(const LassoWord& w, const std::vector<std::string>& outputs) {
  std::vector<std::string> names;
  for (const auto& n : w.props.names())
    names.push_back(std::find(outputs.begin(), outputs.end(), n) != outputs.end() ? primed(n) : n);
  LassoWord out = w;
  out.props = Alphabet(names);
  return out;
}

Marked theta(State p, State q, bool bottom, const std::vector<char>& rejecting) {
  if (!rejecting[p] && rejecting[q] && !bottom) return {p, q, true};
  if (!rejecting[p] && bottom) return {p, q, true};
  return {p, q, false};
}

LassoWord dd_word(const LassoWord& dominant, const LassoWord& alternative, const std::vector<std::string>& outputs) {
  LassoWord alt_out = reindex(alternative, Alphabet(outputs));
  return lasso_union(dominant, prime_trace(alt_out, outputs));
}

DdProductAca build_dd_aca(const Aca& phi_in, const Aca& negphi_in, const std::vector<std::string>& outputs) {
  if (!phi_in.props.same_set(negphi_in.props))
    throw AlphabetMismatch("automata for phi and its negation use different propositions");
  for (const auto& o : outputs)
    if (!phi_in.props.contains(o)) throw AlphabetMismatch("output '" + o + "' not in automaton alphabet");
  Aca A = complete_aca(phi_in);
  Aca C = reindex(negphi_in, A.props);
  const Alphabet& V = A.props;
  std::vector<std::string> names = V.names();
  for (const auto& o : outputs) names.push_back(primed(o));
  Alphabet props(names);

  const State nq = static_cast<State>(A.num_states());
  const State offset = 2 * nq * nq;
  auto id = [&](State p, State q, bool bottom) { return (p * nq + q) * 2 + (bottom ? 1 : 0); };

  DdProductAca out;
  out.phi_states = nq;
  out.negphi_states = C.num_states();
  Aca& B = out.aca;
  B.props = props;
  for (State p = 0; p < nq; ++p)
    for (State q = 0; q < nq; ++q)
      for (int m = 0; m < 2; ++m) {
        B.add_state("(" + A.names[p] + "," + A.names[q] + (m ? ",bot)" : ",top)"), m == 1);
        out.origin.push_back({false, p, q, m == 1});
      }
  for (State c = 0; c < C.num_states(); ++c) {
    B.add_state("c:" + C.names[c], C.marked[c]);
    out.origin.push_back({true, c, 0, false});
  }
  out.states_before_pruning = B.num_states();
  if (out.states_before_pruning != 2 * std::size_t{nq} * nq + C.num_states())
    throw Error("product automaton has an unexpected number of states");

  // letter split: iota over V, iota' over V with primed outputs in place of outputs
  const std::size_t nv = V.size();
  std::vector<std::size_t> out_idx;
  for (const auto& o : outputs) out_idx.push_back(*V.index_of(o));
  auto split = [&](Letter l) {
    Letter iota = l & (V.num_letters() - 1);
    Letter iota_alt = iota;
    for (std::size_t k = 0; k < out_idx.size(); ++k) {
      Letter bit = Letter{1} << out_idx[k];
      iota_alt &= ~bit;
      if (l >> (nv + k) & 1) iota_alt |= bit;
    }
    return std::pair{iota, iota_alt};
  };

  for (Letter l = 0; l < props.num_letters(); ++l) {
    auto [iota, iota_alt] = split(l);
    for (State p = 0; p < nq; ++p)
      for (State q = 0; q < nq; ++q)
        for (int m = 0; m < 2; ++m) {
          Dnf result = dnf_true();
          for (const auto& c : A.delta[p][iota_alt]) {
            Dnf any = dnf_false();
            for (const auto& cq : A.delta[q][iota]) {
              Dnf all = dnf_true();
              for (State q2 : cq) {
                Dnf pick = dnf_false();
                for (State p2 : c) {
                  Marked t = theta(p2, q2, m == 1, A.marked);
                  pick.push_back({id(t.p, t.q, t.bottom)});
                }
                all = dnf_and(all, canonicalize(std::move(pick)));
              }
              any = dnf_or(any, all);
            }
            result = dnf_and(result, any);
            if (is_false(result)) break;
          }
          B.delta[id(p, q, m == 1)][l] = std::move(result);
        }
    for (State c = 0; c < C.num_states(); ++c) B.delta[offset + c][l] = dnf_shift(C.delta[c][iota_alt], offset);
    State init = id(A.initial, A.initial, false);
    B.delta[init][l] = dnf_or(B.delta[init][l], dnf_shift(C.delta[C.initial][iota_alt], offset));
  }
  B.initial = id(A.initial, A.initial, false);

  std::vector<State> kept;
  B = prune_unreachable(B, &kept);
  std::vector<DdOrigin> origin;
  for (State k : kept) origin.push_back(out.origin[k]);
  out.origin = std::move(origin);
  return out;
}

}  // namespace ddsynth
