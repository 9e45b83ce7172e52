#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_map>

#include "ddsynth/mh_projection.hpp"

namespace ddsynth {

namespace {

std::string set_name(const StateSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

StateSet minus(const StateSet& a, const StateSet& b) {
  StateSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

StateSet drop_marked(const StateSet& a, const std::vector<char>& marked) {
  StateSet out;
  for (State q : a)
    if (!marked[q]) out.push_back(q);
  return out;
}

struct SetHash {
  std::size_t operator()(const StateSet& s) const {
    std::size_t h = s.size();
    for (State q : s) h ^= q + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
  std::size_t operator()(const MhState& m) const { return (*this)(m.s) * 31 + (*this)(m.r); }
  std::size_t operator()(const std::pair<StateSet, Letter>& k) const { return (*this)(k.first) * 131 + k.second; }
};

class DualModels {
 public:
  explicit DualModels(const Aca& a) : a_(a), dual_(a.num_states(), std::vector<std::optional<Dnf>>(a.props.num_letters())) {}

  /// Minimal models of the conjunction of the dual transitions of all states in s.
  const Dnf& conj(const StateSet& s, Letter l) {
    auto key = std::make_pair(s, l);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    Dnf d = dnf_true();
    for (State q : s) {
      d = dnf_and(d, dual(q, l));
      if (is_false(d)) break;
    }
    return memo_.emplace(key, std::move(d)).first->second;
  }

 private:
  const Dnf& dual(State q, Letter l) {
    auto& slot = dual_[q][l];
    if (!slot) slot = dnf_dual(a_.delta[q][l]);
    return *slot;
  }

  const Aca& a_;
  std::vector<std::vector<std::optional<Dnf>>> dual_;
  std::unordered_map<std::pair<StateSet, Letter>, Dnf, SetHash> memo_;
};

}  // namespace

Uca aca_to_uca(const Aca& a, const MhOptions& opts) {
  DualModels models(a);
  const auto& F = a.marked;
  Uca u;
  u.props = a.props;
  std::unordered_map<MhState, State, SetHash> index;
  std::vector<MhState> states;
  auto get = [&](const MhState& m) {
    auto it = index.find(m);
    if (it != index.end()) return it->second;
    if (states.size() >= opts.max_states) throw Error("breakpoint construction exceeded the state budget");
    State id = u.add_state("S" + set_name(m.s) + "R" + set_name(m.r), m.r.empty());
    index.emplace(m, id);
    states.emplace_back(m);
    return id;
  };
  u.initial = get({{a.initial}, drop_marked({a.initial}, F)});
  MhState scratch;
  for (std::size_t k = 0; k < states.size(); ++k) {
    const MhState cur = states[k];
    for (Letter l = 0; l < a.props.num_letters(); ++l) {
      StateSet next;
      if (cur.r.empty()) {
        for (const auto& x : models.conj(cur.s, l)) {
          scratch.s = x;
          scratch.r = drop_marked(x, F);
          next.push_back(get(scratch));
        }
      } else {
        const Dnf& xs = models.conj(minus(cur.s, cur.r), l);
        const Dnf& ys = models.conj(cur.r, l);
        for (const auto& y : ys) {
          scratch.r = drop_marked(y, F);
          for (const auto& x : xs) {
            scratch.s.clear();
            std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(scratch.s));
            next.push_back(get(scratch));
          }
        }
      }
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      u.succ[k][l] = std::move(next);
    }
  }
  return u;
}

Uca ltl_to_uca(const Formula& f, const Alphabet& props, const MhOptions& opts) {
  return aca_to_uca(ltl_to_aca(f, props), opts);
}

Uca universal_project(const Uca& u, const std::vector<std::string>& keep) {
  std::vector<std::string> names;
  for (const auto& n : u.props.names())
    if (std::find(keep.begin(), keep.end(), n) != keep.end()) names.push_back(n);
  for (const auto& k : keep)
    if (!u.props.contains(k)) throw AlphabetMismatch("projection keeps '" + k + "' which is not in the alphabet");
  if (names.size() == u.props.size()) throw Error("projection must hide at least one proposition");
  Alphabet props(names);
  LetterMap map(u.props, props);
  Uca out;
  out.props = props;
  out.names = u.names;
  out.initial = u.initial;
  out.rejecting = u.rejecting;
  out.succ.assign(u.num_states(), std::vector<StateSet>(props.num_letters()));
  for (State q = 0; q < u.num_states(); ++q)
    for (Letter l = 0; l < u.props.num_letters(); ++l) {
      auto& s = out.succ[q][map(l)];
      s = set_union(s, u.succ[q][l]);
    }
  return out;
}

Uca build_dd_uca(const Aca& a_phi, const Aca& a_negphi, const std::vector<std::string>& inputs,
                 const std::vector<std::string>& outputs, DdUcaStages* stages, const MhOptions& opts) {
  std::vector<std::string> v = inputs;
  v.insert(v.end(), outputs.begin(), outputs.end());
  if (!Alphabet(v).same_set(a_phi.props))
    throw AlphabetMismatch("automaton propositions must be exactly the process inputs and outputs");
  DdProductAca product = build_dd_aca(a_phi, a_negphi, outputs);
  Uca nonproj = aca_to_uca(product.aca, opts);
  double bound = std::pow(3.0, static_cast<double>(product.states_before_pruning));
  if (static_cast<double>(nonproj.num_states()) > bound) throw Error("breakpoint automaton exceeds its size bound");
  Uca dd = universal_project(nonproj, a_phi.props.names());
  if (stages) {
    stages->phi_states = product.phi_states;
    stages->negphi_states = product.negphi_states;
    stages->product_states_before_pruning = product.states_before_pruning;
    stages->product_states = product.aca.num_states();
    stages->nonprojected_states = nonproj.num_states();
    stages->dd_states = dd.num_states();
  }
  return dd;
}

namespace {

Uca dd_uca_for(const Formula& phi, const std::vector<std::string>& inputs, const std::vector<std::string>& outputs,
               DdUcaStages* stages, const MhOptions& opts) {
  std::vector<std::string> v = inputs;
  v.insert(v.end(), outputs.begin(), outputs.end());
  Alphabet props(v);
  for (const auto& a : atoms(phi))
    if (!props.contains(a))
      throw AlphabetMismatch("formula mentions '" + a + "' which the process neither reads nor writes");
  Aca a_phi = prune_noncycle_rejecting(ltl_to_aca(phi, props));
  Aca a_neg = prune_noncycle_rejecting(ltl_to_aca(ltl_not(phi), props));
  return build_dd_uca(a_phi, a_neg, inputs, outputs, stages, opts);
}

}  // namespace

Uca build_dd_uca(const Formula& phi, const Architecture& arch, const std::string& process, DdUcaStages* stages,
                 const MhOptions& opts) {
  const Process& p = arch.process(process);
  return dd_uca_for(phi, p.inputs, p.outputs, stages, opts);
}

Uca build_system_dd_uca(const Formula& phi, const Architecture& arch, DdUcaStages* stages, const MhOptions& opts) {
  return dd_uca_for(phi, arch.system_inputs(), arch.system_outputs(), stages, opts);
}

}  // namespace ddsynth
