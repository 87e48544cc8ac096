#include "dcfl/enhance.hpp"

#include <algorithm>

namespace dcfl {

Dpda epsilon_enhance(const Dpda& m) {
  if (m.has_input_symbol(kPlaceholder))
    throw Error(ErrorKind::BadParameter, "machine already reads the placeholder");
  Dpda n;
  n.state_names = m.state_names;
  std::string veto = "veto";
  while (std::find(n.state_names.begin(), n.state_names.end(), veto) != n.state_names.end())
    veto += "_";
  const StateId veto_id = static_cast<StateId>(n.state_names.size());
  n.state_names.push_back(veto);
  n.input_alphabet = m.input_alphabet + kPlaceholder;
  n.stack_alphabet = m.stack_alphabet;
  n.bottom = m.bottom;
  n.initial = m.initial;
  n.accept_states = m.accept_states;
  n.reject_states = m.reject_states;
  n.reject_states.insert(veto_id);

  Word marked = m.input_alphabet;
  marked += kLeftMarker;
  marked += kRightMarker;

  for (StateId q = 0; q < m.size(); ++q) {
    if (m.is_halting(q)) continue;
    for (Symbol a : m.stack_alphabet) {
      auto eps = m.transitions.find({q, std::nullopt, a});
      if (eps != m.transitions.end()) {
        n.transitions[{q, kPlaceholder, a}] = eps->second;
        for (Symbol s : marked) n.transitions[{q, s, a}] = Target{veto_id, Word(1, a)};
      } else {
        for (Symbol s : marked) {
          auto it = m.transitions.find({q, s, a});
          if (it != m.transitions.end()) n.transitions[{q, s, a}] = it->second;
        }
        n.transitions[{q, kPlaceholder, a}] = Target{veto_id, Word(1, a)};
      }
    }
  }
  return n;
}

Word induce(const Dpda& m, const Word& x, std::size_t budget) {
  RunOptions opts;
  opts.budget = budget;
  RunOutcome out = run(m, x, opts);
  Word enhanced;
  bool inside = false;
  std::size_t consumed = 0;
  for (const Move& mv : out.trace) {
    if (mv.read && *mv.read == kLeftMarker) {
      inside = true;
      continue;
    }
    if (mv.read && *mv.read == kRightMarker) break;
    if (!inside) continue;
    enhanced += mv.read ? *mv.read : kPlaceholder;
    if (mv.read) ++consumed;
  }
  enhanced += x.substr(consumed);
  return enhanced;
}

}  // namespace dcfl
