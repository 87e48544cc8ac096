#include "dcfl/ideal_shape.hpp"

#include <set>

namespace dcfl {

std::optional<MoveKind> classify_move(const Dpda& m, const TransKey& key, const Target& tgt) {
  if (!key.read) {
    if (tgt.push.empty()) return MoveKind::EpsPop;
    return std::nullopt;
  }
  if (tgt.push.empty()) return MoveKind::PopOnRead;
  if (tgt.push.size() == 1 && tgt.push[0] == key.top) return MoveKind::Stationary;
  if (tgt.push.size() == 2 && tgt.push[1] == key.top && tgt.push[0] != m.bottom)
    return MoveKind::PushOne;
  return std::nullopt;
}

ShapeReport check_ideal_shape(const Dpda& m) {
  ShapeReport rep;
  auto name = [&](StateId q) { return q < m.size() ? m.state_names[q] : std::string("?"); };

  std::set<StateId> eps_poppers;
  for (const auto& [key, tgt] : m.transitions) {
    std::optional<MoveKind> kind = classify_move(m, key, tgt);
    if (!kind) {
      rep.violations.push_back("transition from " + name(key.from) + " with top " +
                               to_utf8(key.top) + " pushes \"" + to_utf8(tgt.push) +
                               "\", which is no stationary, push-one, or pop move");
      continue;
    }
    if (*kind == MoveKind::EpsPop) eps_poppers.insert(key.from);
  }

  for (StateId q : eps_poppers) {
    if (q == m.initial)
      rep.violations.push_back("initial state " + name(q) +
                               " pops on epsilon but starts without a preceding pop");
    for (const auto& [key, tgt] : m.transitions) {
      if (tgt.to != q) continue;
      std::optional<MoveKind> kind = classify_move(m, key, tgt);
      if (kind && *kind != MoveKind::PopOnRead && *kind != MoveKind::EpsPop)
        rep.violations.push_back("state " + name(q) + " pops on epsilon but is entered from " +
                                 name(key.from) + " by a non-popping move");
    }
  }
  return rep;
}

}  // namespace dcfl
