#pragma once

#include <optional>

#include "dcfl/dpda.hpp"

namespace dcfl {

// The restricted move repertoire: reads may leave the stack alone, push one
// cell, or pop the top cell; epsilon moves may only pop. A machine in this
// shape changes stack height by at most one per step and has push size two.
enum class MoveKind {
  Stationary,  // read, push = top
  PushOne,     // read, push = one new cell over top
  PopOnRead,   // read, push empty
  EpsPop,      // epsilon, push empty
};

// The kind of a single transition, or nullopt when it fits none.
std::optional<MoveKind> classify_move(const Dpda& m, const TransKey& key, const Target& tgt);

struct ShapeReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Every transition must have a kind, and a state with an outgoing epsilon pop
// may be entered only by popping moves (so an epsilon pop always follows a
// pop). The initial state counts as entered from outside and may not epsilon
// pop.
ShapeReport check_ideal_shape(const Dpda& m);

}  // namespace dcfl
