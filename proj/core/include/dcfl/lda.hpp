#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dcfl/dpda.hpp"
#include "dcfl/symbols.hpp"

namespace dcfl {

// Right-hand side of a two-way transition: next state, the symbol written
// over the scanned cell, and the head direction (-1 left, +1 right).
struct LdaTarget {
  StateId to = 0;
  Symbol write = 0;
  int dir = +1;
  bool operator==(const LdaTarget&) const = default;
};

// Two-way deterministic automaton whose tape alphabet splits into layers
// 0..d. Layer 0 is the input alphabet and layer d holds the end markers.
// A rewrite must lift the cell into the layer matching the number of visits
// spent on it so far, capped at d, so each cell is frozen after d visits.
struct Lda {
  std::vector<std::string> state_names;
  std::vector<Word> layers;  // disjoint; layers.front() = input, markers in layers.back()
  StateId initial = 0;
  std::set<StateId> accept_states;
  std::set<StateId> reject_states;
  std::map<std::pair<StateId, Symbol>, LdaTarget> transitions;

  std::size_t size() const { return state_names.size(); }
  // The rewrite limit d.
  std::size_t limit() const { return layers.empty() ? 0 : layers.size() - 1; }
  bool is_halting(StateId q) const {
    return accept_states.count(q) != 0 || reject_states.count(q) != 0;
  }
  std::optional<std::size_t> layer_of(Symbol s) const;
  // Index of a named state; throws if absent.
  StateId state_id(std::string_view name) const;
};

// Layer a rewrite must land in when the head leaves a layer-i cell in
// direction `dir`: one step deeper when the cell will next be entered from
// the same side, two when from the other, capped at d.
std::size_t next_layer(std::size_t i, int dir, std::size_t d);

// Static well-formedness: disjoint nonempty layers with the markers on top,
// state references in range, one move per non-halting state and tape symbol,
// no moves out of halting states, markers never overwritten, and every write
// landing in the layer next_layer prescribes.
ValidationReport validate_lda(const Lda& m);

struct LdaMove {
  StateId from = 0;
  std::size_t pos = 0;
  Symbol read = 0;
  StateId to = 0;
  Symbol write = 0;
  int dir = +1;
  Word tape_after;
};

struct LdaOutcome {
  bool accepted = false;
  std::size_t steps = 0;
  StateId final_state = 0;
  std::size_t final_pos = 0;
  Word final_tape;
  std::vector<LdaMove> trace;
};

// 50*(n+2)^2 with n the plain input length.
std::size_t default_lda_budget(std::size_t input_length);

// Runs the machine on ¢input$ with the head starting on ¢. Inputs using
// symbols outside layer 0 are rejected without stepping. Throws Error on
// budget exhaustion, on a move off either end of the tape, and on defects a
// validated machine cannot exhibit.
LdaOutcome run_lda(const Lda& m, const Word& input, std::size_t step_budget = 0);

// Dynamic counterpart of the layer rules: replays the trace counting visits
// per cell, a direction reversal counting as two, and reports whether every
// proper rewrite happened within the machine's limit.
bool visit_discipline_check(const Lda& m, const std::vector<LdaMove>& trace);

// Two-visit machine for {a^n b^n}: mark the opening a's, then bounce between
// the leftmost unconsumed b and the rightmost surviving mark, cancelling one
// pair per round trip. A raw a met after the first b, a b with no mark left,
// or a mark surviving the final sweep from $ all reject.
Lda make_zigzag_anbn();

// Incremental construction by state name, with a final validating build().
class LdaBuilder {
 public:
  explicit LdaBuilder(std::vector<Word> layers);

  StateId state(std::string_view name);  // get or create
  LdaBuilder& initial(std::string_view name);
  LdaBuilder& accept(std::string_view name);
  LdaBuilder& reject(std::string_view name);
  LdaBuilder& step(std::string_view from, Symbol read, std::string_view to, Symbol write,
                   int dir);
  // Same move for each symbol of `reads`, writing the symbol back unchanged;
  // meant for sweeps over top-layer cells.
  LdaBuilder& steps(std::string_view from, const Word& reads, std::string_view to, int dir);

  // Completes the table: every non-halting state gets a move to `sink` for
  // each unhandled tape symbol, writing a legal lift of the symbol and moving
  // right. `sink` is created and marked rejecting if new.
  LdaBuilder& fill_rejects(std::string_view sink);

  Lda build() const;  // throws Error(MalformedMachine) with the report on failure

 private:
  Lda m_;
  std::map<std::string, StateId, std::less<>> ids_;
};

}  // namespace dcfl
