#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "dcfl/errors.hpp"
#include "dcfl/symbols.hpp"

namespace dcfl {

using StateId = std::uint32_t;

// Key of the transition table. `read == nullopt` is an epsilon move; otherwise
// `read` ranges over the input alphabet plus the two end markers.
struct TransKey {
  StateId from;
  std::optional<Symbol> read;
  Symbol top;
  auto operator<=>(const TransKey&) const = default;
};

// Right-hand side of a transition. `push` replaces the popped top symbol and
// is written top-first, so a stationary move pushes the one-symbol word `top`
// and a plain pop pushes the empty word.
struct Target {
  StateId to;
  Word push;
  bool operator==(const Target&) const = default;
};

// Deterministic pushdown automaton with end markers and halting accept/reject
// states. The bottom marker starts as the whole stack and can never be erased
// or duplicated.
struct Dpda {
  std::vector<std::string> state_names;
  Word input_alphabet;  // markers excluded
  Word stack_alphabet;  // includes the bottom marker
  Symbol bottom = U'Z';
  StateId initial = 0;
  std::set<StateId> accept_states;
  std::set<StateId> reject_states;
  std::map<TransKey, Target> transitions;

  std::size_t size() const { return state_names.size(); }
  bool is_halting(StateId q) const {
    return accept_states.count(q) != 0 || reject_states.count(q) != 0;
  }
  // Largest push word length over all transitions; 0 for an empty table.
  std::size_t push_size() const;
  // Index of a named state; throws if absent.
  StateId state_id(std::string_view name) const;
  bool has_input_symbol(Symbol s) const;
  bool has_stack_symbol(Symbol s) const;
};

struct ValidationReport {
  std::vector<std::string> errors;
  bool ok() const { return errors.empty(); }
  std::string joined() const;
};

// Static well-formedness: symbol and state references, one available move per
// reachable configuration shape (an epsilon move or a move for every input
// symbol, never both), halting states without outgoing moves, and bottom
// marker preservation.
ValidationReport validate(const Dpda& m);

// Swaps accepting and rejecting states.
Dpda complement(const Dpda& m);

struct Move {
  StateId from;
  std::optional<Symbol> read;
  Symbol top;
  StateId to;
  Word push;
  Word stack_after;
};

struct RunOutcome {
  bool accepted = false;
  std::size_t steps = 0;
  StateId final_state = 0;
  Word final_stack;
  std::vector<Move> trace;
};

struct RunOptions {
  // 0 selects the default bound 10*(n+2)*(1 + e*(n+2)) capped at 1,000,000,
  // with n the plain input length and e the machine's largest push length.
  std::size_t budget = 0;
  bool collect_trace = true;
};

std::size_t default_budget(const Dpda& m, std::size_t input_length);

// Runs the machine on ¢input$. Inputs using symbols outside the machine's
// alphabet are rejected without stepping. Throws Error on budget exhaustion or
// on defects a validated machine cannot exhibit.
RunOutcome run(const Dpda& m, const Word& input, const RunOptions& opts = {});

bool accepts(const Dpda& m, const Word& input, std::size_t budget = 0);

// Incremental construction by state name, with a final validating build().
class DpdaBuilder {
 public:
  DpdaBuilder(const Word& input_alphabet, const Word& stack_alphabet, Symbol bottom);

  StateId state(std::string_view name);  // get or create
  DpdaBuilder& initial(std::string_view name);
  DpdaBuilder& accept(std::string_view name);
  DpdaBuilder& reject(std::string_view name);
  DpdaBuilder& step(std::string_view from, Symbol read, Symbol top, std::string_view to,
                    const Word& push);
  // Same move for each symbol of `reads`.
  DpdaBuilder& steps(std::string_view from, const Word& reads, Symbol top, std::string_view to,
                     const Word& push);
  DpdaBuilder& eps(std::string_view from, Symbol top, std::string_view to, const Word& push);

  // Completes the table: every non-halting state and stack top lacking both an
  // epsilon move and a full set of read moves gets stationary moves to `sink`
  // for the missing symbols. `sink` is created and marked rejecting if new.
  DpdaBuilder& fill_rejects(std::string_view sink);

  Dpda build() const;  // throws Error(MalformedMachine) with the report on failure

 private:
  Dpda m_;
  std::map<std::string, StateId, std::less<>> ids_;
};

}  // namespace dcfl
