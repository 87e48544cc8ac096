#include "dcfl/dpda.hpp"

#include <algorithm>
#include <sstream>

namespace dcfl {

namespace {

Word marked_inputs(const Dpda& m) {
  Word all = m.input_alphabet;
  all += kLeftMarker;
  all += kRightMarker;
  return all;
}

std::string sym(Symbol s) { return to_utf8(s); }

std::string sym(const std::optional<Symbol>& s) { return s ? to_utf8(*s) : std::string("ε"); }

}  // namespace

std::size_t Dpda::push_size() const {
  std::size_t e = 0;
  for (const auto& [key, tgt] : transitions) e = std::max(e, tgt.push.size());
  return e;
}

StateId Dpda::state_id(std::string_view name) const {
  for (StateId i = 0; i < state_names.size(); ++i)
    if (state_names[i] == name) return i;
  throw Error(ErrorKind::BadParameter, "no state named " + std::string(name));
}

bool Dpda::has_input_symbol(Symbol s) const {
  return input_alphabet.find(s) != Word::npos;
}

bool Dpda::has_stack_symbol(Symbol s) const {
  return stack_alphabet.find(s) != Word::npos;
}

std::string ValidationReport::joined() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < errors.size(); ++i) {
    if (i) out << "; ";
    out << errors[i];
  }
  return out.str();
}

ValidationReport validate(const Dpda& m) {
  ValidationReport rep;
  auto fail = [&](const std::string& msg) { rep.errors.push_back(msg); };

  if (m.state_names.empty()) {
    fail("no states");
    return rep;
  }
  if (m.initial >= m.size()) fail("initial state out of range");
  for (StateId q : m.accept_states)
    if (q >= m.size()) fail("accept state out of range");
  for (StateId q : m.reject_states)
    if (q >= m.size()) fail("reject state out of range");
  for (StateId q : m.accept_states)
    if (m.reject_states.count(q)) fail("state " + m.state_names[q] + " both accepts and rejects");

  for (Symbol s : m.input_alphabet) {
    if (s == kLeftMarker || s == kRightMarker)
      fail("input alphabet contains the end marker " + sym(s));
    if (std::count(m.input_alphabet.begin(), m.input_alphabet.end(), s) > 1)
      fail("duplicate input symbol " + sym(s));
  }
  for (Symbol s : m.stack_alphabet)
    if (std::count(m.stack_alphabet.begin(), m.stack_alphabet.end(), s) > 1)
      fail("duplicate stack symbol " + sym(s));
  if (!m.has_stack_symbol(m.bottom)) fail("bottom marker not in the stack alphabet");
  if (!rep.ok()) return rep;

  const Word inputs = marked_inputs(m);
  for (const auto& [key, tgt] : m.transitions) {
    std::string where = "(" + (key.from < m.size() ? m.state_names[key.from] : "?") + ", " +
                        sym(key.read) + ", " + sym(key.top) + ")";
    if (key.from >= m.size()) {
      fail("transition " + where + " from unknown state");
      continue;
    }
    if (m.is_halting(key.from)) fail("halting state has outgoing transition " + where);
    if (key.read && inputs.find(*key.read) == Word::npos)
      fail("transition " + where + " reads a symbol outside the marked alphabet");
    if (!m.has_stack_symbol(key.top)) fail("transition " + where + " pops an unknown symbol");
    if (tgt.to >= m.size()) fail("transition " + where + " enters an unknown state");
    for (Symbol s : tgt.push)
      if (!m.has_stack_symbol(s)) fail("transition " + where + " pushes unknown symbol " + sym(s));
    std::size_t bottoms = std::count(tgt.push.begin(), tgt.push.end(), m.bottom);
    if (key.top == m.bottom) {
      if (tgt.push.empty() || tgt.push.back() != m.bottom || bottoms != 1)
        fail("transition " + where +
             " must restore exactly one bottom marker at the push word's end");
    } else if (bottoms != 0) {
      fail("transition " + where + " pushes the bottom marker above the bottom");
    }
  }

  // One move must be available in every non-halting configuration: per state
  // and stack top, an epsilon move excludes and is excluded by read moves, and
  // read moves must cover the whole marked alphabet.
  for (StateId q = 0; q < m.size(); ++q) {
    if (m.is_halting(q)) continue;
    for (Symbol a : m.stack_alphabet) {
      bool has_eps = m.transitions.count({q, std::nullopt, a}) != 0;
      Word missing;
      std::size_t reads = 0;
      for (Symbol s : inputs) {
        if (m.transitions.count({q, s, a}))
          ++reads;
        else
          missing += s;
      }
      std::string where = "(" + m.state_names[q] + ", " + sym(a) + ")";
      if (has_eps && reads > 0)
        fail("state and top " + where + " mix an epsilon move with read moves");
      if (!has_eps && reads < inputs.size())
        fail("state and top " + where + " lack moves for: " + to_utf8(missing));
    }
  }
  return rep;
}

Dpda complement(const Dpda& m) {
  Dpda out = m;
  std::swap(out.accept_states, out.reject_states);
  return out;
}

std::size_t default_budget(const Dpda& m, std::size_t input_length) {
  const std::size_t n = input_length;
  const std::size_t e = m.push_size();
  const std::size_t raw = 10 * (n + 2) * (1 + e * (n + 2));
  return std::min<std::size_t>(raw, 1000000);
}

RunOutcome run(const Dpda& m, const Word& input, const RunOptions& opts) {
  RunOutcome out;
  for (Symbol s : input) {
    if (!m.has_input_symbol(s)) {
      out.accepted = false;
      out.final_state = m.initial;
      out.final_stack = Word(1, m.bottom);
      return out;
    }
  }
  const std::size_t budget = opts.budget ? opts.budget : default_budget(m, input.size());
  const Word tape = mark(input);

  StateId q = m.initial;
  Word stack(1, m.bottom);
  std::size_t pos = 0;

  while (!m.is_halting(q)) {
    if (out.steps >= budget)
      throw Error(ErrorKind::BudgetExhausted,
                  "no halt within " + std::to_string(budget) + " steps");
    if (stack.empty()) throw Error(ErrorKind::StackUnderflow, "empty stack mid-run");
    const Symbol top = stack[0];

    auto it = m.transitions.find({q, std::nullopt, top});
    std::optional<Symbol> read;
    if (it == m.transitions.end()) {
      if (pos >= tape.size())
        throw Error(ErrorKind::InputExhausted,
                    "state " + m.state_names[q] + " wants input after the right marker");
      read = tape[pos];
      it = m.transitions.find({q, read, top});
      if (it == m.transitions.end())
        throw Error(ErrorKind::UndefinedTransition,
                    "no move from " + m.state_names[q] + " on " + sym(read) + " with top " +
                        sym(top));
      ++pos;
    }
    const Target& t = it->second;
    stack = t.push + stack.substr(1);
    ++out.steps;
    if (opts.collect_trace)
      out.trace.push_back({q, read, top, t.to, t.push, stack});
    q = t.to;
  }

  out.accepted = m.accept_states.count(q) != 0;
  out.final_state = q;
  out.final_stack = stack;
  return out;
}

bool accepts(const Dpda& m, const Word& input, std::size_t budget) {
  RunOptions opts;
  opts.budget = budget;
  opts.collect_trace = false;
  return run(m, input, opts).accepted;
}

DpdaBuilder::DpdaBuilder(const Word& input_alphabet, const Word& stack_alphabet, Symbol bottom) {
  m_.input_alphabet = input_alphabet;
  m_.stack_alphabet = stack_alphabet;
  m_.bottom = bottom;
}

StateId DpdaBuilder::state(std::string_view name) {
  auto it = ids_.find(name);
  if (it != ids_.end()) return it->second;
  StateId id = static_cast<StateId>(m_.state_names.size());
  m_.state_names.emplace_back(name);
  ids_.emplace(std::string(name), id);
  return id;
}

DpdaBuilder& DpdaBuilder::initial(std::string_view name) {
  m_.initial = state(name);
  return *this;
}

DpdaBuilder& DpdaBuilder::accept(std::string_view name) {
  m_.accept_states.insert(state(name));
  return *this;
}

DpdaBuilder& DpdaBuilder::reject(std::string_view name) {
  m_.reject_states.insert(state(name));
  return *this;
}

DpdaBuilder& DpdaBuilder::step(std::string_view from, Symbol read, Symbol top,
                               std::string_view to, const Word& push) {
  TransKey key{state(from), read, top};
  auto [it, inserted] = m_.transitions.emplace(key, Target{state(to), push});
  if (!inserted)
    throw Error(ErrorKind::BadParameter,
                "duplicate transition from " + std::string(from) + " on " + to_utf8(read) +
                    " with top " + to_utf8(top));
  return *this;
}

DpdaBuilder& DpdaBuilder::steps(std::string_view from, const Word& reads, Symbol top,
                                std::string_view to, const Word& push) {
  for (Symbol s : reads) step(from, s, top, to, push);
  return *this;
}

DpdaBuilder& DpdaBuilder::eps(std::string_view from, Symbol top, std::string_view to,
                              const Word& push) {
  TransKey key{state(from), std::nullopt, top};
  auto [it, inserted] = m_.transitions.emplace(key, Target{state(to), push});
  if (!inserted)
    throw Error(ErrorKind::BadParameter,
                "duplicate epsilon transition from " + std::string(from) + " with top " +
                    to_utf8(top));
  return *this;
}

DpdaBuilder& DpdaBuilder::fill_rejects(std::string_view sink) {
  bool fresh = ids_.find(sink) == ids_.end();
  StateId sink_id = state(sink);
  if (fresh) m_.reject_states.insert(sink_id);
  Word inputs = m_.input_alphabet;
  inputs += kLeftMarker;
  inputs += kRightMarker;
  for (StateId q = 0; q < m_.state_names.size(); ++q) {
    if (m_.is_halting(q)) continue;
    for (Symbol a : m_.stack_alphabet) {
      if (m_.transitions.count({q, std::nullopt, a})) continue;
      for (Symbol s : inputs) {
        TransKey key{q, s, a};
        if (!m_.transitions.count(key))
          m_.transitions.emplace(key, Target{sink_id, Word(1, a)});
      }
    }
  }
  return *this;
}

Dpda DpdaBuilder::build() const {
  ValidationReport rep = validate(m_);
  if (!rep.ok()) throw Error(ErrorKind::MalformedMachine, rep.joined());
  return m_;
}

}  // namespace dcfl
