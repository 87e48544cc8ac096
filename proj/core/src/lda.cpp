#include "dcfl/lda.hpp"

#include <algorithm>
#include <sstream>

namespace dcfl {

namespace {

std::string sym(Symbol s) { return to_utf8(s); }

bool is_marker(Symbol s) { return s == kLeftMarker || s == kRightMarker; }

Word all_tape_symbols(const Lda& m) {
  Word all;
  for (const Word& layer : m.layers) all += layer;
  return all;
}

}  // namespace

std::optional<std::size_t> Lda::layer_of(Symbol s) const {
  for (std::size_t i = 0; i < layers.size(); ++i)
    if (layers[i].find(s) != Word::npos) return i;
  return std::nullopt;
}

StateId Lda::state_id(std::string_view name) const {
  for (StateId i = 0; i < state_names.size(); ++i)
    if (state_names[i] == name) return i;
  throw Error(ErrorKind::BadParameter, "no state named " + std::string(name));
}

std::size_t next_layer(std::size_t i, int dir, std::size_t d) {
  std::size_t shift;
  if (i % 2 == 0)
    shift = dir > 0 ? 1 : 2;
  else
    shift = dir > 0 ? 2 : 1;
  return std::min(i + shift, d);
}

ValidationReport validate_lda(const Lda& m) {
  ValidationReport rep;
  auto fail = [&](const std::string& msg) { rep.errors.push_back(msg); };

  if (m.state_names.empty()) {
    fail("no states");
    return rep;
  }
  if (m.layers.size() < 2) {
    fail("need at least layers 0 and 1");
    return rep;
  }
  const std::size_t d = m.limit();

  std::map<Symbol, std::size_t> seen;
  for (std::size_t i = 0; i < m.layers.size(); ++i) {
    if (m.layers[i].empty()) fail("layer " + std::to_string(i) + " is empty");
    for (Symbol s : m.layers[i]) {
      auto [it, fresh] = seen.emplace(s, i);
      if (!fresh)
        fail("symbol " + sym(s) + " in layers " + std::to_string(it->second) + " and " +
             std::to_string(i));
    }
  }
  for (Symbol marker : {kLeftMarker, kRightMarker}) {
    auto layer = m.layer_of(marker);
    if (!layer)
      fail("end marker " + sym(marker) + " missing from the alphabet");
    else if (*layer != d)
      fail("end marker " + sym(marker) + " outside the top layer");
  }

  if (m.initial >= m.size()) fail("initial state out of range");
  for (StateId q : m.accept_states)
    if (q >= m.size()) fail("accept state out of range");
  for (StateId q : m.reject_states)
    if (q >= m.size()) fail("reject state out of range");
  for (StateId q : m.accept_states)
    if (m.reject_states.count(q)) fail("state " + m.state_names[q] + " both accepts and rejects");

  for (const auto& [key, tgt] : m.transitions) {
    const auto& [from, read] = key;
    std::string where = "move (" + (from < m.size() ? m.state_names[from] : "?") + ", " +
                        sym(read) + "): ";
    if (from >= m.size()) {
      fail(where + "source state out of range");
      continue;
    }
    if (m.is_halting(from)) fail(where + "halting states may not move");
    if (tgt.to >= m.size()) fail(where + "target state out of range");
    if (tgt.dir != -1 && tgt.dir != 1) {
      fail(where + "direction must be -1 or +1");
      continue;
    }
    auto from_layer = m.layer_of(read);
    auto to_layer = m.layer_of(tgt.write);
    if (!from_layer) {
      fail(where + "reads unknown symbol");
      continue;
    }
    if (!to_layer) {
      fail(where + "writes unknown symbol " + sym(tgt.write));
      continue;
    }
    if (*from_layer == d) {
      if (tgt.write != read) fail(where + "top-layer cells are frozen");
    } else if (is_marker(tgt.write)) {
      fail(where + "may not write an end marker");
    } else if (*to_layer != next_layer(*from_layer, tgt.dir, d)) {
      fail(where + "write must land in layer " +
           std::to_string(next_layer(*from_layer, tgt.dir, d)) + ", got layer " +
           std::to_string(*to_layer));
    }
  }

  const Word tape = all_tape_symbols(m);
  for (StateId q = 0; q < m.size(); ++q) {
    if (m.is_halting(q)) continue;
    for (Symbol s : tape)
      if (!m.transitions.count({q, s}))
        fail("state " + m.state_names[q] + " has no move on " + sym(s));
  }

  return rep;
}

std::size_t default_lda_budget(std::size_t input_length) {
  return 50 * (input_length + 2) * (input_length + 2);
}

LdaOutcome run_lda(const Lda& m, const Word& input, std::size_t step_budget) {
  if (step_budget == 0) step_budget = default_lda_budget(input.size());

  LdaOutcome out;
  out.final_state = m.initial;
  for (Symbol s : input) {
    auto layer = m.layer_of(s);
    if (!layer || *layer != 0) return out;  // not an input word of this machine
  }

  Word tape;
  tape.reserve(input.size() + 2);
  tape += kLeftMarker;
  tape += input;
  tape += kRightMarker;

  StateId q = m.initial;
  std::size_t pos = 0;
  while (!m.is_halting(q)) {
    if (out.steps >= step_budget)
      throw Error(ErrorKind::BudgetExhausted,
                  "no verdict after " + std::to_string(out.steps) + " steps");
    const Symbol read = tape[pos];
    auto it = m.transitions.find({q, read});
    if (it == m.transitions.end())
      throw Error(ErrorKind::UndefinedTransition,
                  "state " + m.state_names[q] + " stuck on " + sym(read));
    const LdaTarget& tgt = it->second;

    tape[pos] = tgt.write;
    LdaMove mv{q, pos, read, tgt.to, tgt.write, tgt.dir, Word()};
    mv.tape_after = tape;
    out.trace.push_back(std::move(mv));
    ++out.steps;

    if (tgt.dir < 0) {
      if (pos == 0)
        throw Error(ErrorKind::HeadOutOfTape, "moved left off the left end marker");
      --pos;
    } else {
      ++pos;
      if (pos >= tape.size())
        throw Error(ErrorKind::HeadOutOfTape, "moved right off the right end marker");
    }
    q = tgt.to;
  }

  out.accepted = m.accept_states.count(q) != 0;
  out.final_state = q;
  out.final_pos = pos;
  out.final_tape = tape;
  return out;
}

bool visit_discipline_check(const Lda& m, const std::vector<LdaMove>& trace) {
  if (trace.empty()) return true;
  const std::size_t d = m.limit();
  std::map<std::size_t, std::size_t> visits;
  std::map<std::size_t, int> entry_dir;

  visits[trace.front().pos] = 1;
  entry_dir[trace.front().pos] = +1;

  for (const LdaMove& mv : trace) {
    if (mv.write != mv.read && visits[mv.pos] > d) return false;
    if (mv.dir != entry_dir[mv.pos]) ++visits[mv.pos];  // a turn spends two visits
    const std::size_t next = mv.dir < 0 ? mv.pos - 1 : mv.pos + 1;
    ++visits[next];
    entry_dir[next] = mv.dir;
  }
  return true;
}

Lda make_zigzag_anbn() {
  std::vector<Word> layers{U"ab", U"A", Word() + kLeftMarker + kRightMarker + U"XY"};
  LdaBuilder b(std::move(layers));
  b.initial("scan").accept("yes").reject("no");

  // Opening sweep: mark every a until the first b turns the head around.
  b.step("scan", kLeftMarker, "scan", kLeftMarker, +1);
  b.step("scan", U'a', "scan", U'A', +1);
  b.step("scan", U'b', "match", U'Y', -1);
  b.step("scan", kRightMarker, "verify", kRightMarker, -1);

  // Leftward sweep: clear the rightmost surviving mark for the b just
  // consumed.
  b.steps("match", U"XY", "match", -1);
  b.step("match", U'A', "seek", U'X', +1);
  b.step("match", kLeftMarker, "no", kLeftMarker, +1);  // b with no a left

  // Later rightward sweeps: a raw a here sits after a consumed b.
  b.steps("seek", U"XY", "seek", +1);
  b.step("seek", U'b', "match", U'Y', -1);
  b.step("seek", kRightMarker, "verify", kRightMarker, -1);

  // Final sweep from $: any surviving mark means surplus a's.
  b.steps("verify", U"XY", "verify", -1);
  b.step("verify", U'A', "no", U'X', -1);
  b.step("verify", kLeftMarker, "yes", kLeftMarker, +1);

  b.fill_rejects("no");
  return b.build();
}

LdaBuilder::LdaBuilder(std::vector<Word> layers) { m_.layers = std::move(layers); }

StateId LdaBuilder::state(std::string_view name) {
  auto it = ids_.find(name);
  if (it != ids_.end()) return it->second;
  StateId id = static_cast<StateId>(m_.state_names.size());
  m_.state_names.emplace_back(name);
  ids_.emplace(std::string(name), id);
  return id;
}

LdaBuilder& LdaBuilder::initial(std::string_view name) {
  m_.initial = state(name);
  return *this;
}

LdaBuilder& LdaBuilder::accept(std::string_view name) {
  m_.accept_states.insert(state(name));
  return *this;
}

LdaBuilder& LdaBuilder::reject(std::string_view name) {
  m_.reject_states.insert(state(name));
  return *this;
}

LdaBuilder& LdaBuilder::step(std::string_view from, Symbol read, std::string_view to,
                             Symbol write, int dir) {
  m_.transitions[{state(from), read}] = LdaTarget{state(to), write, dir};
  return *this;
}

LdaBuilder& LdaBuilder::steps(std::string_view from, const Word& reads, std::string_view to,
                              int dir) {
  for (Symbol s : reads) step(from, s, to, s, dir);
  return *this;
}

LdaBuilder& LdaBuilder::fill_rejects(std::string_view sink) {
  const StateId sink_id = state(sink);
  m_.reject_states.insert(sink_id);
  const std::size_t d = m_.limit();

  auto lift = [&](Symbol s) -> Symbol {
    auto layer = m_.layer_of(s);
    if (!layer) return s;
    if (*layer == d) return s;
    const Word& target = m_.layers[next_layer(*layer, +1, d)];
    for (Symbol t : target)
      if (!is_marker(t)) return t;
    return target.empty() ? s : target[0];
  };

  const Word tape = all_tape_symbols(m_);
  for (StateId q = 0; q < m_.state_names.size(); ++q) {
    if (m_.is_halting(q)) continue;
    for (Symbol s : tape) {
      if (m_.transitions.count({q, s})) continue;
      m_.transitions[{q, s}] = LdaTarget{sink_id, lift(s), +1};
    }
  }
  return *this;
}

Lda LdaBuilder::build() const {
  ValidationReport rep = validate_lda(m_);
  if (!rep.ok()) throw Error(ErrorKind::MalformedMachine, rep.joined());
  return m_;
}

}  // namespace dcfl
