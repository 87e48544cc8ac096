#include "dcfl/machine_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace dcfl {

namespace {

using nlohmann::json;

constexpr const char* kEpsilon = "ε";

json word_str(const Word& w) { return to_utf8(w); }

Word parse_word(const json& j, const std::string& field) {
  if (!j.is_string())
    throw Error(ErrorKind::MalformedMachine, field + " must be a string");
  try {
    return from_utf8(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw Error(ErrorKind::MalformedMachine, field + ": " + e.what());
  }
}

Symbol parse_symbol(const json& j, const std::string& field) {
  Word w = parse_word(j, field);
  if (w.size() != 1)
    throw Error(ErrorKind::MalformedMachine, field + " must be a single symbol");
  return w[0];
}

}  // namespace

std::string dpda_to_json(const Dpda& m, int indent) {
  json j;
  j["states"] = m.state_names;
  j["input_alphabet"] = word_str(m.input_alphabet);
  j["stack_alphabet"] = word_str(m.stack_alphabet);
  j["bottom_marker"] = to_utf8(m.bottom);
  j["initial_state"] = m.state_names.at(m.initial);
  json acc = json::array(), rej = json::array();
  for (StateId q : m.accept_states) acc.push_back(m.state_names.at(q));
  for (StateId q : m.reject_states) rej.push_back(m.state_names.at(q));
  j["accept_states"] = acc;
  j["reject_states"] = rej;
  json ts = json::array();
  for (const auto& [key, tgt] : m.transitions) {
    json t;
    t["from"] = m.state_names.at(key.from);
    t["read"] = key.read ? to_utf8(*key.read) : kEpsilon;
    t["top"] = to_utf8(key.top);
    t["to"] = m.state_names.at(tgt.to);
    t["push"] = word_str(tgt.push);
    ts.push_back(t);
  }
  j["transitions"] = ts;
  return j.dump(indent);
}

Dpda dpda_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::MalformedMachine, std::string("bad JSON: ") + e.what());
  }
  for (const char* field :
       {"states", "input_alphabet", "stack_alphabet", "bottom_marker", "initial_state",
        "accept_states", "reject_states", "transitions"})
    if (!j.contains(field))
      throw Error(ErrorKind::MalformedMachine, std::string("missing field ") + field);

  Dpda m;
  if (!j["states"].is_array() || j["states"].empty())
    throw Error(ErrorKind::MalformedMachine, "states must be a nonempty array");
  for (const auto& s : j["states"]) {
    if (!s.is_string()) throw Error(ErrorKind::MalformedMachine, "state names must be strings");
    m.state_names.push_back(s.get<std::string>());
  }
  auto id_of = [&](const json& name, const std::string& where) -> StateId {
    if (!name.is_string())
      throw Error(ErrorKind::MalformedMachine, where + " must be a state name");
    const std::string s = name.get<std::string>();
    for (StateId i = 0; i < m.state_names.size(); ++i)
      if (m.state_names[i] == s) return i;
    throw Error(ErrorKind::MalformedMachine, where + " names unknown state " + s);
  };

  m.input_alphabet = parse_word(j["input_alphabet"], "input_alphabet");
  m.stack_alphabet = parse_word(j["stack_alphabet"], "stack_alphabet");
  m.bottom = parse_symbol(j["bottom_marker"], "bottom_marker");
  m.initial = id_of(j["initial_state"], "initial_state");
  for (const auto& s : j["accept_states"]) m.accept_states.insert(id_of(s, "accept_states"));
  for (const auto& s : j["reject_states"]) m.reject_states.insert(id_of(s, "reject_states"));

  if (!j["transitions"].is_array())
    throw Error(ErrorKind::MalformedMachine, "transitions must be an array");
  for (const auto& t : j["transitions"]) {
    for (const char* field : {"from", "read", "top", "to", "push"})
      if (!t.contains(field))
        throw Error(ErrorKind::MalformedMachine, std::string("transition missing ") + field);
    TransKey key;
    key.from = id_of(t["from"], "transition from");
    Word read = parse_word(t["read"], "read");
    if (read.empty() || read == from_utf8(kEpsilon)) {
      key.read = std::nullopt;
    } else if (read.size() == 1) {
      key.read = read[0];
    } else {
      throw Error(ErrorKind::MalformedMachine, "read must be one symbol or epsilon");
    }
    key.top = parse_symbol(t["top"], "top");
    Target tgt;
    tgt.to = id_of(t["to"], "transition to");
    tgt.push = parse_word(t["push"], "push");
    if (m.transitions.count(key))
      throw Error(ErrorKind::MalformedMachine, "duplicate transition for one configuration");
    m.transitions[key] = tgt;
  }

  ValidationReport rep = validate(m);
  if (!rep.ok()) throw Error(ErrorKind::MalformedMachine, rep.joined());
  return m;
}

Dpda load_dpda_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::BadParameter, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return dpda_from_json(buf.str());
}

void save_dpda_file(const Dpda& m, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::BadParameter, "cannot open " + path);
  out << dpda_to_json(m) << "\n";
}

std::string lda_to_json(const Lda& m, int indent) {
  json j;
  j["states"] = m.state_names;
  json layers = json::array();
  for (const Word& layer : m.layers) layers.push_back(word_str(layer));
  j["layers"] = layers;
  j["initial_state"] = m.state_names.at(m.initial);
  json acc = json::array(), rej = json::array();
  for (StateId q : m.accept_states) acc.push_back(m.state_names.at(q));
  for (StateId q : m.reject_states) rej.push_back(m.state_names.at(q));
  j["accept_states"] = acc;
  j["reject_states"] = rej;
  json ts = json::array();
  for (const auto& [key, tgt] : m.transitions) {
    json t;
    t["from"] = m.state_names.at(key.first);
    t["read"] = to_utf8(key.second);
    t["to"] = m.state_names.at(tgt.to);
    t["write"] = to_utf8(tgt.write);
    t["dir"] = tgt.dir;
    ts.push_back(t);
  }
  j["transitions"] = ts;
  return j.dump(indent);
}

Lda lda_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::MalformedMachine, std::string("bad JSON: ") + e.what());
  }
  for (const char* field : {"states", "layers", "initial_state", "accept_states",
                            "reject_states", "transitions"})
    if (!j.contains(field))
      throw Error(ErrorKind::MalformedMachine, std::string("missing field ") + field);

  Lda m;
  if (!j["states"].is_array() || j["states"].empty())
    throw Error(ErrorKind::MalformedMachine, "states must be a nonempty array");
  for (const auto& s : j["states"]) {
    if (!s.is_string()) throw Error(ErrorKind::MalformedMachine, "state names must be strings");
    m.state_names.push_back(s.get<std::string>());
  }
  auto id_of = [&](const json& name, const std::string& where) -> StateId {
    if (!name.is_string())
      throw Error(ErrorKind::MalformedMachine, where + " must be a state name");
    const std::string s = name.get<std::string>();
    for (StateId i = 0; i < m.state_names.size(); ++i)
      if (m.state_names[i] == s) return i;
    throw Error(ErrorKind::MalformedMachine, where + " names unknown state " + s);
  };

  if (!j["layers"].is_array())
    throw Error(ErrorKind::MalformedMachine, "layers must be an array of strings");
  for (const auto& layer : j["layers"]) m.layers.push_back(parse_word(layer, "layers"));
  m.initial = id_of(j["initial_state"], "initial_state");
  for (const auto& s : j["accept_states"]) m.accept_states.insert(id_of(s, "accept_states"));
  for (const auto& s : j["reject_states"]) m.reject_states.insert(id_of(s, "reject_states"));

  if (!j["transitions"].is_array())
    throw Error(ErrorKind::MalformedMachine, "transitions must be an array");
  for (const auto& t : j["transitions"]) {
    for (const char* field : {"from", "read", "to", "write", "dir"})
      if (!t.contains(field))
        throw Error(ErrorKind::MalformedMachine, std::string("transition missing ") + field);
    std::pair<StateId, Symbol> key;
    key.first = id_of(t["from"], "transition from");
    key.second = parse_symbol(t["read"], "read");
    LdaTarget tgt;
    tgt.to = id_of(t["to"], "transition to");
    tgt.write = parse_symbol(t["write"], "write");
    if (!t["dir"].is_number_integer() ||
        (t["dir"].get<int>() != -1 && t["dir"].get<int>() != 1))
      throw Error(ErrorKind::MalformedMachine, "dir must be -1 or 1");
    tgt.dir = t["dir"].get<int>();
    if (m.transitions.count(key))
      throw Error(ErrorKind::MalformedMachine, "duplicate transition for one configuration");
    m.transitions[key] = tgt;
  }

  ValidationReport rep = validate_lda(m);
  if (!rep.ok()) throw Error(ErrorKind::MalformedMachine, rep.joined());
  return m;
}

Lda load_lda_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::BadParameter, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return lda_from_json(buf.str());
}

void save_lda_file(const Lda& m, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::BadParameter, "cannot open " + path);
  out << lda_to_json(m) << "\n";
}

}  // namespace dcfl
