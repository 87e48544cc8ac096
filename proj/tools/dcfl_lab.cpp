#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dcfl/dpda.hpp"
#include "dcfl/enhance.hpp"
#include "dcfl/errors.hpp"
#include "dcfl/family.hpp"
#include "dcfl/ideal_shape.hpp"
#include "dcfl/iterative.hpp"
#include "dcfl/language.hpp"
#include "dcfl/lda.hpp"
#include "dcfl/machine_io.hpp"
#include "dcfl/pumping.hpp"
#include "dcfl/stack_history.hpp"
#include "dcfl/symbols.hpp"
#include "dcfl/zoo.hpp"

namespace {

using dcfl::Word;

constexpr const char* kEpsilonToken = "ε";

Word parse_word_arg(const std::string& text) {
  if (text == kEpsilonToken) return Word();
  return dcfl::from_utf8(text);
}

std::string show(const Word& w) { return w.empty() ? kEpsilonToken : dcfl::to_utf8(w); }

std::size_t env_budget() {
  const char* s = std::getenv("DCFL_LAB_BUDGET");
  if (!s || !*s) return 0;
  char* end = nullptr;
  unsigned long long v = std::strtoull(s, &end, 10);
  if (end == s || *end != '\0' || v == 0)
    throw dcfl::Error(dcfl::ErrorKind::BadParameter,
                      "DCFL_LAB_BUDGET must be a positive step count");
  return static_cast<std::size_t>(v);
}

// Everything a command reports. The sections print in a fixed order and the
// verdict lines depend only on the inputs, so re-running an echoed command
// reproduces them bit for bit; only the trailing wall time varies.
struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<std::string> details;
  std::vector<std::pair<std::string, std::string>> verdicts;
  std::vector<std::pair<std::string, std::uint64_t>> counters;

  void param(const std::string& k, const std::string& v) { parameters.emplace_back(k, v); }
  void param(const std::string& k, std::uint64_t v) { param(k, std::to_string(v)); }
  void detail(const std::string& line) { details.push_back(line); }
  void verdict(const std::string& k, const std::string& v) { verdicts.emplace_back(k, v); }
  void count(const std::string& k, std::uint64_t v) { counters.emplace_back(k, v); }
};

class Timer {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

void emit(const Report& r, bool as_json, double wall_ms) {
  if (as_json) {
    nlohmann::ordered_json j;
    j["command"] = r.command;
    auto params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.parameters) params[k] = v;
    j["parameters"] = params;
    j["details"] = r.details;
    auto verdicts = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.verdicts) verdicts[k] = v;
    j["verdicts"] = verdicts;
    auto counters = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.counters) counters[k] = v;
    j["counters"] = counters;
    j["wall_ms"] = wall_ms;
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::cout << "command: " << r.command << "\n";
  for (const auto& [k, v] : r.parameters) std::cout << "  " << k << " = " << v << "\n";
  for (const auto& line : r.details) std::cout << "  " << line << "\n";
  for (const auto& [k, v] : r.verdicts) std::cout << k << ": " << v << "\n";
  for (const auto& [k, v] : r.counters) std::cout << "  " << k << " = " << v << "\n";
  std::cout << "wall-time-ms: " << std::fixed << std::setprecision(2) << wall_ms << "\n";
}

std::string describe_budget(std::size_t budget) {
  return budget == 0 ? std::string("default") : std::to_string(budget);
}

std::string describe_composition(const dcfl::LanguagePtr& spec) {
  if (!spec) return "none";
  const dcfl::Composition c = classify(*spec);
  switch (c.kind) {
    case dcfl::CompositionKind::Regular:
      return "regular";
    case dcfl::CompositionKind::Component:
      return "one component";
    case dcfl::CompositionKind::DUnion:
      return "union of " + std::to_string(c.degree);
    case dcfl::CompositionKind::DIntersection:
      return "intersection of " + std::to_string(c.degree);
    case dcfl::CompositionKind::Unknown:
      break;
  }
  return "unclassified";
}

// ---------------------------------------------------------------------------

int cmd_run(Report& r, bool as_json, const std::string& file, const std::string& input_text) {
  Timer timer;
  const Word input = parse_word_arg(input_text);
  const dcfl::Dpda m = dcfl::load_dpda_file(file);
  dcfl::RunOptions opts;
  opts.budget = env_budget();
  opts.collect_trace = false;
  r.param("machine", file);
  r.param("states", m.size());
  r.param("input", show(input));
  r.param("budget", describe_budget(opts.budget));

  const dcfl::RunOutcome out = dcfl::run(m, input, opts);
  r.verdict("verdict", out.accepted ? "accept" : "reject");
  r.count("steps", out.steps);
  r.count("final-stack-height", out.final_stack.size());
  emit(r, as_json, timer.ms());
  return out.accepted ? 0 : 1;
}

int cmd_analyze(Report& r, bool as_json, const std::string& file,
                const std::string& input_text) {
  Timer timer;
  const Word input = parse_word_arg(input_text);
  const dcfl::Dpda m = dcfl::load_dpda_file(file);
  const std::size_t budget = env_budget();
  r.param("machine", file);
  r.param("input", show(input));
  r.param("budget", describe_budget(budget));

  const dcfl::ShapeReport shape = dcfl::check_ideal_shape(m);
  if (!shape.ok()) {
    for (const std::string& v : shape.violations) r.detail("shape violation: " + v);
    r.verdict("verdict", "refused: the machine is outside the restricted move shape");
    emit(r, as_json, timer.ms());
    return 2;
  }

  const dcfl::Dpda enhanced = dcfl::epsilon_enhance(m);
  const Word induced = dcfl::induce(m, input, budget);
  r.param("silent-steps-marked", show(induced));

  dcfl::RunOptions opts;
  opts.budget = budget;
  opts.collect_trace = false;
  const dcfl::RunOutcome out = dcfl::run(m, input, opts);

  bool have_history = false;
  try {
    const dcfl::StackHistory hist = dcfl::record_history(enhanced, induced, budget);
    have_history = true;
    const std::vector<std::size_t> h = hist.heights();
    std::ostringstream profile;
    for (std::size_t i = 0; i < h.size(); ++i) profile << (i ? " " : "") << h[i];
    r.detail("height profile: " + profile.str());

    const auto hills = dcfl::find_hills(h);
    for (const auto& hill : hills)
      r.detail("hill: boundaries [" + std::to_string(hill.begin) + ", " +
               std::to_string(hill.end) + "]");
    try {
      const auto turns = dcfl::turn_partition(h, 0, h.size() - 1);
      for (const auto& t : turns)
        r.detail("turn: [" + std::to_string(t.begin) + ", " + std::to_string(t.end) +
                 "] summit " + std::to_string(t.summit) + " gain " + std::to_string(t.gain));
      r.count("turns", turns.size());
    } catch (const dcfl::Error&) {
      r.detail("turns: none (no climb in the profile)");
      r.count("turns", 0);
    }
    r.count("boundaries", hist.boundaries());
    r.count("hills", hills.size());
    r.count("peaks", dcfl::find_peaks(h).size());
    r.count("pits", dcfl::find_pits(h).size());
    r.count("good-pairs", dcfl::find_good_pairs(hist).size());
  } catch (const dcfl::Error& e) {
    if (e.kind() != dcfl::ErrorKind::BadParameter) throw;
  }
  if (!have_history)
    r.detail("stack history: unavailable (the run halts before the end marker)");

  r.verdict("verdict", out.accepted ? "accept" : "reject");
  r.count("steps", out.steps);
  emit(r, as_json, timer.ms());
  return out.accepted ? 0 : 1;
}

int cmd_pump(Report& r, bool as_json, const std::string& file, const std::string& fact_text,
             std::size_t i_max) {
  Timer timer;
  std::vector<std::string> parts;
  std::string piece;
  std::istringstream in(fact_text);
  while (std::getline(in, piece, ',')) parts.push_back(piece);
  if (!fact_text.empty() && fact_text.back() == ',') parts.push_back("");
  if (parts.size() != 5)
    throw dcfl::Error(dcfl::ErrorKind::BadParameter,
                      "a factorization is five comma-separated parts; spell empty parts \"" +
                          std::string(kEpsilonToken) + "\"");
  dcfl::Factorization f;
  f.u = parse_word_arg(parts[0]);
  f.x = parse_word_arg(parts[1]);
  f.v = parse_word_arg(parts[2]);
  f.y = parse_word_arg(parts[3]);
  f.z = parse_word_arg(parts[4]);

  const dcfl::Dpda m = dcfl::load_dpda_file(file);
  const auto spec = dcfl::LanguageSpec::dpda(m);
  const std::size_t budget = env_budget();
  r.param("machine", file);
  r.param("u|x|v|y|z",
          show(f.u) + " | " + show(f.x) + " | " + show(f.v) + " | " + show(f.y) + " | " +
              show(f.z));
  r.param("whole", show(f.whole()));
  r.param("i-max", i_max);

  const auto member = [&](const Word& w) { return spec->member(w, budget); };
  const dcfl::PumpReport pr = dcfl::pump_test(member, f, i_max);
  if (pr.ok) {
    r.verdict("verdict", "passes: u x^i v y^i z stays in the language for i = 0.." +
                             std::to_string(i_max));
    r.count("strings-checked", i_max + 1);
  } else {
    r.verdict("verdict", "fails at i = " + std::to_string(pr.failed_at) + ": " +
                             show(pr.failed_word) + " is not a member");
    r.count("strings-checked", pr.failed_at + 1);
  }
  emit(r, as_json, timer.ms());
  return pr.ok ? 0 : 1;
}

std::size_t three_way_splits(std::size_t length) {
  return (length + 1) * (length + 2) / 2;
}

void describe_split(Report& r, const dcfl::SplitWitness& split) {
  if (split.which == dcfl::SplitKind::PrefixInterleaved) {
    r.detail("split kind: five-way prefix split, pumping (x2, x4)");
    r.detail("x-parts: " + show(split.x_parts[0]) + " | " + show(split.x_parts[1]) + " | " +
             show(split.x_parts[2]) + " | " + show(split.x_parts[3]) + " | " +
             show(split.x_parts[4]));
    return;
  }
  r.detail("split kind: prefix window with synced suffix splits, pumping (x2, y2) and (x2, z2)");
  r.detail("x-parts: " + show(split.x_parts[0]) + " | " + show(split.x_parts[1]) + " | " +
           show(split.x_parts[2]));
  r.detail("y-parts: " + show(split.y_parts[0]) + " | " + show(split.y_parts[1]) + " | " +
           show(split.y_parts[2]));
  r.detail("z-parts: " + show(split.z_parts[0]) + " | " + show(split.z_parts[1]) + " | " +
           show(split.z_parts[2]));
}

int cmd_refute(Report& r, bool as_json, const std::string& name, std::size_t c,
               std::size_t i_max) {
  Timer timer;
  std::string entry_name = name;
  std::optional<std::size_t> requested_arity;
  if (const auto dash = name.find_last_of('-');
      dash != std::string::npos && dash + 1 < name.size()) {
    const std::string tail = name.substr(dash + 1);
    if (tail.find_first_not_of("0123456789") == std::string::npos) {
      entry_name = name.substr(0, dash);
      requested_arity = std::stoul(tail);
    }
  }
  std::size_t d = 0;
  if (entry_name == "L2-union")
    d = 2;
  else if (entry_name == "L3-union")
    d = 3;
  else
    throw dcfl::Error(dcfl::ErrorKind::BadParameter,
                      "refutation instances are catalogued for L2-union and L3-union only; "
                      "append -k to test expressibility as a k-union");
  const std::size_t arity = requested_arity.value_or(d - 1);
  if (arity < 1 || arity > d)
    throw dcfl::Error(dcfl::ErrorKind::BadParameter,
                      "hypothesis arity must be between 1 and " + std::to_string(d));

  const dcfl::ZooEntry entry = dcfl::build_entry("l-union", {.d = static_cast<int>(d)});
  const std::size_t n = c + 1;
  const std::size_t budget = env_budget();
  r.param("entry", entry_name + " (" + describe_composition(entry.spec) + ")");
  r.param("hypothesis", "expressible as a union of " + std::to_string(arity));
  r.param("c", c);
  r.param("n", n);
  r.param("i-max", i_max);
  r.param("budget", describe_budget(budget));

  if (arity == d) {
    // The hypothesis matches the catalogued arity, so the guaranteed-witness
    // search applies: d+1 member suffixes force two indices into the same
    // component.
    std::vector<Word> ys;
    for (std::size_t j = 1; j <= d; ++j) ys.push_back(Word(j * n, U'b'));
    ys.push_back(Word(n, U'b'));
    dcfl::SharedPrefixFamily family{*entry.spec, c, Word(n, U'a'), ys, i_max, budget};
    for (std::size_t j = 0; j < family.ys.size(); ++j)
      r.detail("string " + std::to_string(j + 1) + ": " + show(family.x + family.ys[j]));

    const auto witness = dcfl::shared_prefix_witness_search(family);
    if (witness) {
      r.detail("x' = " + show(witness->x_prime) + ", y = " + show(witness->y) +
               ", z = " + show(witness->z));
      describe_split(r, witness->split);
      r.verdict("verdict", "witness found on suffix pair (" + std::to_string(witness->j1 + 1) +
                               ", " + std::to_string(witness->j2 + 1) + ")");
      emit(r, as_json, timer.ms());
      return 1;
    }
    r.verdict("verdict", "no witness found at these bounds");
    emit(r, as_json, timer.ms());
    return 0;
  }

  // Proof-mirroring instance against a smaller arity: for every suffix pair
  // the pinned split isolates one b, and both split searches must come up
  // empty.
  std::uint64_t searched = 0;
  for (std::size_t j = 1; j <= arity; ++j) {
    for (std::size_t k = j + 1; k <= arity + 1; ++k) {
      const Word x_prime = Word(n, U'a') + Word(j * n - 1, U'b');
      const Word y(1, U'b');
      const Word z((k - j) * n + 1, U'b');
      r.detail("pair (" + std::to_string(j) + ", " + std::to_string(k) + "): x' = " +
               show(x_prime) + ", y = " + show(y) + ", z = " + show(z));

      const auto interleaved =
          dcfl::prefix_interleaved_split(*entry.spec, x_prime, y, z, c, i_max, budget);
      const auto synced =
          dcfl::prefix_suffix_synced_split(*entry.spec, x_prime, y, z, c, i_max, budget);
      searched += dcfl::count_interleaved_splits(x_prime.size(), c);
      searched += dcfl::count_window_splits(x_prime.size(), c) * three_way_splits(y.size()) *
                  three_way_splits(z.size());
      if (interleaved || synced) {
        describe_split(r, interleaved ? *interleaved : *synced);
        r.verdict("verdict", "witness found; the hypothesis survives at these bounds");
        emit(r, as_json, timer.ms());
        return 1;
      }
    }
  }
  r.verdict("verdict",
            "no witness found; search exhausted " + std::to_string(searched) + " factorizations");
  r.count("factorizations", searched);
  emit(r, as_json, timer.ms());
  return 0;
}

int cmd_zoo_list(Report& r, bool as_json) {
  Timer timer;
  const auto entries = dcfl::standard_entries();
  for (const auto& e : entries) {
    std::ostringstream line;
    line << e.name << ": alphabet " << dcfl::to_utf8(e.alphabet) << ", machines "
         << describe_composition(e.spec) << ", check length " << e.validation_length << " -- "
         << e.description;
    r.detail(line.str());
  }
  r.verdict("verdict", "catalogue holds " + std::to_string(entries.size()) + " entries");
  r.count("entries", entries.size());
  emit(r, as_json, timer.ms());
  return 0;
}

int cmd_zoo_validate(Report& r, bool as_json, const std::string& name, std::size_t max_len) {
  Timer timer;
  r.param("entry", name.empty() ? "all" : name);
  r.param("max-length", max_len == 0 ? "per-entry default" : std::to_string(max_len));

  std::vector<dcfl::ZooEntry> entries;
  for (auto& e : dcfl::standard_entries())
    if (name.empty() || e.name == name) entries.push_back(std::move(e));
  if (entries.empty())
    throw dcfl::Error(dcfl::ErrorKind::BadParameter, "no zoo entry named " + name);

  std::uint64_t strings = 0;
  std::uint64_t bad = 0;
  std::uint64_t skipped = 0;
  for (const auto& e : entries) {
    if (!e.spec) {
      r.detail(e.name + ": predicate only, nothing to cross-check");
      ++skipped;
      continue;
    }
    const dcfl::AgreementReport rep = dcfl::cross_validate(e, max_len);
    strings += rep.checked;
    if (rep.ok()) {
      r.detail(e.name + ": predicate and machines agree on " + std::to_string(rep.checked) +
               " strings");
      continue;
    }
    ++bad;
    const auto& dis = rep.disagreements.front();
    r.detail(e.name + ": DISAGREES on " + show(dis.input) + " (predicate " +
             (dis.predicate_value ? "yes" : "no") + ", machines " +
             (dis.spec_value ? "yes" : "no") + "; " + std::to_string(rep.disagreements.size()) +
             " total)");
  }
  r.verdict("verdict", bad == 0 ? "all checked entries agree"
                                : std::to_string(bad) + " entries disagree");
  r.count("entries-checked", entries.size() - skipped);
  r.count("entries-skipped", skipped);
  r.count("strings-checked", strings);
  emit(r, as_json, timer.ms());
  return bad == 0 ? 0 : 1;
}

int cmd_zoo_witness(Report& r, bool as_json, const std::string& family, int d, int k, int n) {
  Timer timer;
  dcfl::ZooParams params;
  params.d = d;
  params.k = k;
  params.n = n;
  r.param("family", family);
  r.param("d", static_cast<std::uint64_t>(d));
  r.param("k", static_cast<std::uint64_t>(k));
  r.param("n", static_cast<std::uint64_t>(n));
  const auto strings = dcfl::witness_strings(family, params);
  for (std::size_t i = 0; i < strings.size(); ++i)
    r.detail("w" + std::to_string(i + 1) + " = " + show(strings[i]));
  r.verdict("verdict", std::to_string(strings.size()) + " witness strings");
  r.count("strings", strings.size());
  emit(r, as_json, timer.ms());
  return 0;
}

int cmd_lda_run(Report& r, bool as_json, const std::string& file,
                const std::string& input_text) {
  Timer timer;
  const Word input = parse_word_arg(input_text);
  const dcfl::Lda m = dcfl::load_lda_file(file);
  const std::size_t budget = env_budget();
  r.param("machine", file);
  r.param("rewrite-limit", m.limit());
  r.param("input", show(input));
  r.param("budget", describe_budget(budget));

  const dcfl::LdaOutcome out = dcfl::run_lda(m, input, budget);
  r.detail("final tape: " + dcfl::to_utf8(out.final_tape));
  r.verdict("verdict", out.accepted ? "accept" : "reject");
  r.verdict("visit-discipline",
            dcfl::visit_discipline_check(m, out.trace) ? "respected" : "violated");
  r.count("steps", out.steps);
  emit(r, as_json, timer.ms());
  return out.accepted ? 0 : 1;
}

int cmd_lda_validate(Report& r, bool as_json, const std::string& file) {
  Timer timer;
  r.param("machine", file);
  try {
    const dcfl::Lda m = dcfl::load_lda_file(file);
    r.verdict("verdict", "well formed");
    r.count("states", m.size());
    r.count("rewrite-limit", m.limit());
    emit(r, as_json, timer.ms());
    return 0;
  } catch (const dcfl::Error& e) {
    if (e.kind() != dcfl::ErrorKind::MalformedMachine) throw;
    r.detail(e.what());
    r.verdict("verdict", "malformed");
    emit(r, as_json, timer.ms());
    return 1;
  }
}

const dcfl::DpdaFamily& named_family(const std::string& name) {
  static const dcfl::DpdaFamily pal = dcfl::pal_family_spec();
  if (name == pal.name) return pal;
  throw dcfl::Error(dcfl::ErrorKind::BadParameter, "no machine family named " + name);
}

int cmd_family_member(Report& r, bool as_json, const std::string& name,
                      const std::string& input_text) {
  Timer timer;
  const dcfl::DpdaFamily& family = named_family(name);
  const Word input = parse_word_arg(input_text);
  const std::size_t cutoff = family.mu(input.size());
  r.param("family", family.name);
  r.param("input", show(input));
  r.param("machines-consulted", "indices 0.." + std::to_string(cutoff));

  const bool member = dcfl::mu_bounded_member(family, input, env_budget());
  r.verdict("verdict", member ? "member" : "non-member");
  r.count("machines", cutoff + 1);
  emit(r, as_json, timer.ms());
  return member ? 0 : 1;
}

int cmd_family_size(Report& r, bool as_json, const std::string& name, std::size_t n_max) {
  Timer timer;
  const dcfl::DpdaFamily& family = named_family(name);
  std::ostringstream bound_text;
  for (std::size_t i = 0; i < family.size_bound.size(); ++i) {
    if (i) bound_text << " + ";
    bound_text << family.size_bound[i];
    if (i == 1) bound_text << "*n";
    if (i > 1) bound_text << "*n^" << i;
  }
  r.param("family", family.name);
  r.param("n-max", n_max);
  r.param("declared-bound", bound_text.str());

  bool all_within = true;
  std::size_t first_over = 0;
  for (std::size_t i = 0; i <= n_max; ++i) {
    const std::size_t size = dcfl::des(family.generator(i));
    const std::size_t bound = dcfl::eval_poly(family.size_bound, i);
    std::ostringstream row;
    row << "n = " << std::setw(3) << i << "   des = " << std::setw(8) << size
        << "   bound = " << std::setw(8) << bound;
    r.detail(row.str());
    if (size > bound && all_within) {
      all_within = false;
      first_over = i;
    }
  }
  r.verdict("verdict", all_within
                           ? "every description size stays within the declared bound"
                           : "bound exceeded first at n = " + std::to_string(first_over));
  r.count("machines-measured", n_max + 1);
  emit(r, as_json, timer.ms());
  return all_within ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  std::ostringstream echo;
  for (int i = 1; i < argc; ++i) echo << (i > 1 ? " " : "") << argv[i];

  CLI::App app{
      "Workbench for deterministic context-free languages: run and analyze stack machines, "
      "certify or refute pumping factorizations, cross-validate the language catalogue, and "
      "exercise two-way and family-based recognizers."};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit the report as JSON instead of text");

  std::string machine_file, input_text, fact_text, zoo_name, witness_family, family_name;
  std::size_t i_max = 5, refute_i_max = 3, c = 4, max_len = 0, n_max = 16;
  int param_d = 2, param_k = 2, param_n = 4;

  auto* run_cmd = app.add_subcommand("run", "run a stack machine on one input");
  run_cmd->add_option("machine", machine_file, "machine definition file")->required();
  run_cmd->add_option("input", input_text, "input word (ε for empty)")->required();

  auto* analyze_cmd = app.add_subcommand(
      "analyze", "run a restricted-shape machine and report its stack history");
  analyze_cmd->add_option("machine", machine_file, "machine definition file")->required();
  analyze_cmd->add_option("input", input_text, "input word (ε for empty)")->required();

  auto* pump_cmd =
      app.add_subcommand("pump", "check a five-part factorization against a machine's language");
  pump_cmd->add_option("machine", machine_file, "machine definition file")->required();
  pump_cmd->add_option("factorization", fact_text, "u,x,v,y,z with ε for empty parts")
      ->required();
  pump_cmd->add_option("--imax", i_max, "largest pump exponent tried")->capture_default_str();

  auto* refute_cmd = app.add_subcommand(
      "refute",
      "search the pinned proof strings of a catalogued union language for pumping "
      "factorizations; exit 0 when the search comes up empty");
  refute_cmd->add_option("name", zoo_name, "entry, optionally with -k for the hypothesis arity")
      ->required();
  refute_cmd->add_option("--c", c, "pumping constant for the split windows")
      ->capture_default_str();
  refute_cmd->add_option("--imax", refute_i_max, "largest pump exponent tried")
      ->capture_default_str();

  auto* zoo_cmd = app.add_subcommand("zoo", "catalogue of benchmark languages");
  zoo_cmd->require_subcommand(1);
  zoo_cmd->add_subcommand("list", "print every catalogue entry");
  auto* zoo_validate_cmd =
      zoo_cmd->add_subcommand("validate", "cross-check predicates against machine specs");
  zoo_validate_cmd->add_option("entry", zoo_name, "entry name; all entries when omitted");
  zoo_validate_cmd->add_option("--max-len", max_len, "override the per-entry check length");
  auto* zoo_witness_cmd =
      zoo_cmd->add_subcommand("witness", "print the membership-argument strings of a family");
  zoo_witness_cmd
      ->add_option("family", witness_family,
                   "l-union, ld-gt, npal-match, pal-blocks, hibbard-quadruple or hibbard-chain")
      ->required();
  zoo_witness_cmd->add_option("--d", param_d, "pair count / union width")->capture_default_str();
  zoo_witness_cmd->add_option("--k", param_k, "chain length / block count")
      ->capture_default_str();
  zoo_witness_cmd->add_option("--n", param_n, "block scale")->capture_default_str();

  auto* lda_cmd = app.add_subcommand("lda", "two-way machines with per-cell rewrite limits");
  lda_cmd->require_subcommand(1);
  auto* lda_run_cmd = lda_cmd->add_subcommand("run", "run a two-way machine on one input");
  lda_run_cmd->add_option("machine", machine_file, "machine definition file")->required();
  lda_run_cmd->add_option("input", input_text, "input word (ε for empty)")->required();
  auto* lda_validate_cmd =
      lda_cmd->add_subcommand("validate", "check layer discipline and table totality");
  lda_validate_cmd->add_option("machine", machine_file, "machine definition file")->required();

  auto* family_cmd =
      app.add_subcommand("family", "indexed machine families with membership cutoffs");
  family_cmd->require_subcommand(1);
  auto* family_member_cmd =
      family_cmd->add_subcommand("member", "test cutoff-bounded intersection membership");
  family_member_cmd->add_option("--name", family_name, "family name")->required();
  family_member_cmd->add_option("--input", input_text, "input word (ε for empty)")->required();
  auto* family_size_cmd =
      family_cmd->add_subcommand("size", "tabulate description sizes against the declared bound");
  family_size_cmd->add_option("--name", family_name, "family name")->required();
  family_size_cmd->add_option("--n-max", n_max, "largest index tabulated")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Report report;
  report.command = echo.str();
  try {
    if (run_cmd->parsed()) return cmd_run(report, as_json, machine_file, input_text);
    if (analyze_cmd->parsed()) return cmd_analyze(report, as_json, machine_file, input_text);
    if (pump_cmd->parsed()) return cmd_pump(report, as_json, machine_file, fact_text, i_max);
    if (refute_cmd->parsed()) return cmd_refute(report, as_json, zoo_name, c, refute_i_max);
    if (zoo_cmd->parsed()) {
      if (zoo_cmd->get_subcommand("list")->parsed()) return cmd_zoo_list(report, as_json);
      if (zoo_validate_cmd->parsed())
        return cmd_zoo_validate(report, as_json, zoo_name, max_len);
      return cmd_zoo_witness(report, as_json, witness_family, param_d, param_k, param_n);
    }
    if (lda_cmd->parsed()) {
      if (lda_run_cmd->parsed()) return cmd_lda_run(report, as_json, machine_file, input_text);
      return cmd_lda_validate(report, as_json, machine_file);
    }
    if (family_cmd->parsed()) {
      if (family_member_cmd->parsed())
        return cmd_family_member(report, as_json, family_name, input_text);
      return cmd_family_size(report, as_json, family_name, n_max);
    }
  } catch (const dcfl::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
