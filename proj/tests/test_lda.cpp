#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dcfl/dpda.hpp"
#include "dcfl/errors.hpp"
#include "dcfl/lda.hpp"
#include "dcfl/machine_io.hpp"
#include "dcfl/symbols.hpp"

using namespace dcfl;

namespace {

bool is_anbn(const Word& w) {
  std::size_t n = 0;
  while (n < w.size() && w[n] == U'a') ++n;
  for (std::size_t i = n; i < w.size(); ++i)
    if (w[i] != U'b') return false;
  return w.size() == 2 * n;
}

Dpda make_anbn_dpda() {
  DpdaBuilder b(U"ab", U"AZ", U'Z');
  b.initial("start").accept("yes").reject("no");
  b.step("start", kLeftMarker, U'Z', "as", U"Z");
  b.step("as", U'a', U'Z', "as", U"AZ");
  b.step("as", U'a', U'A', "as", U"AA");
  b.step("as", U'b', U'A', "bs", U"");
  b.step("bs", U'b', U'A', "bs", U"");
  b.step("as", kRightMarker, U'Z', "yes", U"Z");
  b.step("bs", kRightMarker, U'Z', "yes", U"Z");
  b.fill_rejects("no");
  return b.build();
}

// Total one-state machine that walks right forever.
Lda make_runaway(int first_dir) {
  Lda m;
  m.state_names = {"go"};
  m.layers = {U"a", Word() + kLeftMarker + kRightMarker + U"A"};
  m.initial = 0;
  m.transitions[{0, kLeftMarker}] = {0, kLeftMarker, first_dir};
  m.transitions[{0, U'a'}] = {0, U'A', +1};
  m.transitions[{0, U'A'}] = {0, U'A', +1};
  m.transitions[{0, kRightMarker}] = {0, kRightMarker, +1};
  return m;
}

}  // namespace

TEST_SUITE("two-way layered machines") {
  TEST_CASE("zigzag machine is well formed") {
    Lda m = make_zigzag_anbn();
    CHECK(validate_lda(m).ok());
    CHECK(m.limit() == 2);
    CHECK(m.layer_of(U'a') == 0);
    CHECK(m.layer_of(U'A') == 1);
    CHECK(m.layer_of(U'X') == 2);
    CHECK(m.layer_of(kRightMarker) == 2);
    CHECK(!m.layer_of(U'q').has_value());
  }

  TEST_CASE("prescribed layer steps cap at the top") {
    CHECK(next_layer(0, +1, 2) == 1);
    CHECK(next_layer(0, -1, 2) == 2);
    CHECK(next_layer(1, +1, 2) == 2);
    CHECK(next_layer(1, -1, 2) == 2);
    CHECK(next_layer(1, +1, 3) == 3);
    CHECK(next_layer(1, -1, 3) == 2);
    CHECK(next_layer(2, +1, 4) == 3);
    CHECK(next_layer(2, -1, 4) == 4);
    CHECK(next_layer(3, +1, 4) == 4);
    CHECK(next_layer(3, -1, 4) == 4);
  }

  TEST_CASE("writes must climb to the prescribed layer") {
    Lda m = make_zigzag_anbn();
    const StateId scan = m.state_id("scan");
    const StateId match = m.state_id("match");

    SUBCASE("layer 0 symbol over a layer 1 cell") {
      m.transitions[{match, U'A'}] = {scan, U'a', +1};
      ValidationReport rep = validate_lda(m);
      CHECK(!rep.ok());
      CHECK(rep.joined().find("layer") != std::string::npos);
    }
    SUBCASE("under-lifting a layer 0 cell on a leftward move") {
      m.transitions[{scan, U'b'}] = {match, U'A', -1};
      CHECK(!validate_lda(m).ok());
    }
    SUBCASE("rewriting an end marker") {
      m.transitions[{scan, kRightMarker}] = {m.state_id("verify"), U'X', -1};
      ValidationReport rep = validate_lda(m);
      CHECK(!rep.ok());
      CHECK(rep.joined().find("frozen") != std::string::npos);
    }
    SUBCASE("writing an end marker mid-tape") {
      m.transitions[{scan, U'b'}] = {match, kRightMarker, -1};
      ValidationReport rep = validate_lda(m);
      CHECK(!rep.ok());
      CHECK(rep.joined().find("marker") != std::string::npos);
    }
    SUBCASE("sideways direction") {
      m.transitions[{scan, U'a'}] = {scan, U'A', 0};
      CHECK(!validate_lda(m).ok());
    }
    SUBCASE("missing move") {
      m.transitions.erase({scan, U'a'});
      ValidationReport rep = validate_lda(m);
      CHECK(!rep.ok());
      CHECK(rep.joined().find("no move") != std::string::npos);
    }
    SUBCASE("overlapping layers") {
      m.layers[1] += U'a';
      CHECK(!validate_lda(m).ok());
    }
    SUBCASE("marker outside the top layer") {
      Lda runaway = make_runaway(+1);
      runaway.layers = {Word(U"a") + kLeftMarker, Word() + kRightMarker + U"A"};
      CHECK(!validate_lda(runaway).ok());
    }
  }

  TEST_CASE("zigzag run accepts balanced words") {
    Lda m = make_zigzag_anbn();
    LdaOutcome out = run_lda(m, U"aabb");
    CHECK(out.accepted);
    CHECK(out.steps == 19);
    CHECK(m.state_names[out.final_state] == "yes");
    CHECK(out.final_tape == Word() + kLeftMarker + U"XXYY" + kRightMarker);
    CHECK(out.trace.size() == out.steps);

    CHECK(run_lda(m, Word()).accepted);
    CHECK(run_lda(m, U"ab").accepted);
    for (const Word& bad : {Word(U"abba"), Word(U"aab"), Word(U"abb"), Word(U"aba"),
                            Word(U"ba"), Word(U"b"), Word(U"a")}) {
      LdaOutcome o = run_lda(m, bad);
      CHECK(!o.accepted);
      CHECK(m.state_names[o.final_state] == "no");
    }
  }

  TEST_CASE("agrees with the one-way stack machine up to length 10") {
    Lda two_way = make_zigzag_anbn();
    Dpda one_way = make_anbn_dpda();
    std::size_t checked = 0;
    enumerate_words(U"ab", 10, [&](const Word& w) {
      const bool expect = is_anbn(w);
      CHECK(run_lda(two_way, w).accepted == expect);
      CHECK(accepts(one_way, w) == expect);
      ++checked;
      return true;
    });
    CHECK(checked == 2047);
  }

  TEST_CASE("every real trace passes the visit discipline") {
    Lda m = make_zigzag_anbn();
    enumerate_words(U"ab", 8, [&](const Word& w) {
      LdaOutcome out = run_lda(m, w);
      CHECK(visit_discipline_check(m, out.trace));
      return true;
    });
  }

  TEST_CASE("visit discipline flags a rewrite past the limit") {
    Lda m = make_zigzag_anbn();
    CHECK(visit_discipline_check(m, {}));

    // Visits at cell 5: entered rightward, turned at 6 and re-entered, left
    // again, then entered a third time and rewritten.
    std::vector<LdaMove> trace;
    trace.push_back({0, 5, U'a', 0, U'A', +1, {}});
    trace.push_back({0, 6, U'a', 0, U'A', -1, {}});
    trace.push_back({0, 5, U'A', 0, U'X', -1, {}});
    trace.push_back({0, 4, U'a', 0, U'A', +1, {}});
    trace.push_back({0, 5, U'X', 0, U'Y', +1, {}});
    CHECK(!visit_discipline_check(m, trace));

    trace.back().write = U'X';  // leaving the cell alone is always fine
    CHECK(visit_discipline_check(m, trace));
  }

  TEST_CASE("budget exhaustion surfaces") {
    Lda m = make_zigzag_anbn();
    CHECK_THROWS_AS(run_lda(m, U"aabb", 3), Error);
    try {
      run_lda(m, U"aabb", 3);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::BudgetExhausted);
    }
    CHECK(default_lda_budget(4) == 1800);
  }

  TEST_CASE("foreign input symbols reject without stepping") {
    Lda m = make_zigzag_anbn();
    for (const Word& w : {Word(U"aqb"), Word(U"aXb")}) {
      LdaOutcome out = run_lda(m, w);
      CHECK(!out.accepted);
      CHECK(out.steps == 0);
      CHECK(out.trace.empty());
    }
  }

  TEST_CASE("running off either marker surfaces") {
    for (int first_dir : {+1, -1}) {
      Lda m = make_runaway(first_dir);
      REQUIRE(validate_lda(m).ok());
      try {
        run_lda(m, U"a");
        CHECK(false);
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::HeadOutOfTape);
      }
    }
  }

  TEST_CASE("json round trip preserves the machine") {
    Lda m = make_zigzag_anbn();
    Lda back = lda_from_json(lda_to_json(m));
    CHECK(back.state_names == m.state_names);
    CHECK(back.layers == m.layers);
    CHECK(back.transitions == m.transitions);
    CHECK(back.accept_states == m.accept_states);
    CHECK(run_lda(back, U"aaabbb").accepted);
    CHECK(!run_lda(back, U"aaabb").accepted);
  }

  TEST_CASE("json defects are reported") {
    Lda m = make_zigzag_anbn();
    std::string text = lda_to_json(m);

    auto expect_malformed = [](const std::string& body) {
      try {
        lda_from_json(body);
        CHECK(false);
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::MalformedMachine);
      }
    };
    expect_malformed("{not json");
    expect_malformed("{}");

    std::string no_dir = text;
    auto at = no_dir.find("\"dir\": 1");
    REQUIRE(at != std::string::npos);
    no_dir.replace(at, 8, "\"dir\": 0");
    expect_malformed(no_dir);
  }
}
