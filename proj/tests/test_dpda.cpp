#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dcfl/dpda.hpp"

using namespace dcfl;

namespace {

// Classic one-counter machine for { a^n b^n : n >= 0 }: pushes A per a, pops
// per b, accepts on $ with a bare bottom marker.
Dpda make_anbn() {
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

}  // namespace

TEST_SUITE("dpda") {
  TEST_CASE("utf8 round trip") {
    Word w = lit("a¢·$z");
    CHECK_EQ(w.size(), 5);
    CHECK_EQ(to_utf8(w), "a¢·$z");
    CHECK_THROWS_AS(from_utf8("\xC3"), std::invalid_argument);
    CHECK_THROWS_AS(from_utf8("\x80"), std::invalid_argument);
  }

  TEST_CASE("anbn accepts and rejects") {
    Dpda m = make_anbn();
    CHECK(validate(m).ok());
    CHECK(accepts(m, U""));
    CHECK(accepts(m, U"ab"));
    CHECK(accepts(m, U"aabb"));
    CHECK(accepts(m, U"aaaaabbbbb"));
    CHECK_FALSE(accepts(m, U"a"));
    CHECK_FALSE(accepts(m, U"b"));
    CHECK_FALSE(accepts(m, U"ba"));
    CHECK_FALSE(accepts(m, U"aab"));
    CHECK_FALSE(accepts(m, U"abb"));
    CHECK_FALSE(accepts(m, U"abab"));
    CHECK_FALSE(accepts(m, U"aabbb"));
  }

  TEST_CASE("input outside the alphabet rejects without stepping") {
    Dpda m = make_anbn();
    RunOutcome out = run(m, U"ac");
    CHECK_FALSE(out.accepted);
    CHECK_EQ(out.steps, 0);
  }

  TEST_CASE("aabb stack profile") {
    Dpda m = make_anbn();
    RunOutcome out = run(m, U"aabb");
    CHECK(out.accepted);
    REQUIRE_EQ(out.trace.size(), 6);
    std::vector<std::size_t> heights{1};
    for (const Move& mv : out.trace) heights.push_back(mv.stack_after.size());
    CHECK_EQ(heights, std::vector<std::size_t>{1, 1, 2, 3, 2, 1, 1});
    CHECK_EQ(out.trace[2].stack_after, U"AAZ");
    CHECK_EQ(out.final_stack, U"Z");
  }

  TEST_CASE("default budget formula") {
    Dpda m = make_anbn();
    CHECK_EQ(m.push_size(), 2);
    CHECK_EQ(default_budget(m, 4), 10 * 6 * (1 + 2 * 6));
    CHECK_EQ(default_budget(m, 1000), 1000000);
  }

  TEST_CASE("complement swaps verdicts") {
    Dpda m = complement(make_anbn());
    CHECK(validate(m).ok());
    CHECK_FALSE(accepts(m, U"aabb"));
    CHECK(accepts(m, U"aab"));
    CHECK(accepts(m, U"ba"));
  }

  TEST_CASE("validation rejects mixed epsilon and read moves") {
    DpdaBuilder b(U"a", U"Z", U'Z');
    b.initial("q").accept("yes").reject("no");
    b.eps("q", U'Z', "yes", U"Z");
    b.step("q", U'a', U'Z', "no", U"Z");
    CHECK_THROWS_AS(b.build(), Error);
    Dpda raw;
    raw.state_names = {"q", "yes"};
    raw.input_alphabet = U"a";
    raw.stack_alphabet = U"Z";
    raw.accept_states = {1};
    raw.transitions[{0, std::nullopt, U'Z'}] = {1, U"Z"};
    raw.transitions[{0, U'a', U'Z'}] = {1, U"Z"};
    ValidationReport rep = validate(raw);
    CHECK_FALSE(rep.ok());
  }

  TEST_CASE("validation rejects incomplete read coverage") {
    Dpda raw;
    raw.state_names = {"q", "yes"};
    raw.input_alphabet = U"ab";
    raw.stack_alphabet = U"Z";
    raw.accept_states = {1};
    raw.transitions[{0, U'a', U'Z'}] = {1, U"Z"};
    ValidationReport rep = validate(raw);
    REQUIRE_FALSE(rep.ok());
    bool mentions_missing = false;
    for (const auto& e : rep.errors)
      if (e.find("lack moves") != std::string::npos) mentions_missing = true;
    CHECK(mentions_missing);
  }

  TEST_CASE("validation guards the bottom marker") {
    Dpda raw;
    raw.state_names = {"q", "halt"};
    raw.input_alphabet = U"";
    raw.stack_alphabet = U"AZ";
    raw.accept_states = {1};
    SUBCASE("erasing it") { raw.transitions[{0, std::nullopt, U'Z'}] = {1, U""}; }
    SUBCASE("burying it") { raw.transitions[{0, std::nullopt, U'Z'}] = {1, U"ZAZ"}; }
    SUBCASE("duplicating it above") { raw.transitions[{0, std::nullopt, U'A'}] = {1, U"ZA"}; }
    CHECK_FALSE(validate(raw).ok());
  }

  TEST_CASE("validation forbids moves out of halting states") {
    Dpda raw;
    raw.state_names = {"q", "halt"};
    raw.input_alphabet = U"";
    raw.stack_alphabet = U"Z";
    raw.accept_states = {1};
    raw.transitions[{0, std::nullopt, U'Z'}] = {1, U"Z"};
    raw.transitions[{1, std::nullopt, U'Z'}] = {0, U"Z"};
    CHECK_FALSE(validate(raw).ok());
  }

  TEST_CASE("runaway machines exhaust the budget") {
    DpdaBuilder b(U"", U"Z", U'Z');
    b.initial("spin");
    b.eps("spin", U'Z', "spin", U"Z");
    b.state("spin");
    b.accept("ghost");  // unreachable, keeps the accept set nonempty
    Dpda m = b.build();
    CHECK_THROWS_AS(run(m, U""), Error);
    try {
      run(m, U"");
    } catch (const Error& e) {
      CHECK_EQ(e.kind(), ErrorKind::BudgetExhausted);
    }
  }

  TEST_CASE("trace collection is optional") {
    Dpda m = make_anbn();
    RunOptions opts;
    opts.collect_trace = false;
    RunOutcome out = run(m, U"aabb", opts);
    CHECK(out.accepted);
    CHECK(out.trace.empty());
    CHECK_EQ(out.steps, 6);
  }
}
