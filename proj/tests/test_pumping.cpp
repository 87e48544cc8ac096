#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "dcfl/pumping.hpp"

using namespace dcfl;
using boost::multiprecision::cpp_int;

namespace {

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

bool in_ratio_two(const Word& w) {
  std::size_t n = 0;
  while (n < w.size() && w[n] == U'a') ++n;
  for (std::size_t i = n; i < w.size(); ++i)
    if (w[i] != U'b') return false;
  const std::size_t m = w.size() - n;
  return m == n || m == 2 * n;
}

bool balanced_then_free(const Word& w) {
  std::size_t n = 0;
  while (n < w.size() && w[n] == U'a') ++n;
  std::size_t i = n;
  while (i < w.size() && w[i] == U'b') ++i;
  if (i - n != n) return false;
  for (std::size_t j = i; j < w.size(); ++j)
    if (w[j] != U'c' && w[j] != U'd') return false;
  return true;
}

bool one_block_reversed(const Word& w) {
  std::vector<Word> blocks(1);
  for (char32_t ch : w) {
    if (ch == U'#')
      blocks.emplace_back();
    else if (ch == U'0' || ch == U'1')
      blocks.back() += ch;
    else
      return false;
  }
  if (blocks.size() != 4) return false;
  auto rev = [](Word v) {
    std::reverse(v.begin(), v.end());
    return v;
  };
  return blocks[2] == rev(blocks[0]) || blocks[3] == rev(blocks[1]);
}

bool some_block_exceeds(const Word& w) {
  const Word order = U"aAbB";
  std::array<std::size_t, 4> count{};
  std::size_t phase = 0;
  for (char32_t ch : w) {
    const std::size_t at = order.find(ch);
    if (at == Word::npos || at < phase) return false;
    phase = at;
    ++count[at];
  }
  return count[0] > count[2] || count[1] > count[3];
}

MemberFn member_of(const LanguagePtr& spec) {
  return [spec](const Word& w) { return spec->member(w); };
}

void check_shape(const SplitWitness& w, const Word& x_prime, std::size_t c) {
  if (w.which == SplitKind::PrefixInterleaved) {
    Word joined;
    for (const Word& part : w.x_parts) joined += part;
    CHECK_EQ(joined, x_prime);
    CHECK(w.x_parts[1].size() + w.x_parts[3].size() >= 1);
    CHECK(w.x_parts[1].size() + w.x_parts[2].size() + w.x_parts[3].size() <= c);
  } else {
    CHECK_EQ(w.x_parts[0] + w.x_parts[1] + w.x_parts[2], x_prime);
    CHECK(!w.x_parts[1].empty());
    CHECK(w.x_parts[1].size() + w.x_parts[2].size() <= c);
  }
}

}  // namespace

TEST_SUITE("pumping") {
  TEST_CASE("split counts match their closed forms") {
    auto tetra = [](std::size_t s) { return (s + 1) * (s + 2) * (s + 3) / 6; };
    for (std::size_t len = 0; len <= 9; ++len)
      for (std::size_t c = 0; c <= 6; ++c) {
        std::size_t interleaved = 0;
        for (std::size_t a = 0; a <= len; ++a) {
          const std::size_t s = std::min(c, len - a);
          interleaved += tetra(s) - (s + 1);
        }
        CHECK_EQ(count_interleaved_splits(len, c), interleaved);
        const std::size_t m = std::min(c, len);
        CHECK_EQ(count_window_splits(len, c), m * (m + 1) / 2);
      }
    CHECK_EQ(count_interleaved_splits(7, 4), 145);
    CHECK_EQ(count_interleaved_splits(6, 10), 182);
    CHECK_EQ(count_window_splits(5, 4), 10);
    CHECK_EQ(count_window_splits(7, 3), 6);
  }

  TEST_CASE("interleaved split of a balanced pair") {
    auto spec = LanguageSpec::dpda(make_anbn());
    auto hit = prefix_interleaved_split(*spec, U"aaaaabb", U"bbb", U"bbb", 4, 3);
    REQUIRE(hit.has_value());
    CHECK(hit->which == SplitKind::PrefixInterleaved);
    std::array<Word, 5> want{U"aa", U"a", U"aa", U"b", U"b"};
    CHECK(hit->x_parts == want);
    check_shape(*hit, U"aaaaabb", 4);

    MemberFn fn = member_of(spec);
    Factorization in_y{hit->x_parts[0], hit->x_parts[1], hit->x_parts[2], hit->x_parts[3],
                       hit->x_parts[4] + U"bbb"};
    CHECK(pump_test(fn, in_y, 6).ok);

    auto again = prefix_interleaved_split(*spec, U"aaaaabb", U"bbb", U"bbb", 4, 3);
    REQUIRE(again.has_value());
    CHECK(again->x_parts == hit->x_parts);
  }

  TEST_CASE("synced split when the prefix is one block") {
    auto spec = LanguageSpec::dpda(make_anbn());
    CHECK_FALSE(prefix_interleaved_split(*spec, U"aaaaa", U"bbbbb", U"bbbbb", 4, 3).has_value());

    auto hit = prefix_suffix_synced_split(*spec, U"aaaaa", U"bbbbb", U"bbbbb", 4, 3);
    REQUIRE(hit.has_value());
    CHECK(hit->which == SplitKind::PrefixSuffixSynced);
    CHECK(hit->x_parts == std::array<Word, 5>{U"a", U"a", U"aaa", U"", U""});
    CHECK(hit->y_parts == std::array<Word, 3>{U"", U"b", U"bbbb"});
    CHECK(hit->z_parts == hit->y_parts);
    check_shape(*hit, U"aaaaa", 4);

    MemberFn fn = member_of(spec);
    Factorization in_y{hit->x_parts[0], hit->x_parts[1], hit->x_parts[2] + hit->y_parts[0],
                       hit->y_parts[1], hit->y_parts[2]};
    CHECK(pump_test(fn, in_y, 6).ok);
  }

  TEST_CASE("two-component mirror admits no split") {
    auto spec = LanguageSpec::predicate("a^n b^n or b^2n", in_ratio_two);
    CHECK_FALSE(prefix_interleaved_split(*spec, U"aaaaabbbb", U"b", U"bbbbbb", 4, 3).has_value());
    CHECK_FALSE(
        prefix_suffix_synced_split(*spec, U"aaaaabbbb", U"b", U"bbbbbb", 4, 3).has_value());
  }

  TEST_CASE("family search lands on the first colliding pair") {
    SharedPrefixFamily fam{LanguageSpec{PredicateLeaf{"a^n b^n or b^2n", in_ratio_two}},
                           4,
                           U"aaaaa",
                           {U"bbbbb", U"bbbbbbbbbb", U"bbbbb"},
                           3,
                           0};
    auto hit = shared_prefix_witness_search(fam);
    REQUIRE(hit.has_value());
    CHECK_EQ(hit->j1, 0);
    CHECK_EQ(hit->j2, 1);
    CHECK_EQ(hit->x_prime, U"aaaaa");
    CHECK_EQ(hit->y, U"bbbbb");
    CHECK_EQ(hit->z, U"bbbbbbbbbb");
    CHECK(hit->split.which == SplitKind::PrefixSuffixSynced);
    CHECK(hit->split.x_parts == std::array<Word, 5>{U"a", U"a", U"aaa", U"", U""});
    CHECK(hit->split.y_parts == std::array<Word, 3>{U"", U"b", U"bbbb"});
    CHECK(hit->split.z_parts == std::array<Word, 3>{U"", U"bb", U"bbbbbbbb"});
    CHECK_EQ(hit->x_prime + hit->y, fam.x + fam.ys[hit->j1]);
    CHECK_EQ(hit->x_prime + hit->z, fam.x + fam.ys[hit->j2]);

    auto again = shared_prefix_witness_search(fam);
    REQUIRE(again.has_value());
    CHECK_EQ(again->j1, hit->j1);
    CHECK(again->split.z_parts == hit->split.z_parts);
  }

  TEST_CASE("family search accepts suffixes of uneven length") {
    SharedPrefixFamily fam{LanguageSpec{DpdaLeaf{make_anbn()}},
                           4,
                           U"aaaaa",
                           {U"bbbbb", U"abbbbbb"},
                           3,
                           0};
    auto hit = shared_prefix_witness_search(fam);
    REQUIRE(hit.has_value());
    CHECK_EQ(hit->j1, 0);
    CHECK_EQ(hit->j2, 1);
    CHECK_EQ(hit->x_prime, U"aaaaa");
    CHECK(hit->split.which == SplitKind::PrefixSuffixSynced);
    CHECK(hit->split.z_parts == std::array<Word, 3>{U"a", U"b", U"bbbbb"});
  }

  TEST_CASE("searches reject bad instances") {
    auto spec = LanguageSpec::dpda(make_anbn());
    try {
      prefix_interleaved_split(*spec, U"aabb", U"b", U"b", 4, 3);
      FAIL("a prefix no longer than the constant must throw");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::BadParameter);
    }
    CHECK_THROWS_AS(prefix_suffix_synced_split(*spec, U"aaabb", U"bb", U"b", 2, 3), Error);

    SharedPrefixFamily one_suffix{LanguageSpec{DpdaLeaf{make_anbn()}}, 2, U"aaa", {U"bbb"}, 3, 0};
    CHECK_THROWS_AS(shared_prefix_witness_search(one_suffix), Error);
    SharedPrefixFamily short_x{LanguageSpec{DpdaLeaf{make_anbn()}}, 4, U"aa", {U"abbb", U"aabbbb"},
                               3, 0};
    CHECK_THROWS_AS(shared_prefix_witness_search(short_x), Error);
    SharedPrefixFamily empty_suffix{LanguageSpec{DpdaLeaf{make_anbn()}}, 2, U"aaabbb",
                                    {U"", U"abbbb"}, 3, 0};
    CHECK_THROWS_AS(shared_prefix_witness_search(empty_suffix), Error);
    SharedPrefixFamily non_member{LanguageSpec{DpdaLeaf{make_anbn()}}, 2, U"aaa",
                                  {U"bbb", U"bb"}, 3, 0};
    CHECK_THROWS_AS(shared_prefix_witness_search(non_member), Error);
  }

  TEST_CASE("five conditions on a compensating tail") {
    auto spec = LanguageSpec::predicate("a^n b^n then c|d", balanced_then_free);
    FiveConditionReport rep = five_condition_check(*spec, U"aabb", U"c", U"d");

    CHECK(rep.no_site.verdict == Verdict::FailsExhaustively);
    CHECK_EQ(rep.no_site.evidence.size(), 2);

    CHECK(rep.both_in_prefix.verdict == Verdict::HoldsWithWitness);
    REQUIRE_EQ(rep.both_in_prefix.evidence.size(), 2);
    MemberFn fn = member_of(spec);
    for (const PumpSite& site : rep.both_in_prefix.evidence) {
      Factorization f = site.factorization();
      CHECK(pump_test(fn, f, 2).ok);
      CHECK(nondegenerate_bounded(fn, f, 2, 2) == TriState::Yes);
    }
    CHECK(rep.crossing.verdict == Verdict::FailsExhaustively);
    CHECK(rep.paired_a.verdict == Verdict::FailsExhaustively);
    CHECK(rep.any_holds());
  }

  TEST_CASE("coinciding suffixes make the paired condition vacuous") {
    auto spec = LanguageSpec::predicate("a^n b^n then c|d", balanced_then_free);
    FiveConditionReport rep = five_condition_check(*spec, U"aabb", U"c", U"c");
    CHECK(rep.paired_a.verdict == Verdict::Vacuous);
    CHECK(rep.paired_b.verdict == Verdict::Vacuous);
    CHECK(rep.paired_verdict() == Verdict::Vacuous);
    CHECK_FALSE(rep.paired_a.note.empty());
    CHECK(rep.any_holds());

    CHECK_THROWS_AS(five_condition_check(*spec, U"aabb", U"", U"c"), Error);
    CHECK_THROWS_AS(five_condition_check(*spec, U"aabb", U"c", U"e"), Error);
  }

  TEST_CASE("five conditions on the reversed-block mirror") {
    auto spec = LanguageSpec::predicate("some block reversed", one_block_reversed);
    const Word x_prime = U"010#011#010";
    const Word y = U"#110111";
    const Word z = U"000#110";
    REQUIRE(spec->member(x_prime + y));
    REQUIRE(spec->member(x_prime + z));

    FiveConditionReport rep = five_condition_check(*spec, x_prime, y, z);

    CHECK(rep.no_site.verdict == Verdict::FailsExhaustively);
    REQUIRE_EQ(rep.no_site.evidence.size(), 2);
    MemberFn fn = member_of(spec);
    CHECK_EQ(rep.no_site.evidence[0].factorization().whole(), x_prime + y);
    CHECK_EQ(rep.no_site.evidence[1].factorization().whole(), x_prime + z);
    for (const PumpSite& site : rep.no_site.evidence) {
      Factorization f = site.factorization();
      CHECK(pump_test(fn, f, 2).ok);
      CHECK(nondegenerate_bounded(fn, f, 2, 2) == TriState::Yes);
    }

    CHECK(rep.both_in_prefix.verdict == Verdict::FailsExhaustively);
    CHECK(rep.both_in_prefix.nd_no > 0);
    CHECK(rep.crossing.verdict == Verdict::FailsExhaustively);
    CHECK(rep.border_a.verdict == Verdict::FailsExhaustively);
    CHECK(rep.border_b.verdict == Verdict::FailsExhaustively);
    CHECK(rep.border_c.verdict == Verdict::FailsExhaustively);
    CHECK(rep.border_verdict() == Verdict::FailsExhaustively);
    CHECK(rep.paired_a.verdict == Verdict::FailsExhaustively);
    CHECK(rep.paired_b.verdict == Verdict::FailsExhaustively);
    CHECK(rep.paired_verdict() == Verdict::FailsExhaustively);
    CHECK_FALSE(rep.any_holds());
    CHECK(rep.member_calls > 0);
  }

  TEST_CASE("window straddling two blocks defeats the per-block case split") {
    auto spec = LanguageSpec::predicate("a^n1 A^n2 b^m1 B^m2 with an excess", some_block_exceeds);
    const Word x_prime = U"aaaaaAAAAAAAAAAbbbb";
    const Word y = U"BBBBBBBBBB";
    const Word z = U"bBBBBBBBBB";
    REQUIRE(spec->member(x_prime + y));
    REQUIRE(spec->member(x_prime + z));

    CHECK_FALSE(prefix_suffix_synced_split(*spec, x_prime, y, z, 4, 3).has_value());

    // a pump pair straddling the A/b border survives every round: the first
    // excess clause covers the shrunk rounds and the second covers the grown
    // ones, so the interleaved search genuinely finds a split here
    auto hit = prefix_interleaved_split(*spec, x_prime, y, z, 4, 3);
    REQUIRE(hit.has_value());
    std::array<Word, 5> want{U"aaaaaAAAAAAA", U"A", U"AA", U"b", U"bbb"};
    CHECK(hit->x_parts == want);

    MemberFn fn = member_of(spec);
    Factorization in_y{hit->x_parts[0], hit->x_parts[1], hit->x_parts[2], hit->x_parts[3],
                       hit->x_parts[4] + y};
    Factorization in_z{hit->x_parts[0], hit->x_parts[1], hit->x_parts[2], hit->x_parts[3],
                       hit->x_parts[4] + z};
    CHECK(pump_test(fn, in_y, 8).ok);
    CHECK(pump_test(fn, in_z, 8).ok);
  }

  TEST_CASE("state count bound") {
    DpdaBuilder one(U"a", U"Z", U'Z');
    one.initial("s").accept("s");
    CHECK_EQ(pumping_constant_upper_bound(one.build()), cpp_int(64));

    DpdaBuilder two(U"a", U"Z", U'Z');
    two.initial("s").accept("s").reject("t");
    const cpp_int at_two = pumping_constant_upper_bound(two.build());
    CHECK_EQ(at_two, cpp_int(1) << 384);

    DpdaBuilder three(U"a", U"Z", U'Z');
    three.initial("s").accept("s").reject("t").reject("u");
    CHECK(pumping_constant_upper_bound(three.build()) > at_two);

    Dpda bad;
    bad.state_names = {"s"};
    bad.input_alphabet = U"a";
    bad.stack_alphabet = U"Z";
    bad.bottom = U'Z';
    try {
      pumping_constant_upper_bound(bad);
      FAIL("a malformed machine must throw");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::MalformedMachine);
    }
  }
}
