#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dcfl/errors.hpp"
#include "dcfl/family.hpp"
#include "dcfl/ideal_shape.hpp"
#include "dcfl/symbols.hpp"

using namespace dcfl;

namespace {

bool is_even_palindrome(const Word& w) {
  if (w.size() % 2 != 0) return false;
  Word r(w.rbegin(), w.rend());
  return w == r;
}

Dpda two_state_sink() {
  DpdaBuilder b(U"01", U"AZ", U'Z');
  b.initial("go").accept("yes");
  for (Symbol top : Word(U"AZ")) {
    b.step("go", kLeftMarker, top, "go", Word(1, top));
    b.step("go", U'0', top, "go", Word(1, top));
    b.step("go", U'1', top, "go", Word(1, top));
    b.step("go", kRightMarker, top, "yes", Word(1, top));
  }
  return b.build();
}

}  // namespace

TEST_SUITE("description size") {
  TEST_CASE("worked example") {
    Dpda m = two_state_sink();
    REQUIRE(m.state_names.size() == 2);
    REQUIRE(m.stack_alphabet.size() == 2);
    CHECK(des(m) == 12);  // 2 * 2 * (1 + 2)
  }

  TEST_CASE("no pushes counts only the empty stack string") {
    Dpda m;
    m.state_names = {"lone"};
    m.input_alphabet = U"01";
    m.stack_alphabet = U"Z";
    CHECK(des(m) == 2);
  }

  TEST_CASE("polynomial evaluation") {
    CHECK(eval_poly({200, 100, 1}, 0) == 200);
    CHECK(eval_poly({200, 100, 1}, 10) == 1300);
    CHECK(eval_poly({}, 7) == 0);
    CHECK(eval_poly({5}, 7) == 5);
  }
}

TEST_SUITE("palindrome family") {
  TEST_CASE("members are valid and ideal") {
    for (std::size_t n = 0; n <= 12; ++n) {
      CAPTURE(n);
      Dpda m = pal_family(n);
      CHECK(validate(m).ok());
      CHECK(check_ideal_shape(m).ok());
    }
  }

  TEST_CASE("single machine checks") {
    CHECK(accepts(pal_family(0), U""));
    CHECK(accepts(pal_family(0), U"01"));
    CHECK_FALSE(accepts(pal_family(0), U"0"));

    CHECK(accepts(pal_family(1), U"00"));
    CHECK_FALSE(accepts(pal_family(1), U"01"));
    CHECK_FALSE(accepts(pal_family(1), U"0"));
    CHECK(accepts(pal_family(1), U"010"));

    CHECK(accepts(pal_family(2), U"0110"));
    CHECK_FALSE(accepts(pal_family(2), U"0100"));
    CHECK_FALSE(accepts(pal_family(2), U"01"));

    CHECK(accepts(pal_family(3), U"0110"));
    CHECK_FALSE(accepts(pal_family(3), U"0100"));
    CHECK_FALSE(accepts(pal_family(3), U"011"));
  }

  TEST_CASE("size grows and stays under the declared bound") {
    DpdaFamily f = pal_family_spec();
    std::size_t previous = 0;
    for (std::size_t n = 0; n <= 32; ++n) {
      std::size_t size = des(pal_family(n));
      CAPTURE(n);
      CHECK(size >= previous);
      CHECK(size <= eval_poly(f.size_bound, n));
      previous = size;
    }
  }
}

TEST_SUITE("bounded intersection") {
  TEST_CASE("coincides with the palindrome predicate") {
    DpdaFamily f = pal_family_spec();
    std::size_t checked = 0;
    enumerate_words(U"01", 10, [&](const Word& w) {
      bool got = mu_bounded_member(f, w);
      bool want = is_even_palindrome(w);
      if (got != want) {
        CAPTURE(to_utf8(w));
        CHECK(got == want);
      }
      ++checked;
      return true;
    });
    CHECK(checked == 2047);
  }

  TEST_CASE("spot values") {
    DpdaFamily f = pal_family_spec();
    CHECK(mu_bounded_member(f, U""));
    CHECK(mu_bounded_member(f, U"0110"));
    CHECK_FALSE(mu_bounded_member(f, U"01"));
    CHECK_FALSE(mu_bounded_member(f, U"010"));
  }

  TEST_CASE("cutoff zero asks only the parity machine") {
    DpdaFamily f = pal_family_spec();
    f.mu = [](std::size_t) { return std::size_t{0}; };
    CHECK(f.mu(4) == 0);
    CHECK(mu_bounded_member(f, U"01"));
    CHECK_FALSE(mu_bounded_member(f, U"010"));
  }

  TEST_CASE("budget exhaustion surfaces") {
    DpdaFamily f = pal_family_spec();
    CHECK_THROWS_AS(mu_bounded_member(f, U"0110", 1), Error);
    try {
      mu_bounded_member(f, U"0110", 1);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::BudgetExhausted);
    }
  }
}
