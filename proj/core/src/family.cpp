#include "dcfl/family.hpp"

#include <algorithm>

#include "dcfl/symbols.hpp"

namespace dcfl {

std::size_t des(const Dpda& m) {
  std::size_t e = 0;
  for (const auto& [key, tgt] : m.transitions) e = std::max(e, tgt.push.size());
  std::size_t power = 1, stack_strings = 1;
  for (std::size_t i = 1; i <= e; ++i) {
    power *= m.stack_alphabet.size();
    stack_strings += power;
  }
  return m.state_names.size() * m.input_alphabet.size() * stack_strings;
}

std::size_t eval_poly(const std::vector<std::size_t>& coeffs, std::size_t n) {
  std::size_t value = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) value = value * n + *it;
  return value;
}

bool mu_bounded_member(const DpdaFamily& family, const Word& x, std::size_t step_budget) {
  std::size_t bound = family.mu(x.size());
  for (std::size_t i = 0; i <= bound; ++i)
    if (!accepts(family.generator(i), x, step_budget)) return false;
  return true;
}

namespace {

Symbol cell_of(Symbol input) { return input == U'0' ? U'O' : U'I'; }

Dpda pal_member_zero() {
  DpdaBuilder b(U"01", U"Z", U'Z');
  b.initial("start").accept("yes").reject("no");
  b.step("start", kLeftMarker, U'Z', "even", U"Z");
  for (Symbol s : Word(U"01")) {
    b.step("even", s, U'Z', "odd", U"Z");
    b.step("odd", s, U'Z', "even", U"Z");
  }
  b.step("even", kRightMarker, U'Z', "yes", U"Z");
  b.fill_rejects("no");
  return b.build();
}

Dpda pal_member_n(std::size_t n) {
  DpdaBuilder b(U"01", U"OIZ", U'Z');
  b.initial("start").accept("yes").reject("no");
  auto count = [](std::size_t t) { return "c" + std::to_string(t); };
  auto latched = [](Symbol s, const char* phase) {
    return std::string(phase) + (s == U'0' ? "0" : "1");
  };
  auto drain = [](Symbol s, std::size_t t) {
    return std::string("pop") + (s == U'0' ? "0" : "1") + "_" + std::to_string(t);
  };
  b.step("start", kLeftMarker, U'Z', count(0), U"Z");
  for (std::size_t t = 0; t < n; ++t) {
    Word tops = (t == 0) ? Word(U"Z") : Word(U"OI");
    for (Symbol s : Word(U"01")) {
      std::string to = (t + 1 == n) ? latched(s, "first") : count(t + 1);
      for (Symbol top : tops) b.step(count(t), s, top, to, Word(1, cell_of(s)) + top);
    }
  }
  for (Symbol latch : Word(U"01")) {
    for (Symbol s : Word(U"01"))
      for (Symbol top : Word(U"OI")) {
        b.step(latched(latch, "first"), s, top, latched(latch, "more"),
               Word(1, cell_of(s)) + top);
        b.step(latched(latch, "more"), s, top, latched(latch, "more"),
               Word(1, cell_of(s)) + top);
      }
    // Read $ popping the last symbol; n-1 more pops expose the position to
    // compare against the latch.
    if (n == 1) {
      for (Symbol top : Word(U"OI"))
        b.step(latched(latch, "more"), kRightMarker, top,
               top == cell_of(latch) ? "yes" : "no", U"");
    } else {
      for (Symbol top : Word(U"OI"))
        b.step(latched(latch, "more"), kRightMarker, top, drain(latch, 1), U"");
      for (std::size_t t = 1; t + 1 < n; ++t)
        for (Symbol top : Word(U"OI")) b.eps(drain(latch, t), top, drain(latch, t + 1), U"");
      for (Symbol top : Word(U"OI"))
        b.eps(drain(latch, n - 1), top, top == cell_of(latch) ? "yes" : "no", U"");
    }
  }
  b.fill_rejects("no");
  return b.build();
}

}  // namespace

Dpda pal_family(std::size_t n) { return n == 0 ? pal_member_zero() : pal_member_n(n); }

DpdaFamily pal_family_spec() {
  DpdaFamily f;
  f.name = "pal";
  f.generator = pal_family;
  f.mu = [](std::size_t len) { return (len + 1) / 2; };
  f.size_bound = {200, 100, 1};
  return f;
}

}  // namespace dcfl
