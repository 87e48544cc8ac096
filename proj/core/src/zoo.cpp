#include "dcfl/zoo.hpp"

#include <algorithm>
#include <optional>

#include "dcfl/errors.hpp"
#include "dcfl/symbols.hpp"

namespace dcfl {
namespace {

constexpr int kMaxPairs = 4;
constexpr int kMaxChain = 4;

const Word kPairA = U"abcd";
const Word kPairB = U"pqrs";

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::BadParameter, what);
}

void require_pairs(int d) {
  require(d >= 1 && d <= kMaxPairs, "pair count d must lie in [1,4]");
}

void require_chain(int k) {
  require(k >= 2 && k <= kMaxChain, "chain length k must lie in [2,4]");
}

Word a_side(int d) { return kPairA.substr(0, static_cast<std::size_t>(d)); }
Word b_side(int d) { return kPairB.substr(0, static_cast<std::size_t>(d)); }

Word reps(Symbol s, std::size_t n) { return Word(n, s); }

Word reversed(Word w) {
  std::reverse(w.begin(), w.end());
  return w;
}

std::vector<Word> split_on(const Word& w, Symbol sep) {
  std::vector<Word> blocks(1);
  for (Symbol s : w) {
    if (s == sep) blocks.emplace_back();
    else blocks.back().push_back(s);
  }
  return blocks;
}

// Per-symbol counts when w matches order[0]* order[1]* ..., nullopt otherwise.
std::optional<std::vector<std::size_t>> phase_counts(const Word& w, const Word& order) {
  std::vector<std::size_t> counts(order.size(), 0);
  std::size_t phase = 0;
  for (Symbol s : w) {
    while (phase < order.size() && s != order[phase]) ++phase;
    if (phase == order.size()) return std::nullopt;
    ++counts[phase];
  }
  return counts;
}

// ---------------------------------------------------------------------------
// Predicates

bool is_even_palindrome(const Word& w) {
  return w.size() % 2 == 0 && w == reversed(w);
}

bool is_even_nonpalindrome(const Word& w) {
  return w.size() % 2 == 0 && w != reversed(w);
}

bool has_double_marker(const Word& w) { return w.find(U"##") != Word::npos; }

// Some way of reading the word as x_1#..#x_m ## y_1#..#y_n pairs a y-block
// with the reversal of its x-partner.
bool marked_reversal_match(const Word& w) {
  for (std::size_t p = 0; p + 1 < w.size(); ++p) {
    if (w[p] != U'#' || w[p + 1] != U'#') continue;
    auto xs = split_on(w.substr(0, p), U'#');
    auto ys = split_on(w.substr(p + 2), U'#');
    std::size_t pairs = std::min(xs.size(), ys.size());
    for (std::size_t i = 0; i < pairs; ++i)
      if (ys[i] == reversed(xs[i])) return true;
  }
  return false;
}

bool split_at_single_c(const Word& w, Word& front, Word& back) {
  std::size_t p = w.find(U'c');
  if (p == Word::npos || w.find(U'c', p + 1) != Word::npos) return false;
  front = w.substr(0, p);
  back = w.substr(p + 1);
  return true;
}

// ---------------------------------------------------------------------------
// Chained block comparisons
//
// A word of k blocks w_k' # ... # w_1' carries the blocks in physical order
// evens ascending, the top index, odds descending; each block is a^alpha
// b^beta c^gamma. Membership is a left-to-right certificate over the block
// *indices* 1..k: block 1 compares on its left side (alpha vs beta; gamma vs
// beta for the primed variant), equality keeps the next block on its left
// side, a strict inequality moves it to the right side, and block k's active
// comparison must hold with equality. Right-side comparisons depend on
// parity: odd blocks check gamma against beta, even blocks beta against
// gamma. The comparisons are trichotomous, so the certificate is unique when
// it exists and membership is a single scan.

struct BlockCounts {
  std::size_t a = 0, b = 0, c = 0;
};

std::vector<int> physical_order(int k) {
  std::vector<int> order;
  for (int j = 2; j < k; j += 2) order.push_back(j);
  order.push_back(k);
  for (int j = (k % 2 == 0) ? k - 1 : k - 2; j >= 1; j -= 2) order.push_back(j);
  return order;
}

enum class Rel { Eq, Lt, Gt };

Rel rel_of(std::size_t lhs, std::size_t rhs) {
  if (lhs == rhs) return Rel::Eq;
  return lhs < rhs ? Rel::Lt : Rel::Gt;
}

bool chain_member(const Word& w, int k, bool primed) {
  auto blocks = split_on(w, U'#');
  if (blocks.size() != static_cast<std::size_t>(k)) return false;
  auto order = physical_order(k);
  std::vector<BlockCounts> by_index(static_cast<std::size_t>(k) + 1);
  for (int pos = 0; pos < k; ++pos) {
    auto counts = phase_counts(blocks[static_cast<std::size_t>(pos)], U"abc");
    if (!counts) return false;
    by_index[static_cast<std::size_t>(order[static_cast<std::size_t>(pos)])] =
        BlockCounts{(*counts)[0], (*counts)[1], (*counts)[2]};
  }
  bool left = !primed;
  for (int j = 1; j <= k; ++j) {
    const BlockCounts& c = by_index[static_cast<std::size_t>(j)];
    Rel r = left ? rel_of(c.a, c.b) : (j % 2 == 1 ? rel_of(c.c, c.b) : rel_of(c.b, c.c));
    if (j == k) return r == Rel::Eq;
    if (r == Rel::Gt) return false;
    left = (r == Rel::Eq);
  }
  return false;
}

// ---------------------------------------------------------------------------
// Machines

// {a^n b^n c^p}: the first two runs match, the third is free.
Dpda make_ab_equal() {
  DpdaBuilder b(U"abc", U"AZ", U'Z');
  b.initial("start").accept("yes").reject("no");
  b.step("start", kLeftMarker, U'Z', "as", U"Z");
  b.step("as", U'a', U'Z', "as", U"AZ");
  b.step("as", U'a', U'A', "as", U"AA");
  b.step("as", U'b', U'A', "bs", U"");
  b.step("bs", U'b', U'A', "bs", U"");
  b.step("as", U'c', U'Z', "cs", U"Z");
  b.step("bs", U'c', U'Z', "cs", U"Z");
  b.step("cs", U'c', U'Z', "cs", U"Z");
  b.step("as", kRightMarker, U'Z', "yes", U"Z");
  b.step("bs", kRightMarker, U'Z', "yes", U"Z");
  b.step("cs", kRightMarker, U'Z', "yes", U"Z");
  b.fill_rejects("no");
  return b.build();
}

// {a^p b^n c^n}: the last two runs match, the first is free.
Dpda make_bc_equal() {
  DpdaBuilder b(U"abc", U"BZ", U'Z');
  b.initial("start").accept("yes").reject("no");
  b.step("start", kLeftMarker, U'Z', "as", U"Z");
  b.step("as", U'a', U'Z', "as", U"Z");
  b.step("as", U'b', U'Z', "bs", U"BZ");
  b.step("bs", U'b', U'B', "bs", U"BB");
  b.step("bs", U'c', U'B', "cs", U"");
  b.step("cs", U'c', U'B', "cs", U"");
  b.step("as", kRightMarker, U'Z', "yes", U"Z");
  b.step("cs", kRightMarker, U'Z', "yes", U"Z");
  b.fill_rejects("no");
  return b.build();
}

// Component over a_1*..a_d* b_1*..b_d*: counts the k-th a-run on the stack
// and pops it against the k-th b-run. With surplus false it accepts when the
// two runs are equal; with surplus true, when the a-run is strictly longer.
// All other runs are unconstrained beyond the overall run order.
Dpda make_pair_machine(int d, int k, bool surplus) {
  Word as = a_side(d), bs = b_side(d);
  DpdaBuilder b(as + bs, U"AZ", U'Z');
  auto p = [](int i) { return "a" + std::to_string(i); };
  auto q = [](int i) { return "b" + std::to_string(i); };
  b.initial("start").accept("yes").reject("no");
  b.step("start", kLeftMarker, U'Z', p(1), U"Z");
  for (int i = 1; i <= d; ++i) {
    for (int j = i; j <= d; ++j) {
      Symbol aj = as[static_cast<std::size_t>(j - 1)];
      if (j == k) {
        b.step(p(i), aj, U'Z', p(j), U"AZ");
        if (i == k) b.step(p(i), aj, U'A', p(j), U"AA");
      } else {
        b.step(p(i), aj, U'Z', p(j), U"Z");
        if (i >= k) b.step(p(i), aj, U'A', p(j), U"A");
      }
    }
  }
  for (int j = 1; j <= d; ++j) {
    Symbol bj = bs[static_cast<std::size_t>(j - 1)];
    for (int i = 1; i <= d; ++i) {
      if (j == k) {
        if (i >= k) b.step(p(i), bj, U'A', q(j), U"");
      } else if (surplus) {
        if (i >= k) b.step(p(i), bj, U'A', q(j), U"A");
      } else {
        b.step(p(i), bj, U'Z', q(j), U"Z");
        if (i >= k && j < k) b.step(p(i), bj, U'A', q(j), U"A");
      }
    }
    for (int l = 1; l <= j; ++l) {
      if (j == k) {
        b.step(q(l), bj, U'A', q(j), U"");
      } else if (surplus) {
        b.step(q(l), bj, U'A', q(j), U"A");
      } else {
        b.step(q(l), bj, U'Z', q(j), U"Z");
        if (j < k) b.step(q(l), bj, U'A', q(j), U"A");
      }
    }
  }
  for (int i = 1; i <= d; ++i) {
    if (surplus) {
      if (i >= k) b.step(p(i), kRightMarker, U'A', "yes", U"A");
    } else {
      b.step(p(i), kRightMarker, U'Z', "yes", U"Z");
    }
  }
  for (int j = 1; j <= d; ++j) {
    if (surplus) b.step(q(j), kRightMarker, U'A', "yes", U"A");
    else b.step(q(j), kRightMarker, U'Z', "yes", U"Z");
  }
  b.fill_rejects("no");
  return b.build();
}

// {a^n b^(kn)}: one push per a, one pop per k-th b.
Dpda make_multiple_machine(int k) {
  DpdaBuilder b(U"ab", U"AZ", U'Z');
  b.initial("start").accept("yes").reject("no");
  b.step("start", kLeftMarker, U'Z', "as", U"Z");
  b.step("as", U'a', U'Z', "as", U"AZ");
  b.step("as", U'a', U'A', "as", U"AA");
  b.step("as", kRightMarker, U'Z', "yes", U"Z");
  std::vector<std::string> g(static_cast<std::size_t>(k));
  for (int t = 0; t < k; ++t) g[static_cast<std::size_t>(t)] = "b" + std::to_string(t);
  auto start_group = [&](const std::string& from) {
    if (k == 1) b.step(from, U'b', U'A', g[0], U"");
    else b.step(from, U'b', U'A', g[1], U"A");
  };
  start_group("as");
  start_group(g[0]);
  for (int t = 1; t < k; ++t) {
    if (t + 1 == k) b.step(g[static_cast<std::size_t>(t)], U'b', U'A', g[0], U"");
    else b.step(g[static_cast<std::size_t>(t)], U'b', U'A', g[static_cast<std::size_t>(t + 1)], U"A");
  }
  b.step(g[0], kRightMarker, U'Z', "yes", U"Z");
  b.fill_rejects("no");
  return b.build();
}

// 2d marked binary blocks w_1..w_d v_1..v_d with v_i = reverse(w_i): block i
// is pushed, block d+i popped against it, the rest stream through.
Dpda make_match_machine(int d, int i) {
  DpdaBuilder b(U"01#", U"OIZ", U'Z');
  b.initial("start").accept("yes").reject("no");
  auto blk = [](int t) { return "s" + std::to_string(t); };
  b.step("start", kLeftMarker, U'Z', blk(1), U"Z");
  const Word tops = U"OIZ";
  for (int t = 1; t <= 2 * d; ++t) {
    if (t == i) {
      for (Symbol top : tops) {
        b.step(blk(t), U'0', top, blk(t), Word(U"O") + top);
        b.step(blk(t), U'1', top, blk(t), Word(U"I") + top);
      }
    } else if (t == d + i) {
      b.step(blk(t), U'0', U'O', blk(t), U"");
      b.step(blk(t), U'1', U'I', blk(t), U"");
    } else {
      for (Symbol top : tops) {
        b.step(blk(t), U'0', top, blk(t), Word(1, top));
        b.step(blk(t), U'1', top, blk(t), Word(1, top));
      }
    }
    if (t < 2 * d) {
      if (t >= d + i) {
        b.step(blk(t), U'#', U'Z', blk(t + 1), U"Z");
      } else {
        for (Symbol top : tops) b.step(blk(t), U'#', top, blk(t + 1), Word(1, top));
      }
    }
  }
  b.step(blk(2 * d), kRightMarker, U'Z', "yes", U"Z");
  b.fill_rejects("no");
  return b.build();
}

// One chained-comparison certificate, fixed: the strict/equal choice at every
// block is baked in, so each block reduces to a single counter check and the
// whole machine is deterministic. Counting symbols are per physical position;
// a gamma<beta block leaves its surplus on the stack, which later blocks
// simply bury.
enum class BlockCheck { AEqB, ALtB, BEqC, BLtC, CLtB };

Dpda make_chain_machine(int k, const std::vector<BlockCheck>& plan) {
  Word counters = Word(U"STUV").substr(0, static_cast<std::size_t>(k));
  Word stack = counters + U"Z";
  DpdaBuilder b(U"abc#", stack, U'Z');
  b.initial("start").accept("yes").reject("no");
  auto st = [](int t, const char* phase) { return "p" + std::to_string(t) + phase; };
  b.step("start", kLeftMarker, U'Z', st(1, "a"), U"Z");
  for (int t = 1; t <= k; ++t) {
    Symbol mine = counters[static_cast<std::size_t>(t - 1)];
    Word foreign;
    for (Symbol s : stack)
      if (s != mine) foreign.push_back(s);
    std::string here_a = st(t, "a"), here_b = st(t, "b"), here_c = st(t, "c"), here_x = st(t, "x");
    std::string next = (t < k) ? st(t + 1, "a") : "yes";
    Symbol advance = (t < k) ? U'#' : kRightMarker;
    auto exit_from = [&](const std::string& state, Symbol top) {
      b.step(state, advance, top, next, Word(1, top));
    };
    switch (plan[static_cast<std::size_t>(t - 1)]) {
      case BlockCheck::AEqB:
        for (Symbol top : stack) b.step(here_a, U'a', top, here_a, Word(1, mine) + top);
        b.step(here_a, U'b', mine, here_b, U"");
        b.step(here_b, U'b', mine, here_b, U"");
        for (Symbol top : foreign) {
          b.step(here_a, U'c', top, here_c, Word(1, top));
          b.step(here_b, U'c', top, here_c, Word(1, top));
          b.step(here_c, U'c', top, here_c, Word(1, top));
          exit_from(here_a, top);
          exit_from(here_b, top);
          exit_from(here_c, top);
        }
        break;
      case BlockCheck::ALtB:
        for (Symbol top : stack) b.step(here_a, U'a', top, here_a, Word(1, mine) + top);
        b.step(here_a, U'b', mine, here_b, U"");
        b.step(here_b, U'b', mine, here_b, U"");
        for (Symbol top : foreign) {
          b.step(here_a, U'b', top, here_x, Word(1, top));
          b.step(here_b, U'b', top, here_x, Word(1, top));
          b.step(here_x, U'b', top, here_x, Word(1, top));
          b.step(here_x, U'c', top, here_c, Word(1, top));
          b.step(here_c, U'c', top, here_c, Word(1, top));
          exit_from(here_x, top);
          exit_from(here_c, top);
        }
        break;
      case BlockCheck::BEqC:
        for (Symbol top : foreign) {
          b.step(here_a, U'a', top, here_a, Word(1, top));
          b.step(here_a, U'b', top, here_b, Word(1, mine) + top);
          exit_from(here_a, top);
          exit_from(here_c, top);
        }
        b.step(here_b, U'b', mine, here_b, Word(2, mine));
        b.step(here_b, U'c', mine, here_c, U"");
        b.step(here_c, U'c', mine, here_c, U"");
        break;
      case BlockCheck::BLtC:
        for (Symbol top : foreign) {
          b.step(here_a, U'a', top, here_a, Word(1, top));
          b.step(here_a, U'b', top, here_b, Word(1, mine) + top);
          b.step(here_a, U'c', top, here_x, Word(1, top));
          b.step(here_c, U'c', top, here_x, Word(1, top));
          b.step(here_x, U'c', top, here_x, Word(1, top));
          exit_from(here_x, top);
        }
        b.step(here_b, U'b', mine, here_b, Word(2, mine));
        b.step(here_b, U'c', mine, here_c, U"");
        b.step(here_c, U'c', mine, here_c, U"");
        break;
      case BlockCheck::CLtB:
        for (Symbol top : foreign) {
          b.step(here_a, U'a', top, here_a, Word(1, top));
          b.step(here_a, U'b', top, here_b, Word(1, mine) + top);
        }
        b.step(here_b, U'b', mine, here_b, Word(2, mine));
        b.step(here_b, U'c', mine, here_c, U"");
        b.step(here_c, U'c', mine, here_c, U"");
        exit_from(here_b, mine);
        exit_from(here_c, mine);
        break;
    }
  }
  b.fill_rejects("no");
  return b.build();
}

// rels bit j-1 picks the certificate step at block j: 0 equality, 1 strict.
std::vector<BlockCheck> chain_plan(int k, unsigned rels, bool primed) {
  std::vector<BlockCheck> by_index(static_cast<std::size_t>(k) + 1, BlockCheck::AEqB);
  bool left = !primed;
  for (int j = 1; j <= k; ++j) {
    bool strict = j < k && ((rels >> (j - 1)) & 1u) != 0;
    BlockCheck check;
    if (left) check = strict ? BlockCheck::ALtB : BlockCheck::AEqB;
    else if (j % 2 == 1) check = strict ? BlockCheck::CLtB : BlockCheck::BEqC;
    else check = strict ? BlockCheck::BLtC : BlockCheck::BEqC;
    by_index[static_cast<std::size_t>(j)] = check;
    left = !strict;
  }
  std::vector<BlockCheck> plan;
  for (int idx : physical_order(k)) plan.push_back(by_index[static_cast<std::size_t>(idx)]);
  return plan;
}

std::vector<LanguagePtr> chain_parts(int k, bool primed) {
  std::vector<LanguagePtr> parts;
  for (unsigned rels = 0; rels < (1u << (k - 1)); ++rels)
    parts.push_back(LanguageSpec::dpda(make_chain_machine(k, chain_plan(k, rels, primed))));
  return parts;
}

// ---------------------------------------------------------------------------
// Entries

std::size_t default_length(const Word& alphabet) { return alphabet.size() <= 2 ? 10 : 8; }

ZooEntry make_entry(std::string name, Word alphabet, std::string description,
                    std::function<bool(const Word&)> predicate, LanguagePtr spec) {
  ZooEntry e;
  e.name = std::move(name);
  e.alphabet = std::move(alphabet);
  e.description = std::move(description);
  e.predicate = std::move(predicate);
  e.spec = std::move(spec);
  e.validation_length = default_length(e.alphabet);
  return e;
}

ZooEntry entry_anbncn() {
  return make_entry(
      "anbncn", U"abc", "equal runs a^n b^n c^n; intersection of two adjacent-run checks",
      [](const Word& w) {
        auto c = phase_counts(w, U"abc");
        return c && (*c)[0] == (*c)[1] && (*c)[1] == (*c)[2];
      },
      LanguageSpec::intersection_of(
          {LanguageSpec::dpda(make_ab_equal()), LanguageSpec::dpda(make_bc_equal())}));
}

ZooEntry entry_ld(int d) {
  require_pairs(d);
  Word order = a_side(d) + b_side(d);
  std::vector<LanguagePtr> parts;
  for (int k = 1; k <= d; ++k) parts.push_back(LanguageSpec::dpda(make_pair_machine(d, k, false)));
  return make_entry(
      "ld-" + std::to_string(d), order,
      "d paired runs with every a-run equal to its b-run; intersection of the d pair checks",
      [d, order](const Word& w) {
        auto c = phase_counts(w, order);
        if (!c) return false;
        for (int i = 0; i < d; ++i)
          if ((*c)[static_cast<std::size_t>(i)] != (*c)[static_cast<std::size_t>(d + i)])
            return false;
        return true;
      },
      LanguageSpec::intersection_of(std::move(parts)));
}

ZooEntry entry_ld_le(int d) {
  require_pairs(d);
  Word order = a_side(d) + b_side(d);
  std::vector<LanguagePtr> parts;
  for (int k = 1; k <= d; ++k)
    parts.push_back(LanguageSpec::complement_of(LanguageSpec::dpda(make_pair_machine(d, k, true))));
  LanguagePtr spec = restrict_regular(LanguageSpec::intersection_of(std::move(parts)),
                                      dfa_block_form(order), RestrictMode::Intersect);
  return make_entry(
      "ld-le-" + std::to_string(d), order,
      "d paired runs with no a-run exceeding its b-run; run-order language intersected with "
      "complements of the d surplus checks",
      [d, order](const Word& w) {
        auto c = phase_counts(w, order);
        if (!c) return false;
        for (int i = 0; i < d; ++i)
          if ((*c)[static_cast<std::size_t>(i)] > (*c)[static_cast<std::size_t>(d + i)])
            return false;
        return true;
      },
      std::move(spec));
}

ZooEntry entry_ld_gt(int d) {
  require_pairs(d);
  Word order = a_side(d) + b_side(d);
  std::vector<LanguagePtr> parts;
  for (int k = 1; k <= d; ++k) parts.push_back(LanguageSpec::dpda(make_pair_machine(d, k, true)));
  return make_entry(
      "ld-gt-" + std::to_string(d), order,
      "d paired runs with some a-run exceeding its b-run; union of the d surplus checks",
      [d, order](const Word& w) {
        auto c = phase_counts(w, order);
        if (!c) return false;
        for (int i = 0; i < d; ++i)
          if ((*c)[static_cast<std::size_t>(i)] > (*c)[static_cast<std::size_t>(d + i)])
            return true;
        return false;
      },
      LanguageSpec::union_of(std::move(parts)));
}

ZooEntry entry_npal_blocks(int d) {
  require_pairs(d);
  return make_entry("npal-blocks-" + std::to_string(d), U"01#",
                    "2d marked binary blocks where every second-half block differs from the "
                    "reversal of its first-half partner",
                    [d](const Word& w) {
                      auto blocks = split_on(w, U'#');
                      if (blocks.size() != static_cast<std::size_t>(2 * d)) return false;
                      for (int i = 0; i < d; ++i)
                        if (blocks[static_cast<std::size_t>(d + i)] ==
                            reversed(blocks[static_cast<std::size_t>(i)]))
                          return false;
                      return true;
                    },
                    nullptr);
}

ZooEntry entry_npal_match(int d) {
  require_pairs(d);
  std::vector<LanguagePtr> parts;
  for (int i = 1; i <= d; ++i) parts.push_back(LanguageSpec::dpda(make_match_machine(d, i)));
  return make_entry("npal-match-" + std::to_string(d), U"01#",
                    "2d marked binary blocks where some second-half block is the reversal of its "
                    "first-half partner; union of the d per-pair matchers",
                    [d](const Word& w) {
                      auto blocks = split_on(w, U'#');
                      if (blocks.size() != static_cast<std::size_t>(2 * d)) return false;
                      for (int i = 0; i < d; ++i)
                        if (blocks[static_cast<std::size_t>(d + i)] ==
                            reversed(blocks[static_cast<std::size_t>(i)]))
                          return true;
                      return false;
                    },
                    LanguageSpec::union_of(std::move(parts)));
}

ZooEntry entry_l_union(int d) {
  require_pairs(d);
  std::vector<LanguagePtr> parts;
  for (int k = 1; k <= d; ++k) parts.push_back(LanguageSpec::dpda(make_multiple_machine(k)));
  return make_entry("L" + std::to_string(d) + "-union", U"ab",
                    "a^n b^(kn) for some multiplier k in [1,d]; union of the d fixed-multiplier "
                    "counters",
                    [d](const Word& w) {
                      auto c = phase_counts(w, U"ab");
                      if (!c) return false;
                      std::size_t n = (*c)[0], m = (*c)[1];
                      if (n == 0) return m == 0;
                      return m % n == 0 && m / n >= 1 && m / n <= static_cast<std::size_t>(d);
                    },
                    LanguageSpec::union_of(std::move(parts)));
}

ZooEntry entry_hibbard(int k, bool primed) {
  require_chain(k);
  std::string name = std::string("hibbard-") + (primed ? "prime-" : "") + std::to_string(k);
  return make_entry(
      std::move(name), U"abc#",
      "k chained a/b/c blocks: equality keeps the next block on its left comparison, strictness "
      "switches it to the right one, the last comparison is an equality; union of the 2^(k-1) "
      "fixed-choice counters",
      [k, primed](const Word& w) { return chain_member(w, k, primed); },
      LanguageSpec::union_of(chain_parts(k, primed)));
}

ZooEntry entry_pal() {
  return make_entry("pal", U"01", "even-length binary palindromes", is_even_palindrome, nullptr);
}

ZooEntry entry_npal() {
  return make_entry("npal", U"01", "even-length binary non-palindromes", is_even_nonpalindrome,
                    nullptr);
}

ZooEntry entry_odd() {
  return make_entry("odd", U"01", "binary words of odd length",
                    [](const Word& w) { return w.size() % 2 == 1; },
                    LanguageSpec::dfa(dfa_length_parity(U"01", 1)));
}

ZooEntry entry_pal_complement() {
  LanguagePtr odd = LanguageSpec::dfa(dfa_length_parity(U"01", 1));
  LanguagePtr spec = LanguageSpec::union_of(
      {odd, LanguageSpec::intersection_of(
                {LanguageSpec::complement_of(odd),
                 LanguageSpec::predicate("even-length-mismatch", is_even_nonpalindrome)})});
  return make_entry("pal-complement", U"01",
                    "complement of the even-length palindromes: odd words plus even words with a "
                    "mismatched pair",
                    [](const Word& w) { return !is_even_palindrome(w); }, std::move(spec));
}

ZooEntry entry_form_marked() {
  return make_entry("form-marked", U"01#", "marked binary words containing the double marker ##",
                    has_double_marker, LanguageSpec::dfa(dfa_contains(U"01#", U"##")));
}

ZooEntry entry_mpal_marked() {
  return make_entry("mpal-marked", U"01#",
                    "some reading as blocks around a ## pairs a right block with the reversal of "
                    "its left partner",
                    marked_reversal_match, nullptr);
}

ZooEntry entry_npal_marked() {
  LanguagePtr spec = LanguageSpec::intersection_of(
      {LanguageSpec::dfa(dfa_contains(U"01#", U"##")),
       LanguageSpec::complement_of(
           LanguageSpec::predicate("marked-reversal-match", marked_reversal_match))});
  return make_entry("npal-marked", U"01#",
                    "contains ## but no reading pairs a right block with a reversed left partner",
                    [](const Word& w) { return has_double_marker(w) && !marked_reversal_match(w); },
                    std::move(spec));
}

ZooEntry entry_dup_c() {
  LanguagePtr spec = LanguageSpec::intersection_of(
      {LanguageSpec::complement_of(LanguageSpec::predicate(
           "halves-differ",
           [](const Word& w) {
             Word front, back;
             return split_at_single_c(w, front, back) && front != back;
           })),
       LanguageSpec::dfa(dfa_exactly_one(U"abc", U'c'))});
  return make_entry("dup-c", U"abc", "wcw: equal halves around a single centre marker",
                    [](const Word& w) {
                      Word front, back;
                      return split_at_single_c(w, front, back) && front == back;
                    },
                    std::move(spec));
}

ZooEntry entry_mismatch_c() {
  return make_entry("mismatch-c", U"abc", "wcx: differing halves around a single centre marker",
                    [](const Word& w) {
                      Word front, back;
                      return split_at_single_c(w, front, back) && front != back;
                    },
                    nullptr);
}

}  // namespace

ZooEntry build_entry(const std::string& family, const ZooParams& params) {
  if (family == "anbncn") return entry_anbncn();
  if (family == "ld") return entry_ld(params.d);
  if (family == "ld-le") return entry_ld_le(params.d);
  if (family == "ld-gt") return entry_ld_gt(params.d);
  if (family == "npal-blocks") return entry_npal_blocks(params.d);
  if (family == "npal-match") return entry_npal_match(params.d);
  if (family == "l-union") return entry_l_union(params.d);
  if (family == "hibbard") return entry_hibbard(params.k, false);
  if (family == "hibbard-prime") return entry_hibbard(params.k, true);
  if (family == "pal") return entry_pal();
  if (family == "npal") return entry_npal();
  if (family == "odd") return entry_odd();
  if (family == "pal-complement") return entry_pal_complement();
  if (family == "form-marked") return entry_form_marked();
  if (family == "mpal-marked") return entry_mpal_marked();
  if (family == "npal-marked") return entry_npal_marked();
  if (family == "dup-c") return entry_dup_c();
  if (family == "mismatch-c") return entry_mismatch_c();
  throw Error(ErrorKind::BadParameter, "unknown zoo family: " + family);
}

std::vector<ZooEntry> standard_entries() {
  std::vector<ZooEntry> out;
  out.push_back(entry_anbncn());
  out.push_back(entry_ld(2));
  out.push_back(entry_ld(3));
  out.push_back(entry_ld_le(2));
  out.push_back(entry_ld_gt(2));
  out.push_back(entry_npal_blocks(2));
  out.push_back(entry_npal_match(2));
  out.push_back(entry_l_union(2));
  out.push_back(entry_l_union(3));
  out.push_back(entry_hibbard(2, false));
  out.push_back(entry_hibbard(3, false));
  out.push_back(entry_hibbard(2, true));
  out.push_back(entry_hibbard(3, true));
  out.push_back(entry_pal());
  out.push_back(entry_npal());
  out.push_back(entry_odd());
  out.push_back(entry_pal_complement());
  out.push_back(entry_form_marked());
  out.push_back(entry_mpal_marked());
  out.push_back(entry_npal_marked());
  out.push_back(entry_dup_c());
  out.push_back(entry_mismatch_c());
  return out;
}

std::vector<std::pair<std::string, Dpda>> standard_machines() {
  std::vector<std::pair<std::string, Dpda>> out;
  out.emplace_back("anbncn-1", make_ab_equal());
  out.emplace_back("anbncn-2", make_bc_equal());
  for (int d : {2, 3})
    for (int k = 1; k <= d; ++k)
      out.emplace_back("ld-" + std::to_string(d) + "-" + std::to_string(k),
                       make_pair_machine(d, k, false));
  for (int k = 1; k <= 2; ++k)
    out.emplace_back("ld-gt-2-" + std::to_string(k), make_pair_machine(2, k, true));
  for (int i = 1; i <= 2; ++i)
    out.emplace_back("npal-match-2-" + std::to_string(i), make_match_machine(2, i));
  for (int k = 1; k <= 3; ++k)
    out.emplace_back("L3-union-" + std::to_string(k), make_multiple_machine(k));
  for (int k : {2, 3}) {
    for (unsigned rels = 0; rels < (1u << (k - 1)); ++rels) {
      out.emplace_back("hibbard-" + std::to_string(k) + "-" + std::to_string(rels + 1),
                       make_chain_machine(k, chain_plan(k, rels, false)));
      out.emplace_back("hibbard-prime-" + std::to_string(k) + "-" + std::to_string(rels + 1),
                       make_chain_machine(k, chain_plan(k, rels, true)));
    }
  }
  return out;
}

AgreementReport cross_validate(const ZooEntry& entry, std::size_t max_len) {
  require(entry.spec != nullptr, "entry '" + entry.name + "' has no machine decomposition");
  if (max_len == 0) max_len = entry.validation_length;
  AgreementReport report;
  enumerate_words(entry.alphabet, max_len, [&](const Word& w) {
    bool want = entry.predicate(w);
    bool got = entry.spec->member(w);
    ++report.checked;
    if (want != got) report.disagreements.push_back({w, want, got});
    return true;
  });
  return report;
}

std::vector<Word> witness_strings(const std::string& family, const ZooParams& params) {
  const int d = params.d, k = params.k, n = params.n;
  if (family == "l-union") {
    require_pairs(d);
    require(n >= 1, "witness scale n must be positive");
    std::vector<Word> out{reps(U'a', static_cast<std::size_t>(n))};
    for (int i = 1; i <= d; ++i) out.push_back(reps(U'b', static_cast<std::size_t>(i * n)));
    return out;
  }
  if (family == "ld-gt") {
    require_pairs(d);
    require(n >= 1, "witness scale n must be positive");
    Word as = a_side(d), bs = b_side(d);
    Word x;
    for (int j = 1; j <= d; ++j)
      x += reps(as[static_cast<std::size_t>(j - 1)], static_cast<std::size_t>(j * n));
    std::vector<Word> out{x};
    for (int kk = 1; kk <= d; ++kk) {
      Word y;
      for (int j = 1; j <= d; ++j)
        y += reps(bs[static_cast<std::size_t>(j - 1)],
                  static_cast<std::size_t>(j * n - (j == kk ? 1 : 0)));
      out.push_back(y);
    }
    return out;
  }
  if (family == "npal-match") {
    require_pairs(d);
    require(n >= d, "witness scale n must be at least d");
    std::vector<Word> w(static_cast<std::size_t>(d) + 1), v(static_cast<std::size_t>(d) + 1);
    for (int i = 1; i <= d; ++i) {
      w[static_cast<std::size_t>(i)] =
          reps(U'0', static_cast<std::size_t>(n - i)) + reps(U'1', static_cast<std::size_t>(i));
      v[static_cast<std::size_t>(i)] =
          reversed(w[static_cast<std::size_t>(i)]) + reps(U'1', static_cast<std::size_t>(n));
    }
    Word x;
    for (int i = 1; i <= d; ++i) x += w[static_cast<std::size_t>(i)] + U"#";
    std::vector<Word> out{x};
    for (int i = 1; i <= d; ++i) {
      Word y;
      for (int j = 1; j <= d; ++j) {
        y += (j == i) ? reversed(w[static_cast<std::size_t>(j)]) : v[static_cast<std::size_t>(j)];
        if (j < d) y += U"#";
      }
      out.push_back(y);
    }
    return out;
  }
  if (family == "pal-blocks") {
    require(k >= 1, "block count k must be positive");
    require(n >= 1, "witness scale n must be positive");
    std::vector<Word> out;
    Word unit = reps(U'0', static_cast<std::size_t>(n)) + reps(U'1', static_cast<std::size_t>(n));
    for (int t = 1; t <= k; ++t) {
      Word w;
      for (int r = 0; r < t; ++r) w += unit;
      w += reps(U'0', static_cast<std::size_t>(n));
      out.push_back(w);
    }
    return out;
  }
  if (family == "hibbard-quadruple") {
    require(n >= 1, "witness scale n must be positive");
    auto nn = static_cast<std::size_t>(n);
    return {reps(U'a', nn) + reps(U'b', nn) + reps(U'c', nn - 1),
            reps(U'a', nn) + reps(U'b', nn + 1) + reps(U'c', nn),
            reps(U'a', nn) + reps(U'b', nn - 1) + reps(U'c', nn - 1),
            reps(U'a', nn) + reps(U'b', nn - 1) + reps(U'c', nn)};
  }
  if (family == "hibbard-chain") {
    require_chain(k);
    require(n >= 1, "witness scale n must be positive");
    Word out;
    auto order = physical_order(k);
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
      auto nj = static_cast<std::size_t>(n + order[pos] - 1);
      if (pos > 0) out += U"#";
      out += reps(U'a', nj) + reps(U'b', nj) + reps(U'c', nj - 1);
    }
    return {out};
  }
  throw Error(ErrorKind::BadParameter, "unknown witness family: " + family);
}

}  // namespace dcfl
