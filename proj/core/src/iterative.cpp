#include "dcfl/iterative.hpp"

#include <algorithm>

#include "dcfl/enhance.hpp"

namespace dcfl {

namespace {

Word power(const Word& w, std::size_t n) {
  Word out;
  out.reserve(w.size() * n);
  for (std::size_t i = 0; i < n; ++i) out += w;
  return out;
}

bool ends_with(const Word& w, const Word& suffix) {
  return w.size() >= suffix.size() && w.compare(w.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

Word Factorization::assemble(std::size_t i) const { return assemble(i, i); }

Word Factorization::assemble(std::size_t i, std::size_t j) const {
  return u + power(x, i) + v + power(y, j) + z;
}

bool correlated(const StackHistory& hist, std::size_t t1, std::size_t t2) {
  if (t1 > t2 || t2 >= hist.boundaries())
    throw Error(ErrorKind::BadParameter, "boundaries out of range");
  return hist.stacks[t1] == hist.stacks[t2] && pseudo_convex(hist.heights(), t1, t2);
}

bool is_good_pair(const StackHistory& hist, const BlockPair& p) {
  const std::size_t last = hist.boundaries();
  if (last < 4) return false;
  if (!(1 <= p.t1 && p.t1 < p.t2 && p.t2 <= p.t3 && p.t3 < p.t4 && p.t4 + 2 <= last))
    return false;
  const Word& low = hist.stacks[p.t1];
  const Word& high = hist.stacks[p.t2];
  if (hist.stacks[p.t4] != low || hist.stacks[p.t3] != high) return false;
  if (!ends_with(high, low)) return false;
  if (hist.states[p.t1] != hist.states[p.t2]) return false;
  if (hist.states[p.t3] != hist.states[p.t4]) return false;
  const auto h = hist.heights();
  return pseudo_convex(h, p.t1, p.t2) && pseudo_convex(h, p.t2, p.t3) &&
         pseudo_convex(h, p.t3, p.t4);
}

std::vector<BlockPair> find_good_pairs(const StackHistory& hist, std::size_t max_block) {
  std::vector<BlockPair> out;
  if (hist.boundaries() < 4) return out;
  const std::size_t hi = hist.boundaries() - 2;  // boundary before the $-read
  for (std::size_t t1 = 1; t1 + 1 <= hi; ++t1)
    for (std::size_t t2 = t1 + 1; t2 <= hi && t2 - t1 <= max_block; ++t2)
      for (std::size_t t3 = t2; t3 + 1 <= hi; ++t3)
        for (std::size_t t4 = t3 + 1; t4 <= hi && t4 - t3 <= max_block; ++t4) {
          BlockPair p{t1, t2, t3, t4};
          if (is_good_pair(hist, p)) out.push_back(p);
        }
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>> find_state_repeat(const StackHistory& hist) {
  for (std::size_t t1 = 0; t1 + 1 < hist.boundaries(); ++t1)
    for (std::size_t t2 = t1 + 1; t2 < hist.boundaries(); ++t2)
      if (hist.states[t1] == hist.states[t2] && correlated(hist, t1, t2))
        return std::make_pair(t1, t2);
  return std::nullopt;
}

Factorization induced_factorization(const Word& w, const BlockPair& p) {
  if (!(1 <= p.t1 && p.t1 <= p.t2 && p.t2 <= p.t3 && p.t3 <= p.t4 && p.t4 <= w.size() + 1))
    throw Error(ErrorKind::BadParameter, "pair outside the word");
  const std::size_t c1 = p.t1 - 1, c2 = p.t2 - 1, c3 = p.t3 - 1, c4 = p.t4 - 1;
  Factorization f;
  f.u = w.substr(0, c1);
  f.x = w.substr(c1, c2 - c1);
  f.v = w.substr(c2, c3 - c2);
  f.y = w.substr(c3, c4 - c3);
  f.z = w.substr(c4);
  return f;
}

Factorization strip_factorization(const Factorization& f) {
  return {strip_placeholders(f.u), strip_placeholders(f.x), strip_placeholders(f.v),
          strip_placeholders(f.y), strip_placeholders(f.z)};
}

PumpReport pump_test(const MemberFn& member, const Factorization& f, std::size_t i_max) {
  if (f.x.empty() && f.y.empty())
    throw Error(ErrorKind::BadParameter, "nothing to pump");
  PumpReport rep;
  for (std::size_t i = 0; i <= i_max; ++i) {
    Word w = f.assemble(i);
    if (!member(w)) {
      rep.ok = false;
      rep.failed_at = i;
      rep.failed_word = std::move(w);
      return rep;
    }
  }
  return rep;
}

TriState nondegenerate_bounded(const MemberFn& member, const Factorization& f, std::size_t i_max,
                               std::size_t j_max) {
  if (i_max == 0 || j_max == 0) return TriState::Inconclusive;
  std::vector<std::vector<bool>> grid(i_max + 1, std::vector<bool>(j_max + 1));
  for (std::size_t i = 0; i <= i_max; ++i)
    for (std::size_t j = 0; j <= j_max; ++j) grid[i][j] = member(f.assemble(i, j));

  bool any_row_saturated = false;
  for (std::size_t i = 0; i <= i_max; ++i) {
    bool all = true;
    for (std::size_t j = 0; j <= j_max; ++j) all = all && grid[i][j];
    any_row_saturated = any_row_saturated || all;
  }
  bool any_col_saturated = false;
  for (std::size_t j = 0; j <= j_max; ++j) {
    bool all = true;
    for (std::size_t i = 0; i <= i_max; ++i) all = all && grid[i][j];
    any_col_saturated = any_col_saturated || all;
  }
  return (any_row_saturated && any_col_saturated) ? TriState::No : TriState::Yes;
}

bool is_stack_operational(const Dpda& m, const Word& w, const std::array<std::size_t, 4>& cuts,
                          std::size_t budget) {
  if (!(cuts[0] <= cuts[1] && cuts[1] <= cuts[2] && cuts[2] <= cuts[3] && cuts[3] <= w.size()))
    throw Error(ErrorKind::CutMisaligned, "cuts must be ordered positions inside the word");
  if (cuts[0] == cuts[1] || cuts[2] == cuts[3]) return false;  // empty x or y

  RunOptions opts;
  opts.budget = budget;
  RunOutcome out = run(m, w, opts);
  if (!out.accepted)
    throw Error(ErrorKind::BadParameter, "cut analysis needs an accepted word");

  const Word enhanced = induce(m, w, budget);
  if (strip_placeholders(enhanced) != w)
    throw Error(ErrorKind::CutMisaligned, "run shadow does not project back onto the word");

  // Enhanced position of a plain cut: past that many plain symbols and the
  // placeholder run following the last one.
  auto lift = [&](std::size_t plain_cut) {
    std::size_t pos = 0, seen = 0;
    while (pos < enhanced.size() && seen < plain_cut) {
      if (enhanced[pos] != kPlaceholder) ++seen;
      ++pos;
    }
    while (pos < enhanced.size() && enhanced[pos] == kPlaceholder) ++pos;
    return pos;
  };

  BlockPair p{1 + lift(cuts[0]), 1 + lift(cuts[1]), 1 + lift(cuts[2]), 1 + lift(cuts[3])};
  StackHistory hist = record_history(epsilon_enhance(m), enhanced, budget);
  return is_good_pair(hist, p);
}

bool is_stack_operational(const Dpda& m, const Factorization& plain, std::size_t budget) {
  const std::size_t c1 = plain.u.size();
  const std::size_t c2 = c1 + plain.x.size();
  const std::size_t c3 = c2 + plain.v.size();
  const std::size_t c4 = c3 + plain.y.size();
  return is_stack_operational(m, plain.whole(), {c1, c2, c3, c4}, budget);
}

bool is_deduced(const Factorization& base, const Factorization& candidate,
                std::size_t max_power) {
  for (std::size_t n0 = 1; n0 <= max_power; ++n0) {
    if (candidate.whole() != base.assemble(n0)) continue;
    const std::size_t x_splits = base.x.empty() ? 1 : base.x.size() + 1;
    const std::size_t y_splits = base.y.empty() ? 1 : base.y.size() + 1;
    for (std::size_t xs = 0; xs < x_splits; ++xs) {
      const Word x1 = base.x.substr(0, xs);
      const Word x2 = base.x.substr(xs);
      bool u_ok = false;
      for (std::size_t k = 0; k <= max_power && !u_ok; ++k)
        u_ok = candidate.u == base.u + power(base.x, k) + x1;
      if (!u_ok) continue;
      bool x_ok = false;
      for (std::size_t pw = 0; pw <= max_power && !x_ok; ++pw)
        x_ok = candidate.x == power(x2 + x1, pw);
      if (!x_ok) continue;
      for (std::size_t ys = 0; ys < y_splits; ++ys) {
        const Word y1 = base.y.substr(0, ys);
        const Word y2 = base.y.substr(ys);
        bool y_ok = false;
        for (std::size_t q = 0; q <= max_power && !y_ok; ++q)
          y_ok = candidate.y == power(y2 + y1, q);
        if (!y_ok) continue;
        bool z_ok = false;
        for (std::size_t r = 0; r <= max_power && !z_ok; ++r)
          z_ok = candidate.z == y2 + power(base.y, r) + base.z;
        if (!z_ok) continue;
        for (std::size_t l = 0; l <= max_power; ++l)
          for (std::size_t mm = 0; mm <= max_power; ++mm)
            if (candidate.v == x2 + power(base.x, l) + base.v + power(base.y, mm) + y1)
              return true;
      }
    }
  }
  return false;
}

}  // namespace dcfl
