#include "dcfl/stack_history.hpp"

#include <algorithm>

namespace dcfl {

std::vector<std::size_t> StackHistory::heights() const {
  std::vector<std::size_t> out;
  out.reserve(stacks.size());
  for (const Word& s : stacks) out.push_back(s.size());
  return out;
}

StackHistory record_history(const Dpda& m, const Word& w, std::size_t budget) {
  for (const auto& [key, tgt] : m.transitions)
    if (!key.read)
      throw Error(ErrorKind::NotRealTime, "history needs one read per boundary");

  RunOptions opts;
  opts.budget = budget;
  RunOutcome out = run(m, w, opts);
  if (out.trace.size() != w.size() + 2)
    throw Error(ErrorKind::BadParameter, "run halted before consuming the whole word");

  StackHistory hist;
  hist.stacks.reserve(w.size() + 3);
  hist.states.reserve(w.size() + 3);
  hist.stacks.push_back(Word(1, m.bottom));
  hist.states.push_back(m.initial);
  for (const Move& mv : out.trace) {
    hist.stacks.push_back(mv.stack_after);
    hist.states.push_back(mv.to);
  }
  return hist;
}

bool pseudo_convex(const std::vector<std::size_t>& h, std::size_t t1, std::size_t t2) {
  if (t1 > t2 || t2 >= h.size())
    throw Error(ErrorKind::BadParameter, "block out of range");
  const long long h1 = static_cast<long long>(h[t1]);
  const long long h2 = static_cast<long long>(h[t2]);
  const long long width = static_cast<long long>(t2 - t1);
  for (std::size_t s = t1; s <= t2; ++s) {
    const long long lhs = (static_cast<long long>(h[s]) - h1) * width;
    const long long rhs = (h2 - h1) * static_cast<long long>(s - t1);
    if (lhs < rhs) return false;
  }
  return true;
}

BlockShape classify_block(const std::vector<std::size_t>& h, std::size_t t1, std::size_t t2) {
  if (t1 > t2 || t2 >= h.size())
    throw Error(ErrorKind::BadParameter, "block out of range");
  BlockShape shape;
  shape.flat = true;
  for (std::size_t s = t1; s < t2; ++s)
    if (h[s + 1] != h[s]) shape.flat = false;

  std::size_t split = t1;
  while (split < t2 && h[split + 1] > h[split]) ++split;
  shape.convex = true;
  for (std::size_t s = split; s < t2; ++s)
    if (h[s + 1] >= h[s]) shape.convex = false;

  shape.pseudo_convex = pseudo_convex(h, t1, t2);
  return shape;
}

std::vector<std::size_t> find_peaks(const std::vector<std::size_t>& h) {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i + 1 < h.size(); ++i)
    if (h[i - 1] < h[i] && h[i] > h[i + 1]) out.push_back(i);
  return out;
}

std::vector<std::size_t> find_pits(const std::vector<std::size_t>& h) {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i + 1 < h.size(); ++i)
    if (h[i - 1] > h[i] && h[i] < h[i + 1]) out.push_back(i);
  return out;
}

std::vector<Plateau> find_plateaus(const std::vector<std::size_t>& h) {
  std::vector<Plateau> out;
  std::size_t i = 0;
  while (i < h.size()) {
    std::size_t j = i;
    while (j + 1 < h.size() && h[j + 1] == h[i]) ++j;
    if (j > i) {
      Plateau p{i, j, false, false};
      bool left_higher = i == 0 || h[i - 1] > h[i];
      bool right_higher = j + 1 == h.size() || h[j + 1] > h[j];
      bool left_lower = i == 0 || h[i - 1] < h[i];
      bool right_lower = j + 1 == h.size() || h[j + 1] < h[j];
      p.basin = left_higher && right_higher;
      p.elevated = left_lower && right_lower;
      out.push_back(p);
    }
    i = j + 1;
  }
  return out;
}

namespace {

bool rests_low(const std::vector<Plateau>& plateaus, const std::vector<std::size_t>& pits,
               std::size_t b) {
  if (b == 0) return true;
  if (std::find(pits.begin(), pits.end(), b) != pits.end()) return true;
  for (const Plateau& p : plateaus)
    if (p.basin && p.begin == b) return true;
  return false;
}

}  // namespace

std::vector<Hill> find_hills(const std::vector<std::size_t>& h) {
  const std::vector<std::size_t> pits = find_pits(h);
  const std::vector<std::size_t> peaks = find_peaks(h);
  const std::vector<Plateau> plateaus = find_plateaus(h);

  std::vector<Hill> out;
  for (std::size_t t = 0; t + 1 < h.size(); ++t) {
    for (std::size_t u = t + 1; u < h.size(); ++u) {
      if (h[t] != h[u]) continue;
      bool interior_above = true;
      for (std::size_t s = t + 1; s < u && interior_above; ++s)
        if (h[s] <= h[t]) interior_above = false;
      if (!interior_above || u == t + 1) continue;

      std::size_t summits = 0;
      for (std::size_t p : peaks)
        if (t < p && p < u) ++summits;
      for (const Plateau& p : plateaus)
        if (p.elevated && t < p.begin && p.end < u) ++summits;
      if (summits != 1) continue;

      bool blocked = false;
      for (std::size_t p : pits)
        if (t < p && p < u) blocked = true;
      for (const Plateau& p : plateaus)
        if (p.basin && t <= p.begin && p.end <= u && p.begin != t && p.end != u) blocked = true;
      if (blocked) continue;

      if (rests_low(plateaus, pits, t) || rests_low(plateaus, pits, u))
        out.push_back({t, u});
    }
  }
  return out;
}

std::vector<Turn> turn_partition(const std::vector<std::size_t>& h, std::size_t from,
                                 std::size_t to) {
  if (from >= to || to >= h.size())
    throw Error(ErrorKind::BadParameter, "region out of range");

  std::vector<std::size_t> turning;
  for (std::size_t p : find_peaks(h))
    if (from < p && p < to) turning.push_back(p);
  for (const Plateau& p : find_plateaus(h))
    if (p.elevated && from < p.end && p.end < to) turning.push_back(p.end);
  std::sort(turning.begin(), turning.end());
  if (turning.empty())
    throw Error(ErrorKind::NoTurningPoint, "no peak or raised flat inside the region");

  std::vector<std::size_t> cuts{from};
  for (std::size_t k = 0; k + 1 < turning.size(); ++k) {
    std::size_t best = turning[k] + 1;
    for (std::size_t s = turning[k] + 1; s < turning[k + 1]; ++s)
      if (h[s] <= h[best]) best = s;
    cuts.push_back(best);
  }
  cuts.push_back(to);

  std::vector<Turn> out;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    Turn t;
    t.begin = cuts[k];
    t.end = cuts[k + 1];
    t.summit = turning[k];
    t.gain = static_cast<long long>(h[t.begin]) - static_cast<long long>(h[t.end]);
    out.push_back(t);
  }
  return out;
}

}  // namespace dcfl
