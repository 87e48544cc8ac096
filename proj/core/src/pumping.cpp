#include "dcfl/pumping.hpp"

#include <unordered_map>

#include "dcfl/errors.hpp"

namespace dcfl {

namespace {

struct Memo {
  const LanguageSpec* spec;
  std::size_t budget;
  std::unordered_map<Word, bool> cache;
  std::size_t calls = 0;

  bool operator()(const Word& w) {
    auto it = cache.find(w);
    if (it != cache.end()) return it->second;
    ++calls;
    bool v = spec->member(w, budget);
    cache.emplace(w, v);
    return v;
  }

  MemberFn fn() {
    return [this](const Word& w) { return (*this)(w); };
  }
};

void require_pair_members(Memo& mem, const Word& x_prime, const Word& y, const Word& z) {
  if (!mem(x_prime + y) || !mem(x_prime + z))
    throw Error(ErrorKind::BadParameter, "both strings must be members of the language");
}

template <class F>
bool each_interleaved_split(std::size_t length, std::size_t c, F&& visit) {
  for (std::size_t a = 0; a <= length; ++a) {
    const std::size_t window = std::min(c, length - a);
    for (std::size_t b = 0; b <= window; ++b)
      for (std::size_t d = 0; b + d <= window; ++d)
        for (std::size_t e = (b == 0 ? 1 : 0); b + d + e <= window; ++e)
          if (visit(a, b, d, e)) return true;
  }
  return false;
}

template <class F>
bool each_window_split(std::size_t length, std::size_t c, F&& visit) {
  for (std::size_t a = (length > c ? length - c : 0); a < length; ++a)
    for (std::size_t s = 1; a + s <= length; ++s)
      if (visit(a, s)) return true;
  return false;
}

std::optional<SplitWitness> interleaved_impl(Memo& mem, const Word& x_prime, const Word& y,
                                             const Word& z, std::size_t c, std::size_t i_max) {
  const MemberFn fn = mem.fn();
  std::optional<SplitWitness> hit;
  each_interleaved_split(x_prime.size(), c, [&](std::size_t a, std::size_t b, std::size_t d,
                                                std::size_t e) {
    std::array<Word, 5> parts{x_prime.substr(0, a), x_prime.substr(a, b), x_prime.substr(a + b, d),
                              x_prime.substr(a + b + d, e), x_prime.substr(a + b + d + e)};
    Factorization in_y{parts[0], parts[1], parts[2], parts[3], parts[4] + y};
    if (!pump_test(fn, in_y, i_max).ok) return false;
    Factorization in_z{parts[0], parts[1], parts[2], parts[3], parts[4] + z};
    if (!pump_test(fn, in_z, i_max).ok) return false;
    hit = SplitWitness{SplitKind::PrefixInterleaved, std::move(parts), {}, {}};
    return true;
  });
  return hit;
}

std::optional<SplitWitness> synced_impl(Memo& mem, const Word& x_prime, const Word& y,
                                        const Word& z, std::size_t c, std::size_t i_max) {
  const MemberFn fn = mem.fn();
  std::optional<SplitWitness> hit;
  each_window_split(x_prime.size(), c, [&](std::size_t a, std::size_t s) {
    const Word x1 = x_prime.substr(0, a);
    const Word x2 = x_prime.substr(a, s);
    const Word x3 = x_prime.substr(a + s);
    auto side = [&](const Word& tail) -> std::optional<std::array<Word, 3>> {
      for (std::size_t p = 0; p <= tail.size(); ++p)
        for (std::size_t q = 0; p + q <= tail.size(); ++q) {
          Factorization f{x1, x2, x3 + tail.substr(0, p), tail.substr(p, q), tail.substr(p + q)};
          if (pump_test(fn, f, i_max).ok)
            return std::array<Word, 3>{tail.substr(0, p), tail.substr(p, q), tail.substr(p + q)};
        }
      return std::nullopt;
    };
    auto y_side = side(y);
    if (!y_side) return false;
    auto z_side = side(z);
    if (!z_side) return false;
    hit = SplitWitness{SplitKind::PrefixSuffixSynced, {x1, x2, x3, Word{}, Word{}}, *y_side,
                       *z_side};
    return true;
  });
  return hit;
}

}  // namespace

std::optional<SplitWitness> prefix_interleaved_split(const LanguageSpec& spec, const Word& x_prime,
                                                     const Word& y, const Word& z, std::size_t c,
                                                     std::size_t i_max, std::size_t budget) {
  if (x_prime.size() <= c)
    throw Error(ErrorKind::BadParameter, "the shared prefix must be longer than the constant");
  Memo mem{&spec, budget};
  require_pair_members(mem, x_prime, y, z);
  return interleaved_impl(mem, x_prime, y, z, c, i_max);
}

std::optional<SplitWitness> prefix_suffix_synced_split(const LanguageSpec& spec,
                                                       const Word& x_prime, const Word& y,
                                                       const Word& z, std::size_t c,
                                                       std::size_t i_max, std::size_t budget) {
  if (x_prime.size() <= c)
    throw Error(ErrorKind::BadParameter, "the shared prefix must be longer than the constant");
  Memo mem{&spec, budget};
  require_pair_members(mem, x_prime, y, z);
  return synced_impl(mem, x_prime, y, z, c, i_max);
}

std::size_t count_interleaved_splits(std::size_t length, std::size_t c) {
  std::size_t n = 0;
  each_interleaved_split(length, c, [&](std::size_t, std::size_t, std::size_t, std::size_t) {
    ++n;
    return false;
  });
  return n;
}

std::size_t count_window_splits(std::size_t length, std::size_t c) {
  std::size_t n = 0;
  each_window_split(length, c, [&](std::size_t, std::size_t) {
    ++n;
    return false;
  });
  return n;
}

std::optional<FamilyWitness> shared_prefix_witness_search(const SharedPrefixFamily& family) {
  if (family.ys.size() < 2)
    throw Error(ErrorKind::BadParameter, "the family needs at least two suffixes");
  if (family.x.size() <= family.c)
    throw Error(ErrorKind::BadParameter, "the shared prefix must be longer than the constant");
  Memo mem{&family.spec, family.budget};
  for (const Word& suffix : family.ys) {
    if (suffix.empty()) throw Error(ErrorKind::BadParameter, "family suffixes must be nonempty");
    if (!mem(family.x + suffix))
      throw Error(ErrorKind::BadParameter, "every family string must be a member");
  }
  for (std::size_t j1 = 0; j1 < family.ys.size(); ++j1) {
    for (std::size_t j2 = j1 + 1; j2 < family.ys.size(); ++j2) {
      const Word w1 = family.x + family.ys[j1];
      const Word w2 = family.x + family.ys[j2];
      const std::size_t limit = std::min(w1.size(), w2.size()) - 1;
      std::size_t agree = 0;
      while (agree < limit && w1[agree] == w2[agree]) ++agree;
      for (std::size_t len = family.c + 1; len <= std::min(limit, agree); ++len) {
        const Word x_prime = w1.substr(0, len);
        const Word y = w1.substr(len);
        const Word z = w2.substr(len);
        auto split = interleaved_impl(mem, x_prime, y, z, family.c, family.i_max);
        if (!split) split = synced_impl(mem, x_prime, y, z, family.c, family.i_max);
        if (split) return FamilyWitness{j1, j2, x_prime, y, z, *split};
      }
    }
  }
  return std::nullopt;
}

namespace {

struct SiteScan {
  Memo& mem;
  const SiteBounds& bounds;
  // pump-then-grid outcome per factorization: f pump failed, d degenerate,
  // i inconclusive grid, y nondegenerate
  std::unordered_map<Word, char> outcomes;

  char check(const Factorization& f) {
    Word key;
    key.reserve(f.u.size() + f.x.size() + f.v.size() + f.y.size() + f.z.size() + 4);
    key += f.u;
    key += Word(1, U'\x01');
    key += f.x;
    key += Word(1, U'\x01');
    key += f.v;
    key += Word(1, U'\x01');
    key += f.y;
    key += Word(1, U'\x01');
    key += f.z;
    auto it = outcomes.find(key);
    if (it != outcomes.end()) return it->second;
    const MemberFn fn = mem.fn();
    char r = 'f';
    if (pump_test(fn, f, bounds.pump_i_max).ok) {
      switch (nondegenerate_bounded(fn, f, bounds.nd_i_max, bounds.nd_j_max)) {
        case TriState::Yes: r = 'y'; break;
        case TriState::No: r = 'd'; break;
        case TriState::Inconclusive: r = 'i'; break;
      }
    }
    outcomes.emplace(std::move(key), r);
    return r;
  }

  bool tally(ConditionReport& rep, const Factorization& f) {
    ++rep.candidates;
    switch (check(f)) {
      case 'f': ++rep.pump_failed; return false;
      case 'd': ++rep.nd_no; return false;
      case 'i': ++rep.nd_inconclusive; return false;
      default: ++rep.nd_yes; return true;
    }
  }
};

PumpSite as_site(const Factorization& f) { return PumpSite{f.u, f.x, f.v, f.y, f.z}; }

void close_report(ConditionReport& rep, bool found) {
  if (found)
    rep.verdict = Verdict::HoldsWithWitness;
  else if (rep.nd_inconclusive > 0)
    rep.verdict = Verdict::Inconclusive;
  else
    rep.verdict = Verdict::FailsExhaustively;
}

// First nondegenerate site anywhere in the word.
std::optional<PumpSite> scan_whole(SiteScan& scan, ConditionReport& rep, const Word& w) {
  const std::size_t n = w.size();
  for (std::size_t a = 0; a <= n; ++a)
    for (std::size_t b = 1; a + b <= n; ++b)
      for (std::size_t d = 0; a + b + d <= n; ++d)
        for (std::size_t e = 1; a + b + d + e <= n; ++e) {
          Factorization f{w.substr(0, a), w.substr(a, b), w.substr(a + b, d),
                          w.substr(a + b + d, e), w.substr(a + b + d + e)};
          if (scan.tally(rep, f)) return as_site(f);
        }
  return std::nullopt;
}

// First site whose pump strings both sit inside the prefix; the suffix rides
// along in the closing segment.
std::optional<PumpSite> scan_prefix(SiteScan& scan, ConditionReport& rep, const Word& prefix,
                                    const Word& tail) {
  const std::size_t n = prefix.size();
  for (std::size_t a = 0; a <= n; ++a)
    for (std::size_t b = 1; a + b <= n; ++b)
      for (std::size_t d = 0; a + b + d <= n; ++d)
        for (std::size_t e = 1; a + b + d + e <= n; ++e) {
          Factorization f{prefix.substr(0, a), prefix.substr(a, b), prefix.substr(a + b, d),
                          prefix.substr(a + b + d, e), prefix.substr(a + b + d + e) + tail};
          if (scan.tally(rep, f)) return as_site(f);
        }
  return std::nullopt;
}

// First site pairing a piece of the prefix with a piece of the suffix.
std::optional<PumpSite> scan_crossing(SiteScan& scan, ConditionReport& rep, const Word& prefix,
                                      const Word& tail) {
  const std::size_t n = prefix.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t s = 1; a + s <= n; ++s)
      for (std::size_t p = 0; p <= tail.size(); ++p)
        for (std::size_t q = 1; p + q <= tail.size(); ++q) {
          Factorization f{prefix.substr(0, a), prefix.substr(a, s),
                          prefix.substr(a + s) + tail.substr(0, p), tail.substr(p, q),
                          tail.substr(p + q)};
          if (scan.tally(rep, f)) return as_site(f);
        }
  return std::nullopt;
}

std::optional<PumpSite> scan_border_a(SiteScan& scan, ConditionReport& rep, const Word& prefix,
                                      const Word& u) {
  const std::size_t n = prefix.size();
  for (std::size_t a = 0; a < n; ++a) {
    const Word x1 = prefix.substr(0, a);
    const Word x2 = prefix.substr(a);
    for (std::size_t p1 = 1; p1 <= u.size(); ++p1)
      for (std::size_t p2 = p1; p2 <= u.size(); ++p2)
        for (std::size_t p3 = p2 + 1; p3 <= u.size(); ++p3) {
          Factorization f{x1, x2 + u.substr(0, p1), u.substr(p1, p2 - p1), u.substr(p2, p3 - p2),
                          u.substr(p3)};
          if (scan.tally(rep, f)) return as_site(f);
        }
  }
  return std::nullopt;
}

std::optional<PumpSite> scan_border_b(SiteScan& scan, ConditionReport& rep, const Word& prefix,
                                      const Word& u) {
  const std::size_t n = prefix.size();
  for (std::size_t a = 0; a <= n; ++a)
    for (std::size_t b = 1; a + b <= n; ++b)
      for (std::size_t d = 0; a + b + d < n; ++d)
        for (std::size_t p1 = 1; p1 <= u.size(); ++p1) {
          Factorization f{prefix.substr(0, a), prefix.substr(a, b), prefix.substr(a + b, d),
                          prefix.substr(a + b + d) + u.substr(0, p1), u.substr(p1)};
          if (scan.tally(rep, f)) return as_site(f);
        }
  return std::nullopt;
}

std::optional<PumpSite> scan_border_c(SiteScan& scan, ConditionReport& rep, const Word& prefix,
                                      const Word& u) {
  const std::size_t n = u.size();
  for (std::size_t a = 0; a <= n; ++a)
    for (std::size_t b = 1; a + b <= n; ++b)
      for (std::size_t d = 0; a + b + d <= n; ++d)
        for (std::size_t e = 1; a + b + d + e <= n; ++e) {
          Factorization f{prefix + u.substr(0, a), u.substr(a, b), u.substr(a + b, d),
                          u.substr(a + b + d, e), u.substr(a + b + d + e)};
          if (scan.tally(rep, f)) return as_site(f);
        }
  return std::nullopt;
}

struct CutSite {
  std::array<std::size_t, 4> cuts{};
  Factorization f;
};

// Sites of prefix+u shaped (x2, u2): cut pair inside the prefix plus a
// three-way split of u. cuts = {c1, c2, p, q}.
std::vector<CutSite> collect_head_sites(SiteScan& scan, ConditionReport& rep, const Word& prefix,
                                        const Word& u) {
  std::vector<CutSite> out;
  const std::size_t n = prefix.size();
  for (std::size_t c1 = 0; c1 < n; ++c1)
    for (std::size_t c2 = c1 + 1; c2 <= n; ++c2)
      for (std::size_t p = 0; p <= u.size(); ++p)
        for (std::size_t q = 1; p + q <= u.size(); ++q) {
          Factorization f{prefix.substr(0, c1), prefix.substr(c1, c2 - c1),
                          prefix.substr(c2) + u.substr(0, p), u.substr(p, q), u.substr(p + q)};
          if (scan.tally(rep, f)) out.push_back({{c1, c2, p, q}, f});
        }
  return out;
}

// Sites of prefix+tail whose pump strings are two disjoint pieces of the
// prefix at cuts {c3, c4, c5, c6}.
std::vector<CutSite> collect_prefix_pair_sites(SiteScan& scan, ConditionReport& rep,
                                               const Word& prefix, const Word& tail) {
  std::vector<CutSite> out;
  const std::size_t n = prefix.size();
  for (std::size_t c3 = 0; c3 < n; ++c3)
    for (std::size_t c4 = c3 + 1; c4 <= n; ++c4)
      for (std::size_t c5 = c4; c5 < n; ++c5)
        for (std::size_t c6 = c5 + 1; c6 <= n; ++c6) {
          Factorization f{prefix.substr(0, c3), prefix.substr(c3, c4 - c3),
                          prefix.substr(c4, c5 - c4), prefix.substr(c5, c6 - c5),
                          prefix.substr(c6) + tail};
          if (scan.tally(rep, f)) out.push_back({{c3, c4, c5, c6}, f});
        }
  return out;
}

}  // namespace

Verdict FiveConditionReport::border_verdict() const {
  bool inconclusive = false;
  for (const ConditionReport* r : {&border_a, &border_b, &border_c}) {
    if (r->verdict == Verdict::HoldsWithWitness) return Verdict::HoldsWithWitness;
    if (r->verdict == Verdict::Inconclusive) inconclusive = true;
  }
  return inconclusive ? Verdict::Inconclusive : Verdict::FailsExhaustively;
}

Verdict FiveConditionReport::paired_verdict() const {
  if (paired_a.verdict == Verdict::Vacuous) return Verdict::Vacuous;
  bool inconclusive = false;
  for (const ConditionReport* r : {&paired_a, &paired_b}) {
    if (r->verdict == Verdict::HoldsWithWitness) return Verdict::HoldsWithWitness;
    if (r->verdict == Verdict::Inconclusive) inconclusive = true;
  }
  return inconclusive ? Verdict::Inconclusive : Verdict::FailsExhaustively;
}

bool FiveConditionReport::any_holds() const {
  if (no_site.verdict == Verdict::HoldsWithWitness) return true;
  if (both_in_prefix.verdict == Verdict::HoldsWithWitness) return true;
  if (crossing.verdict == Verdict::HoldsWithWitness) return true;
  if (border_verdict() == Verdict::HoldsWithWitness) return true;
  const Verdict paired = paired_verdict();
  return paired == Verdict::HoldsWithWitness || paired == Verdict::Vacuous;
}

FiveConditionReport five_condition_check(const LanguageSpec& spec, const Word& x_prime,
                                         const Word& y, const Word& z, const SiteBounds& bounds) {
  if (x_prime.empty() || y.empty() || z.empty())
    throw Error(ErrorKind::BadParameter, "the prefix and both suffixes must be nonempty");
  Memo mem{&spec, bounds.budget};
  require_pair_members(mem, x_prime, y, z);
  SiteScan scan{mem, bounds, {}};
  FiveConditionReport rep;

  {
    auto first = scan_whole(scan, rep.no_site, x_prime + y);
    auto second = scan_whole(scan, rep.no_site, x_prime + z);
    if (first && second) {
      rep.no_site.verdict = Verdict::FailsExhaustively;
      rep.no_site.evidence = {*first, *second};
      rep.no_site.note = "both strings have nondegenerate sites";
    } else {
      rep.no_site.verdict =
          rep.no_site.nd_inconclusive > 0 ? Verdict::Inconclusive : Verdict::HoldsWithWitness;
      rep.no_site.note = first ? "no site found in the second string"
                               : (second ? "no site found in the first string"
                                         : "no site found in either string");
    }
  }

  {
    auto y_side = scan_prefix(scan, rep.both_in_prefix, x_prime, y);
    std::optional<PumpSite> z_side;
    if (y_side) z_side = scan_prefix(scan, rep.both_in_prefix, x_prime, z);
    bool found = y_side && z_side;
    if (found) rep.both_in_prefix.evidence = {*y_side, *z_side};
    close_report(rep.both_in_prefix, found);
    if (!found)
      rep.both_in_prefix.note =
          y_side ? "no in-prefix site for the second string" : "no in-prefix site for the first string";
  }

  {
    auto y_side = scan_crossing(scan, rep.crossing, x_prime, y);
    std::optional<PumpSite> z_side;
    if (y_side) z_side = scan_crossing(scan, rep.crossing, x_prime, z);
    bool found = y_side && z_side;
    if (found) rep.crossing.evidence = {*y_side, *z_side};
    close_report(rep.crossing, found);
    if (!found)
      rep.crossing.note =
          y_side ? "no crossing site for the second string" : "no crossing site for the first string";
  }

  using BorderScan = std::optional<PumpSite> (*)(SiteScan&, ConditionReport&, const Word&,
                                                 const Word&);
  const std::array<std::pair<ConditionReport*, BorderScan>, 3> borders{
      {{&rep.border_a, &scan_border_a}, {&rep.border_b, &scan_border_b},
       {&rep.border_c, &scan_border_c}}};
  for (auto& [report, scan_fn] : borders) {
    bool found = false;
    for (int pick = 0; pick < 2 && !found; ++pick) {
      const Word& u = pick == 0 ? y : z;
      if (auto site = scan_fn(scan, *report, x_prime, u)) {
        report->evidence = {*site};
        report->note = pick == 0 ? "u = y" : "u = z";
        found = true;
      }
    }
    close_report(*report, found);
  }

  if (y == z) {
    rep.paired_a.verdict = Verdict::Vacuous;
    rep.paired_b.verdict = Verdict::Vacuous;
    rep.paired_a.note = "vacuous: the suffixes coincide";
    rep.paired_b.note = rep.paired_a.note;
  } else {
    bool found_a = false;
    for (int pick = 0; pick < 2 && !found_a; ++pick) {
      const Word& u = pick == 0 ? y : z;
      const Word& op = pick == 0 ? z : y;
      auto head = collect_head_sites(scan, rep.paired_a, x_prime, u);
      auto pair = collect_prefix_pair_sites(scan, rep.paired_a, x_prime, op);
      for (const CutSite& h : head) {
        for (const CutSite& p : pair) {
          if (h.cuts[1] <= p.cuts[0]) {
            rep.paired_a.evidence = {as_site(h.f), as_site(p.f)};
            rep.paired_a.note = pick == 0 ? "u = y" : "u = z";
            found_a = true;
            break;
          }
        }
        if (found_a) break;
      }
    }
    close_report(rep.paired_a, found_a);

    bool found_b = false;
    for (int pick = 0; pick < 2 && !found_b; ++pick) {
      const Word& u = pick == 0 ? y : z;
      const Word& op = pick == 0 ? z : y;
      // main pairing: a late in-prefix pump string against an early pair
      // whose second entry overlaps the shared boundary cut
      auto head = collect_head_sites(scan, rep.paired_b, x_prime, u);
      auto pair = collect_prefix_pair_sites(scan, rep.paired_b, x_prime, op);
      for (const CutSite& h : head) {
        for (const CutSite& p : pair) {
          if (p.cuts[2] <= h.cuts[0] && h.cuts[0] <= p.cuts[3] && p.cuts[3] <= h.cuts[1]) {
            rep.paired_b.evidence = {as_site(h.f), as_site(p.f)};
            rep.paired_b.note = pick == 0 ? "u = y, main pairing" : "u = z, main pairing";
            found_b = true;
            break;
          }
        }
        if (found_b) break;
      }
      if (found_b) break;
      // alternate pairing: the two pieces sit strictly left of the head cut
      for (const CutSite& h : head) {
        for (const CutSite& p : pair) {
          if (p.cuts[3] <= h.cuts[0]) {
            rep.paired_b.evidence = {as_site(h.f), as_site(p.f)};
            rep.paired_b.note = pick == 0 ? "u = y, alternate pairing" : "u = z, alternate pairing";
            found_b = true;
            break;
          }
        }
        if (found_b) break;
      }
    }
    close_report(rep.paired_b, found_b);
  }

  rep.member_calls = mem.calls;
  return rep;
}

boost::multiprecision::cpp_int pumping_constant_upper_bound(const Dpda& m) {
  auto report = validate(m);
  if (!report.ok())
    throw Error(ErrorKind::MalformedMachine, report.joined());
  boost::multiprecision::cpp_int q{m.size()};
  boost::multiprecision::cpp_int exponent = 6 * boost::multiprecision::pow(q, 6);
  return boost::multiprecision::cpp_int(1) << exponent.convert_to<unsigned long long>();
}

}  // namespace dcfl
