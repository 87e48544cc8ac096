#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

#include "dcfl/iterative.hpp"
#include "dcfl/language.hpp"

namespace dcfl {

// Both harnesses work on a pair of member strings x'y and x'z sharing the
// prefix x'. A factorization found by a search is re-checkable: its length
// constraints hold and its pump tests pass when re-executed with the same
// bounds. Searches enumerate splits position-major, size-minor, so identical
// inputs always yield the identical witness.

// ---------------------------------------------------------------------------
// Two-condition harness over a shared prefix.

enum class SplitKind { PrefixInterleaved, PrefixSuffixSynced };

// PrefixInterleaved: x' = x1 x2 x3 x4 x5 with |x2 x4| >= 1 and |x2 x3 x4| <= c;
// (x2, x4) pumps in both x'y and x'z. PrefixSuffixSynced: x' = x1 x2 x3 with
// |x2| >= 1 and |x2 x3| <= c, plus three-way splits of y and z; (x2, y2) pumps
// in x'y and (x2, z2) pumps in x'z.
struct SplitWitness {
  SplitKind which = SplitKind::PrefixInterleaved;
  std::array<Word, 5> x_parts;
  std::array<Word, 3> y_parts;
  std::array<Word, 3> z_parts;
};

// First admissible five-way split of x' whose (x2, x4) passes pump_test in
// both suffix contexts, or nothing after exhausting the window. Throws
// Error(BadParameter) unless |x'| > c and both x'y and x'z are members.
std::optional<SplitWitness> prefix_interleaved_split(const LanguageSpec& spec, const Word& x_prime,
                                                     const Word& y, const Word& z, std::size_t c,
                                                     std::size_t i_max, std::size_t budget = 0);

// First (x1,x2,x3) suffix-window split of x' admitting a y-split and a
// z-split whose synchronized pumps both pass. Same preconditions.
std::optional<SplitWitness> prefix_suffix_synced_split(const LanguageSpec& spec,
                                                       const Word& x_prime, const Word& y,
                                                       const Word& z, std::size_t c,
                                                       std::size_t i_max, std::size_t budget = 0);

// Number of five-way splits an exhausted prefix_interleaved_split visits for
// a prefix of the given length, and number of (x1,x2,x3) window splits the
// synced search visits. Tests compare these against closed forms.
std::size_t count_interleaved_splits(std::size_t length, std::size_t c);
std::size_t count_window_splits(std::size_t length, std::size_t c);

// A family x·ys[i] of member strings, all sharing the prefix x. For a
// language that is a d-fold union, d+1 suffixes force two indices to land in
// the same component, and some common-prefix split of that pair must admit
// one of the two split kinds.
struct SharedPrefixFamily {
  LanguageSpec spec;
  std::size_t c = 0;
  Word x;
  std::vector<Word> ys;
  std::size_t i_max = 3;
  std::size_t budget = 0;
};

struct FamilyWitness {
  std::size_t j1 = 0, j2 = 0;
  Word x_prime, y, z;
  SplitWitness split;
};

// Scans index pairs j1 < j2, then common prefixes x' of x·ys[j1] and x·ys[j2]
// with |x'| > c leaving both suffixes nonempty, trying the interleaved split
// then the synced split. First hit wins. Empty suffixes, non-member strings,
// or |x| <= c throw Error(BadParameter). No hit returns nothing: evidence
// against the (spec, c) hypothesis at these bounds.
std::optional<FamilyWitness> shared_prefix_witness_search(const SharedPrefixFamily& family);

// ---------------------------------------------------------------------------
// Five-condition harness built on nondegenerate pumping sites.

// One pumping site inside the word u + x + v + y + z: (x, y) passes
// pump_test and nondegenerate_bounded says Yes at the bounds used.
struct PumpSite {
  Word u, x, v, y, z;

  Factorization factorization() const { return Factorization{u, x, v, y, z}; }
};

enum class Verdict { HoldsWithWitness, FailsExhaustively, Inconclusive, Vacuous };

struct ConditionReport {
  Verdict verdict = Verdict::Inconclusive;
  std::vector<PumpSite> evidence;
  std::size_t candidates = 0;
  std::size_t pump_failed = 0;
  std::size_t nd_yes = 0;
  std::size_t nd_no = 0;
  std::size_t nd_inconclusive = 0;
  std::string note;
};

struct SiteBounds {
  std::size_t pump_i_max = 2;
  std::size_t nd_i_max = 2;
  std::size_t nd_j_max = 2;
  std::size_t budget = 0;
};

// Report over the five conditions any pair of members x'y, x'z of a finite
// union of deterministic context-free languages must satisfy. Conditions:
//   no_site        either x'y or x'z has no nondegenerate site at all;
//                  FailsExhaustively here means both strings produced one.
//   both_in_prefix independent sites for both strings lie inside x'.
//   crossing       sites (x2,y2) for x'y and (x2,z2) for x'z cross the
//                  prefix/suffix border.
//   border_a/b/c   one string u in {y,z} gives a site straddling the border
//                  (a: pump strings x2·u1 and u3; b: x2 and x4·u1) or fully
//                  inside u (c: u2 and u4).
//   paired_a/b     a seven-way split of x' ties a site of x'u to a site of
//                  x'u_op; b also tries its alternate pairing. Vacuous when
//                  y equals z.
// A sub-condition that finds no witness is FailsExhaustively when every
// candidate resolved, Inconclusive when some nondegeneracy grid was. All
// searches skip factorizations with an empty pump string, which can never be
// nondegenerate.
struct FiveConditionReport {
  ConditionReport no_site;
  ConditionReport both_in_prefix;
  ConditionReport crossing;
  ConditionReport border_a, border_b, border_c;
  ConditionReport paired_a, paired_b;
  std::size_t member_calls = 0;

  Verdict border_verdict() const;
  Verdict paired_verdict() const;
  bool any_holds() const;
};

// Evaluates all five conditions with bounded searches. Throws
// Error(BadParameter) when x', y or z is empty or a string is not a member.
FiveConditionReport five_condition_check(const LanguageSpec& spec, const Word& x_prime,
                                         const Word& y, const Word& z,
                                         const SiteBounds& bounds = {});

// ---------------------------------------------------------------------------

// The constant 2^(6|Q|^6) for a machine with |Q| states: an upper bound on
// the prefix length forcing a state-stack repetition. Informational only;
// never used as a search bound. Throws Error(MalformedMachine) on an invalid
// machine.
boost::multiprecision::cpp_int pumping_constant_upper_bound(const Dpda& m);

}  // namespace dcfl
