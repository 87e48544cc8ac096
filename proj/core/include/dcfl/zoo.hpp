#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "dcfl/dpda.hpp"
#include "dcfl/language.hpp"

namespace dcfl {

// Parameters for the parameterized families. Fields a family does not use are
// ignored; out-of-range values raise Error(BadParameter).
struct ZooParams {
  int d = 2;  // number of paired blocks, or union width
  int k = 2;  // chain length, block count, or similar secondary index
  int n = 4;  // scale used by witness_strings
};

// A catalogued language: an executable definition (the predicate) and, where
// one is known, a machine decomposition to hold against it.
struct ZooEntry {
  std::string name;
  Word alphabet;
  std::string description;
  std::function<bool(const Word&)> predicate;
  LanguagePtr spec;                   // null when no decomposition is catalogued
  std::size_t validation_length = 8;  // default exhaustive-check length
};

// Builds one entry of the named family. Families and the parameters they read:
//   "anbncn"                          equal runs a^n b^n c^n
//   "ld" (d), "ld-le" (d), "ld-gt" (d)  paired block counts: all equal,
//                                       all bounded, some exceeding
//   "npal-blocks" (d), "npal-match" (d) 2d marked binary blocks with every /
//                                       some second-half block the reversal
//                                       of its partner
//   "l-union" (d)                     a^n b^(kn) for some k in [1,d]
//   "hibbard" (k), "hibbard-prime" (k)  chained block comparisons
//   "pal", "npal", "odd", "pal-complement"  even-length palindromes and friends
//   "form-marked", "mpal-marked", "npal-marked"  double-marker block languages
//   "dup-c", "mismatch-c"             equal / differing halves around one c
// Ranges: d in [1,4], k in [2,4] for the chained families.
ZooEntry build_entry(const std::string& family, const ZooParams& params = {});

// The fixed catalogue: every family above at its standard parameters.
std::vector<ZooEntry> standard_entries();

// Every distinct pushdown machine appearing in the standard entries' specs,
// labelled "<entry>-<component>".
std::vector<std::pair<std::string, Dpda>> standard_machines();

struct Disagreement {
  Word input;
  bool predicate_value = false;
  bool spec_value = false;
};

struct AgreementReport {
  std::size_t checked = 0;
  std::vector<Disagreement> disagreements;
  bool ok() const { return disagreements.empty(); }
};

// Compares predicate and spec on every word up to max_len (the entry's
// validation_length when 0) and records each disagreement. Requires a spec.
AgreementReport cross_validate(const ZooEntry& entry, std::size_t max_len = 0);

// Strings the membership arguments for a family are built from:
//   "l-union" (d, n)       x = a^n and y^(i) = b^(in) for i in [1,d]
//   "ld-gt" (d, n)         x = a_1^n..a_d^(dn) and y^(k) with one b-run short
//   "npal-match" (d, n)    x = w_1#..#w_d# and y^(i) with v_i = reverse(w_i)
//   "pal-blocks" (k, n)    w_t = (0^n 1^n)^t 0^n for t in [1,k]
//   "hibbard-quadruple" (n)  the four one-block variants around a^n b^n c^n
//   "hibbard-chain" (k, n)   one chain-valid member of hibbard-k
std::vector<Word> witness_strings(const std::string& family, const ZooParams& params);

}  // namespace dcfl
