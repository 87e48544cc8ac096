#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "dcfl/symbols.hpp"

namespace dcfl {

// Plain DFA used for the regular sides of language expressions. The
// transition table may be partial; a missing entry is an implicit dead state,
// and symbols outside the alphabet reject outright.
struct Dfa {
  std::vector<std::string> state_names;
  Word alphabet;
  std::uint32_t initial = 0;
  std::set<std::uint32_t> accept_states;
  std::map<std::pair<std::uint32_t, Symbol>, std::uint32_t> transitions;

  bool accepts(const Word& w) const;
};

// a1* a2* ... ak* for the distinct symbols of `order`.
Dfa dfa_block_form(const Word& order);

// Words containing `pattern` as a factor.
Dfa dfa_contains(const Word& alphabet, const Word& pattern);

// Words with exactly `blocks` maximal separator-free segments, i.e. exactly
// blocks-1 occurrences of `sep`. Blocks may be empty.
Dfa dfa_exactly_blocks(const Word& alphabet, Symbol sep, std::size_t blocks);

// Words whose length is `residue` modulo `modulus`.
Dfa dfa_length_parity(const Word& alphabet, std::size_t residue, std::size_t modulus = 2);

// Words with exactly one occurrence of `marked`.
Dfa dfa_exactly_one(const Word& alphabet, Symbol marked);

Dfa dfa_universal(const Word& alphabet);
Dfa dfa_empty(const Word& alphabet);

}  // namespace dcfl
