#include "dcfl/dfa.hpp"

#include "dcfl/errors.hpp"

namespace dcfl {

bool Dfa::accepts(const Word& w) const {
  std::uint32_t q = initial;
  for (Symbol s : w) {
    if (alphabet.find(s) == Word::npos) return false;
    auto it = transitions.find({q, s});
    if (it == transitions.end()) return false;
    q = it->second;
  }
  return accept_states.count(q) != 0;
}

Dfa dfa_block_form(const Word& order) {
  Dfa d;
  d.alphabet = order;
  for (std::size_t i = 0; i < order.size(); ++i) {
    d.state_names.push_back("block" + std::to_string(i));
    d.accept_states.insert(static_cast<std::uint32_t>(i));
  }
  if (order.empty()) {
    d.state_names.push_back("empty");
    d.accept_states.insert(0);
    return d;
  }
  for (std::uint32_t i = 0; i < order.size(); ++i)
    for (std::uint32_t j = i; j < order.size(); ++j)
      d.transitions[{i, order[j]}] = j;
  return d;
}

Dfa dfa_contains(const Word& alphabet, const Word& pattern) {
  if (pattern.empty()) throw Error(ErrorKind::BadParameter, "empty pattern");
  Dfa d;
  d.alphabet = alphabet;
  const std::size_t n = pattern.size();
  for (std::size_t i = 0; i <= n; ++i) d.state_names.push_back("seen" + std::to_string(i));
  d.accept_states.insert(static_cast<std::uint32_t>(n));

  // Longest proper border of each pattern prefix, for the fallback moves.
  std::vector<std::size_t> border(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t b = border[i - 1];
    while (b > 0 && pattern[i] != pattern[b]) b = border[b - 1];
    border[i] = (pattern[i] == pattern[b]) ? b + 1 : 0;
  }
  for (std::uint32_t q = 0; q < n; ++q) {
    for (Symbol s : alphabet) {
      std::size_t b = q;
      while (b > 0 && pattern[b] != s) b = border[b - 1];
      if (pattern[b] == s) ++b;
      d.transitions[{q, s}] = static_cast<std::uint32_t>(b);
    }
  }
  for (Symbol s : alphabet) d.transitions[{static_cast<std::uint32_t>(n), s}] =
      static_cast<std::uint32_t>(n);
  return d;
}

Dfa dfa_exactly_blocks(const Word& alphabet, Symbol sep, std::size_t blocks) {
  if (blocks == 0) throw Error(ErrorKind::BadParameter, "need at least one block");
  if (alphabet.find(sep) == Word::npos)
    throw Error(ErrorKind::BadParameter, "separator not in the alphabet");
  Dfa d;
  d.alphabet = alphabet;
  for (std::size_t i = 0; i < blocks; ++i) d.state_names.push_back("b" + std::to_string(i));
  d.accept_states.insert(static_cast<std::uint32_t>(blocks - 1));
  for (std::uint32_t i = 0; i < blocks; ++i) {
    for (Symbol s : alphabet) {
      if (s == sep) {
        if (i + 1 < blocks) d.transitions[{i, s}] = i + 1;
      } else {
        d.transitions[{i, s}] = i;
      }
    }
  }
  return d;
}

Dfa dfa_length_parity(const Word& alphabet, std::size_t residue, std::size_t modulus) {
  if (modulus == 0 || residue >= modulus)
    throw Error(ErrorKind::BadParameter, "residue must be below the modulus");
  Dfa d;
  d.alphabet = alphabet;
  for (std::size_t i = 0; i < modulus; ++i) d.state_names.push_back("mod" + std::to_string(i));
  d.accept_states.insert(static_cast<std::uint32_t>(residue));
  for (std::uint32_t i = 0; i < modulus; ++i)
    for (Symbol s : alphabet)
      d.transitions[{i, s}] = static_cast<std::uint32_t>((i + 1) % modulus);
  return d;
}

Dfa dfa_exactly_one(const Word& alphabet, Symbol marked) {
  if (alphabet.find(marked) == Word::npos)
    throw Error(ErrorKind::BadParameter, "marked symbol not in the alphabet");
  Dfa d;
  d.alphabet = alphabet;
  d.state_names = {"none", "one"};
  d.accept_states = {1};
  for (Symbol s : alphabet) {
    if (s == marked) {
      d.transitions[{0, s}] = 1;
    } else {
      d.transitions[{0, s}] = 0;
      d.transitions[{1, s}] = 1;
    }
  }
  return d;
}

Dfa dfa_universal(const Word& alphabet) {
  Dfa d;
  d.alphabet = alphabet;
  d.state_names = {"any"};
  d.accept_states = {0};
  for (Symbol s : alphabet) d.transitions[{0, s}] = 0;
  return d;
}

Dfa dfa_empty(const Word& alphabet) {
  Dfa d;
  d.alphabet = alphabet;
  d.state_names = {"dead"};
  for (Symbol s : alphabet) d.transitions[{0, s}] = 0;
  return d;
}

}  // namespace dcfl
