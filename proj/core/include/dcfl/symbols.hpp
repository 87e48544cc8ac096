#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dcfl {

// Input and stack symbols are Unicode code points so that machine alphabets
// can use the cent sign, the middle-dot placeholder, and subscripted letters
// without collision with ordinary ASCII input.
using Symbol = char32_t;
using Word = std::u32string;

inline constexpr Symbol kLeftMarker = U'¢';   // ¢, prepended to input
inline constexpr Symbol kRightMarker = U'$';       // appended to input
inline constexpr Symbol kPlaceholder = U'·';  // ·, stands for a skipped-input move

// Minimal UTF-8 codec. Machine files and CLI arguments arrive as UTF-8;
// everything internal is code points.
std::string to_utf8(const Word& w);
std::string to_utf8(Symbol s);
Word from_utf8(std::string_view s);  // throws std::invalid_argument on malformed input

// Convenience for building words in code.
inline Word lit(const char* utf8) { return from_utf8(utf8); }

// ¢w$ for a plain input word.
Word mark(const Word& w);

// Removes every placeholder symbol.
Word strip_placeholders(const Word& w);

// Calls fn on every word over `alphabet` of length at most `max_len`, in
// length order and then lexicographic by alphabet position. Stops early if fn
// returns false; fn may also return void.
template <class Fn>
void enumerate_words(const Word& alphabet, std::size_t max_len, Fn&& fn) {
  auto visit = [&](const Word& w) {
    if constexpr (std::is_void_v<decltype(fn(w))>) {
      fn(w);
      return true;
    } else {
      return static_cast<bool>(fn(w));
    }
  };
  if (!visit(Word{})) return;
  if (alphabet.empty()) return;
  std::vector<std::size_t> idx;
  Word w;
  for (std::size_t len = 1; len <= max_len; ++len) {
    idx.assign(len, 0);
    w.assign(len, alphabet[0]);
    while (true) {
      if (!visit(w)) return;
      bool advanced = false;
      for (std::size_t i = len; i-- > 0;) {
        if (++idx[i] < alphabet.size()) {
          w[i] = alphabet[idx[i]];
          advanced = true;
          break;
        }
        idx[i] = 0;
        w[i] = alphabet[0];
      }
      if (!advanced) break;
    }
  }
}

}  // namespace dcfl
