#include "dcfl/symbols.hpp"

#include <algorithm>

namespace dcfl {

std::string to_utf8(Symbol s) {
  std::string out;
  char32_t c = s;
  if (c < 0x80) {
    out += static_cast<char>(c);
  } else if (c < 0x800) {
    out += static_cast<char>(0xC0 | (c >> 6));
    out += static_cast<char>(0x80 | (c & 0x3F));
  } else if (c < 0x10000) {
    out += static_cast<char>(0xE0 | (c >> 12));
    out += static_cast<char>(0x80 | ((c >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (c & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (c >> 18));
    out += static_cast<char>(0x80 | ((c >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((c >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (c & 0x3F));
  }
  return out;
}

std::string to_utf8(const Word& w) {
  std::string out;
  out.reserve(w.size());
  for (Symbol s : w) out += to_utf8(s);
  return out;
}

Word from_utf8(std::string_view s) {
  Word out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    unsigned char b0 = static_cast<unsigned char>(s[i]);
    std::size_t len;
    char32_t c;
    if (b0 < 0x80) {
      len = 1;
      c = b0;
    } else if ((b0 & 0xE0) == 0xC0) {
      len = 2;
      c = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
      len = 3;
      c = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
      len = 4;
      c = b0 & 0x07;
    } else {
      throw std::invalid_argument("malformed UTF-8 at byte " + std::to_string(i));
    }
    if (i + len > s.size()) throw std::invalid_argument("truncated UTF-8 sequence");
    for (std::size_t k = 1; k < len; ++k) {
      unsigned char b = static_cast<unsigned char>(s[i + k]);
      if ((b & 0xC0) != 0x80) throw std::invalid_argument("malformed UTF-8 continuation");
      c = (c << 6) | (b & 0x3F);
    }
    out += c;
    i += len;
  }
  return out;
}

Word mark(const Word& w) {
  Word out;
  out.reserve(w.size() + 2);
  out += kLeftMarker;
  out += w;
  out += kRightMarker;
  return out;
}

Word strip_placeholders(const Word& w) {
  Word out = w;
  out.erase(std::remove(out.begin(), out.end(), kPlaceholder), out.end());
  return out;
}

}  // namespace dcfl
