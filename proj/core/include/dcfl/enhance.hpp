#pragma once

#include "dcfl/dpda.hpp"

namespace dcfl {

// Real-time variant of m over the alphabet extended with the placeholder.
// Every epsilon move becomes a read of the placeholder, and a fresh rejecting
// state catches the mismatches: a real symbol where m computed silently, or a
// placeholder where m wanted a symbol. The construction keeps the restricted
// move shape when m has it.
Dpda epsilon_enhance(const Dpda& m);

// The one word over the extended alphabet that shadows m's run on x: x with a
// placeholder inserted for each epsilon move strictly between the reads of
// the two end markers. Cells the run never reaches see no epsilon moves, so
// when the machine halts early the rest of x passes through unchanged.
Word induce(const Dpda& m, const Word& x, std::size_t budget = 0);

}  // namespace dcfl
