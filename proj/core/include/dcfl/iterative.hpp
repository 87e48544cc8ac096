#pragma once

#include <array>
#include <functional>
#include <optional>

#include "dcfl/stack_history.hpp"

namespace dcfl {

// Five-way split w = u x v y z whose x and y parts pump together.
struct Factorization {
  Word u, x, v, y, z;

  Word whole() const { return u + x + v + y + z; }
  // u x^i v y^i z
  Word assemble(std::size_t i) const;
  // u x^i v y^j z
  Word assemble(std::size_t i, std::size_t j) const;
  bool operator==(const Factorization&) const = default;
};

// Same stack at both boundaries and nothing between them dips below the
// chord.
bool correlated(const StackHistory& hist, std::size_t t1, std::size_t t2);

// Boundaries t1 < t2 <= t3 < t4 where the stack grows from γ to αγ across
// [t1,t2], returns to γ across [t3,t4], each of the three blocks is
// pseudo-convex, and the machine re-enters its state across each outer block.
// Reading the [t1,t2] segment then repeats from t1's configuration, and the
// [t3,t4] segment peels one α.
struct BlockPair {
  std::size_t t1 = 0, t2 = 0, t3 = 0, t4 = 0;
  bool operator==(const BlockPair&) const = default;
};

bool is_good_pair(const StackHistory& hist, const BlockPair& p);

// All good pairs whose boundaries sit strictly inside the marked region and
// whose outer blocks span at most max_block boundaries, ordered by position.
std::vector<BlockPair> find_good_pairs(const StackHistory& hist, std::size_t max_block = 8);

// First pair of boundaries sharing state and stack with a pseudo-convex
// block between them.
std::optional<std::pair<std::size_t, std::size_t>> find_state_repeat(const StackHistory& hist);

// The five segments of the run's word cut at the pair's boundaries. Boundary
// b sits after the (b-1)-th word symbol, since boundary 1 is the ¢-read.
Factorization induced_factorization(const Word& w, const BlockPair& p);

// Placeholders removed from every segment.
Factorization strip_factorization(const Factorization& f);

using MemberFn = std::function<bool(const Word&)>;

struct PumpReport {
  bool ok = true;
  std::size_t failed_at = 0;
  Word failed_word;
};

// Checks membership of u x^i v y^i z for i = 0..i_max. At least one pumped
// part must be nonempty.
PumpReport pump_test(const MemberFn& member, const Factorization& f, std::size_t i_max);

enum class TriState { Yes, No, Inconclusive };

// Bounded evidence that the x and y parts only pump together. A row of the
// (i,j) membership grid is saturated when fixing that x-exponent lets every
// tested y-exponent succeed; columns dually. Yes when no row or no column
// saturates, No when a saturated row meets a saturated column, Inconclusive
// on one-line grids. Never a proof, only a verdict about the tested grid.
TriState nondegenerate_bounded(const MemberFn& member, const Factorization& f, std::size_t i_max,
                               std::size_t j_max);

// Whether the cuts of an accepted word line up with a good pair of the run.
// Placeholders of the shadowed silent moves attach to the preceding plain
// cut. Empty x or y never qualifies. Cuts that do not partition the word
// throw Error(CutMisaligned).
bool is_stack_operational(const Dpda& m, const Word& w, const std::array<std::size_t, 4>& cuts,
                          std::size_t budget = 0);
bool is_stack_operational(const Dpda& m, const Factorization& plain, std::size_t budget = 0);

// Whether `candidate` re-splits a pumped copy u x^n v y^n z of `base`:
// x' cycles a rotation of x, the rotation's seam copies glue to the
// neighbouring segments, and exponents stay within max_power.
bool is_deduced(const Factorization& base, const Factorization& candidate,
                std::size_t max_power = 4);

}  // namespace dcfl
