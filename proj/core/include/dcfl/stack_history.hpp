#pragma once

#include "dcfl/dpda.hpp"

namespace dcfl {

// Per-boundary record of a real-time run on ¢w$: boundary 0 is the starting
// configuration and boundary i the one after the i-th read. A full history
// has one boundary past the $-read.
struct StackHistory {
  std::vector<Word> stacks;     // top first
  std::vector<StateId> states;  // state at each boundary

  std::size_t boundaries() const { return stacks.size(); }
  std::size_t height(std::size_t i) const { return stacks.at(i).size(); }
  std::vector<std::size_t> heights() const;
};

// Runs a real-time machine to acceptance or rejection and keeps every
// boundary. Throws NotRealTime for machines with silent moves and
// BadParameter when the run halts before consuming the whole marked word.
StackHistory record_history(const Dpda& m, const Word& w, std::size_t budget = 0);

// Every height between t1 and t2 lies on or above the straight chord through
// the two end heights. Checked with cross products, no division.
bool pseudo_convex(const std::vector<std::size_t>& h, std::size_t t1, std::size_t t2);

// Shape of one boundary block. Flat means the height never changes. Convex
// means some boundary splits the block into a prefix of pushes and a suffix
// of pops; a height-neutral step disqualifies, since it could let the
// profile sag under the chord. Flat and convex blocks are always
// pseudo-convex, but not conversely.
struct BlockShape {
  bool flat = false;
  bool convex = false;
  bool pseudo_convex = false;
};
BlockShape classify_block(const std::vector<std::size_t>& h, std::size_t t1, std::size_t t2);

// Strict one-boundary local extrema.
std::vector<std::size_t> find_peaks(const std::vector<std::size_t>& h);
std::vector<std::size_t> find_pits(const std::vector<std::size_t>& h);

// Maximal constant-height stretch of at least two boundaries. Every existing
// neighbour of a basin is higher, every existing neighbour of an elevated
// plateau lower; a stretch with one of each is neither.
struct Plateau {
  std::size_t begin = 0;
  std::size_t end = 0;  // inclusive
  bool basin = false;
  bool elevated = false;
  bool operator==(const Plateau&) const = default;
};
std::vector<Plateau> find_plateaus(const std::vector<std::size_t>& h);

// A single excursion [begin, end]: equal end heights, interior strictly
// higher, exactly one summit (a peak or an elevated plateau) inside, no pit
// or basin strictly inside, and one end resting at a pit or at the left edge
// of a basin. Boundary 0 counts as a pit for the resting rule.
struct Hill {
  std::size_t begin = 0;
  std::size_t end = 0;
  bool operator==(const Hill&) const = default;
};
std::vector<Hill> find_hills(const std::vector<std::size_t>& h);

// One climb-then-descent stretch of a partitioned region. `summit` is its
// turning point: a peak or the right edge of an elevated plateau. `gain` is
// start height minus end height, so gains add up across a partition.
struct Turn {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::size_t summit = 0;
  long long gain = 0;
  bool operator==(const Turn&) const = default;
};

// Splits [from, to] at the rightmost lowest boundary strictly between
// consecutive turning points. Throws NoTurningPoint when the region has none.
std::vector<Turn> turn_partition(const std::vector<std::size_t>& h, std::size_t from,
                                 std::size_t to);

}  // namespace dcfl
