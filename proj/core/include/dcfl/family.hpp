#pragma once

#include <functional>
#include <string>
#include <vector>

#include "dcfl/dpda.hpp"

namespace dcfl {

// Description size |Q|*|Sigma|*|Gamma^(<=e)|, where e is the machine's largest
// push length and Gamma^(<=e) counts stack strings of length at most e.
std::size_t des(const Dpda& m);

// Coefficients low order first.
std::size_t eval_poly(const std::vector<std::size_t>& coeffs, std::size_t n);

// An indexed sequence of machines, a membership cutoff mu, and a declared
// polynomial bound on des(generator(n)).
struct DpdaFamily {
  std::string name;
  std::function<Dpda(std::size_t)> generator;
  std::function<std::size_t(std::size_t)> mu;
  std::vector<std::size_t> size_bound;
};

// Membership in the mu-bounded intersection: every M_i with i <= mu(|x|)
// accepts x. The budget is forwarded to each run; 0 keeps the default.
bool mu_bounded_member(const DpdaFamily& family, const Word& x, std::size_t step_budget = 0);

// M_0 accepts the even-length binary strings without touching its stack. For
// n >= 1, M_n accepts x exactly when |x| > n and the n-th symbol equals the
// n-th-from-last symbol: it pushes the whole input, latches symbol n in the
// state, and pops n cells after the end marker to look at the matching
// position. States grow linearly in n.
Dpda pal_family(std::size_t n);

// The family whose mu(n) = ceil(n/2) intersection is the even-length binary
// palindromes, with its declared quadratic size bound.
DpdaFamily pal_family_spec();

}  // namespace dcfl
