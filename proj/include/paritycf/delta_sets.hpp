#pragma once

// Approximation sets written as Delta-words: for m >= |a0| + 1 with
// P = H_{a1} ... H_{a_{m-1}},
//   B:          [a1..a_{m-1}, (a_m, a_{m+1})*]   = P . delta_{m+1}
//   S:          [a1..a_{m-1}, (a_m, delta_{m+1})*] = P . a_{m+1}
//   B^(a):      S-words with a_{m+1} = a
//   B^(a,b):    [a1..a_{m-1}, (a_m, c)*] with a_m != c, {a, b, c} = {0, 1, inf}
//   S_d:        S-words with d = delta_{m+1} and (m = |a0| + 1 or a_{m-1} = a_{m+1})

#include <vector>

#include "paritycf/delta.hpp"
#include "paritycf/parity_best.hpp"

namespace paritycf {

struct DeltaWitness {
  Rational value;
  DeltaWord word;  // as the enumeration produced it, not canonicalized
  std::size_t m = 0;
};

/// Members with denominator <= q_max, deduplicated by value (the smallest m
/// is kept) and ordered by height.
std::vector<DeltaWitness> delta_set(DeltaStream& s, SetId set, const BigInt& q_max);
std::vector<DeltaWitness> delta_set(DeltaStream& s, SetId set, const Limit& limit);

enum class SignedSplit : std::uint8_t { InB, InSDelta };
/// Whether the S-word at m lies in B or in S_{delta_{m+1}}.
SignedSplit s_gamma_split(DeltaStream& s, std::size_t m);

}  // namespace paritycf
