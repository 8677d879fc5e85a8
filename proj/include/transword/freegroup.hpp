#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "transword/letter.hpp"

namespace transword {

// Finite words in the free group on the tripled alphabet.  A value is
// "reduced" when no adjacent pair is mutually inverse.
using FreeWord = std::vector<Letter>;
using GeneratorSet = std::set<Generator>;

FreeWord reduce_free(const FreeWord& w);
bool is_freely_reduced(const FreeWord& w);
FreeWord inverse(const FreeWord& w);
FreeWord concat(const FreeWord& lhs, const FreeWord& rhs);

// Freely reduced product lhs * rhs.
FreeWord multiply(const FreeWord& lhs, const FreeWord& rhs);

struct CyclicReduction {
  FreeWord conjugator;
  FreeWord core;
};

// w == conjugator * core * conjugator^-1 with core cyclically reduced.
// Precondition: w freely reduced.
CyclicReduction cyclic_reduce(const FreeWord& w);

// w == w0 w1 w2 w1^-1 w3, where w0/w3 are the maximal prefix/suffix using
// only generators from the distinguished subset and w2 is cyclically reduced.
struct AdjunctionSplit {
  FreeWord w0, w1, w2, w3;

  FreeWord recompose() const;
};

bool uses_only(const FreeWord& w, const GeneratorSet& gens);

// Throws DomainError when w is not reduced or lies in F(Y).
AdjunctionSplit split_for_adjunction(const FreeWord& w, const GeneratorSet& y);

// All freely reduced words over `gens` of length <= max_len, in
// shortlex order with letters compared by (family, index, sign).
std::vector<FreeWord> enumerate_reduced(const GeneratorSet& gens, std::size_t max_len);

// Brute-force check that t -> w, y -> y is injective on reduced words of
// F({t} u Y) of length <= max_len.  t is modelled by a generator outside
// both Y and the support of w.
bool adjunction_free_oracle(const FreeWord& w, const GeneratorSet& y, std::size_t max_len);

std::string to_string(const FreeWord& w);

}  // namespace transword
