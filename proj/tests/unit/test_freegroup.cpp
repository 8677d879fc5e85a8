#include <gtest/gtest.h>

#include "support.hpp"
#include "transword/dsl.hpp"
#include "transword/error.hpp"
#include "transword/freegroup.hpp"

using namespace transword;

namespace {

FreeWord W(const char* s) { return parse_free_word(s); }

// tt is modelled as a5, Y lives on a0, a1.
const Letter ya = a(0), yb = a(1), tt = a(5);

}  // namespace

TEST(ReduceFree, AdjacentPair) { EXPECT_EQ(reduce_free(W("[a0 a1 a1^-1]")), W("[a0]")); }

TEST(ReduceFree, Empty) { EXPECT_TRUE(reduce_free({}).empty()); }

TEST(ReduceFree, NestedCancellation) {
  const auto w = W("[a0 a1 a0^-1 a0 a1^-1 a0^-1]");
  EXPECT_EQ(reduce_free(w), testkit::naive_reduce(w));
  EXPECT_TRUE(reduce_free(w).empty());
}

TEST(ReduceFree, RandomAgainstNaive) {
  testkit::WordGen gen(testkit::test_seed(11), {});
  for (int i = 0; i < 2000; ++i) {
    const auto w = gen.free_word(14);
    const auto r = reduce_free(w);
    EXPECT_EQ(r, testkit::naive_reduce(w));
    EXPECT_TRUE(is_freely_reduced(r));
    EXPECT_TRUE(multiply(w, inverse(w)).empty());
  }
}

TEST(CyclicReduce, OneStep) {
  const auto r = cyclic_reduce(W("[a0 a1 a0^-1]"));
  EXPECT_EQ(r.conjugator, W("[a0]"));
  EXPECT_EQ(r.core, W("[a1]"));
}

TEST(CyclicReduce, AlreadyReduced) {
  const auto r = cyclic_reduce(W("[a1]"));
  EXPECT_TRUE(r.conjugator.empty());
  EXPECT_EQ(r.core, W("[a1]"));
}

TEST(CyclicReduce, TwoSteps) {
  const auto r = cyclic_reduce(W("[a0 a0 a1 a0^-1 a0^-1]"));
  EXPECT_EQ(r.conjugator, W("[a0 a0]"));
  EXPECT_EQ(r.core, W("[a1]"));
}

TEST(SplitForAdjunction, ConjugatedLetter) {
  const auto s = split_for_adjunction({ya, tt, ya.inverse()}, {ya.generator()});
  EXPECT_EQ(s.w0, FreeWord{ya});
  EXPECT_TRUE(s.w1.empty());
  EXPECT_EQ(s.w2, FreeWord{tt});
  EXPECT_EQ(s.w3, FreeWord{ya.inverse()});
}

TEST(SplitForAdjunction, NoYLetters) {
  const auto s = split_for_adjunction({tt}, {ya.generator()});
  EXPECT_TRUE(s.w0.empty() && s.w1.empty() && s.w3.empty());
  EXPECT_EQ(s.w2, FreeWord{tt});
}

TEST(SplitForAdjunction, PrefixThenConjugate) {
  const FreeWord w{ya, yb, tt, yb, tt.inverse()};
  const auto s = split_for_adjunction(w, {ya.generator(), yb.generator()});
  EXPECT_EQ(s.w0, (FreeWord{ya, yb}));
  EXPECT_EQ(s.w1, FreeWord{tt});
  EXPECT_EQ(s.w2, FreeWord{yb});
  EXPECT_TRUE(s.w3.empty());
  EXPECT_EQ(s.recompose(), w);
}

TEST(SplitForAdjunction, RejectsWordInsideY) {
  EXPECT_THROW(split_for_adjunction({ya}, {ya.generator()}), DomainError);
  EXPECT_THROW(split_for_adjunction({tt, tt.inverse()}, {ya.generator()}), DomainError);
}

TEST(AdjunctionOracle, Examples) {
  EXPECT_TRUE(adjunction_free_oracle({tt}, {ya.generator()}, 4));
  EXPECT_TRUE(adjunction_free_oracle({ya, tt, ya.inverse()}, {ya.generator()}, 4));
  EXPECT_THROW(adjunction_free_oracle({ya}, {ya.generator()}, 1), DomainError);
}

TEST(EnumerateReduced, CountsMatchFormula) {
  // 2r (2r-1)^(n-1) reduced words of length n over r generators.
  const GeneratorSet gens{{Family::a, 0}, {Family::a, 1}};
  EXPECT_EQ(enumerate_reduced(gens, 3).size(), 1u + 4 + 12 + 36);
}
