#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "transword/freegroup.hpp"
#include "transword/sigma.hpp"
#include "transword/word.hpp"

namespace transword::testkit {

// Seed for randomized tests; TRANSWORD_SEED overrides the fallback.
std::uint64_t test_seed(std::uint64_t fallback);

// Family members plus evens and odds.
std::vector<SetSpec> set_pool(const SigmaFamily& fam);

// Random fragment words: at most 6 segments, letter indices at most 8.
class WordGen {
 public:
  WordGen(std::uint64_t seed, std::vector<SetSpec> pool) : rng_(seed), pool_(std::move(pool)) {}

  FreeWord free_word(std::size_t max_len, std::uint64_t max_index = 8);
  FreeWord a_word(std::size_t max_len, std::uint64_t max_index);
  Schema stream();
  // U_{S,n}-shaped stream over a pool member.
  Schema u_stream();
  SchematicWord word();

  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng_);
  }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }
  std::mt19937_64& rng() { return rng_; }

 private:
  Letter letter(std::uint64_t max_index);
  std::mt19937_64 rng_;
  std::vector<SetSpec> pool_;
};

// Repeated adjacent-pair scan until nothing cancels.
FreeWord naive_reduce(FreeWord w);

// Letters of rank < n read off by direct evaluation of each stream entry,
// then naive_reduce.
FreeWord naive_project(const SchematicWord& w, std::uint64_t n);

// An equivalent presentation: blocks split, stream prefixes peeled off as
// blocks, periods expanded.  Not canonicalized.
SchematicWord shuffle_presentation(const SchematicWord& w, std::mt19937_64& rng);

// Split w into (w0, w1) with w0 w1 equivalent to w; the cut may fall inside
// a block or a stream.
std::pair<SchematicWord, SchematicWord> split_word(const SchematicWord& w, std::mt19937_64& rng);

}  // namespace transword::testkit
