#pragma once

#include <cstdint>

#include "transword/word.hpp"

namespace transword {

// Which applicable rewrite is taken first.  Every order reaches the same
// normal form up to equivalence.
enum class RuleOrder { left_to_right, right_to_left, seeded };

struct ReduceOptions {
  RuleOrder order = RuleOrder::left_to_right;
  std::uint64_t seed = 0;
  std::size_t max_steps = 1'000'000;
};

SchematicWord reduce(const SchematicWord& w, const ReduceOptions& opts = {});
bool is_reduced(const SchematicWord& w);

// p_N(x) == p_N(y) on the rank < N letters.
bool equal_up_to(const SchematicWord& x, const SchematicWord& y, std::uint64_t n);
bool heg_equal(const SchematicWord& x, const SchematicWord& y);

// For reduced x and y: x = prefix . left, y = right . suffix with left and
// right mutually inverse and prefix . suffix reduced.
struct JunctionSplit {
  SchematicWord prefix, left, right, suffix;
};
JunctionSplit junction_split(const SchematicWord& x, const SchematicWord& y);

}  // namespace transword
