#pragma once

#include <cstdint>
#include <optional>

#include "transword/freegroup.hpp"
#include "transword/schema.hpp"

namespace transword {

// Source sequences of x and y are identical.
bool same_sequence(const Schema& x, const Schema& y);

// x(t + shift) == y(t) for every t >= from (with t + shift >= 0), from least.
struct Alignment {
  std::int64_t shift = 0;
  std::uint64_t from = 0;
};
std::optional<Alignment> eventual_alignment(const Schema& x, const Schema& y);

// Do the generators of e1 at step k + d1 and e2 at step k + d2 coincide for
// all k >= from?  `different` means they never coincide from there on.
EventualRelation entry_relation(const Entry& e1, std::int64_t d1, const Entry& e2, std::int64_t d2);

// Rewriting of a source sequence that is not freely reduced into
// head . tail with a shorter period tail (or none).  Throws FragmentError
// when cancellation depends on the step in a way that is not eventually
// constant.
struct StreamReduction {
  FreeWord head;
  std::optional<Schema> tail;
};
std::optional<StreamReduction> reduce_stream(const Schema& source);

}  // namespace transword
