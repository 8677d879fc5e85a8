#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "transword/freegroup.hpp"
#include "transword/index_poly.hpp"
#include "transword/letter.hpp"
#include "transword/setspec.hpp"

namespace transword {

// Family rule of a stream entry: always `a`, or `b` when the letter index
// lies in the selector and `c` otherwise.  Plain `b` and `c` are the
// selectors "everything" and "nothing".
struct FamSpec {
  bool is_a = true;
  SetSpec selector;

  static FamSpec a() { return {true, SetSpec::nothing()}; }
  static FamSpec b() { return {false, SetSpec::everything()}; }
  static FamSpec c() { return {false, SetSpec::nothing()}; }
  static FamSpec sel(SetSpec s) { return {false, std::move(s)}; }
  static FamSpec of(Family f);

  Family family_at(std::uint64_t index) const;
  bool is_constant() const { return is_a || selector.is_everything() || selector.is_nothing(); }

  bool operator==(const FamSpec& o) const { return is_a == o.is_a && (is_a || selector == o.selector); }
};

struct Entry {
  FamSpec fam;
  IndexPoly index;
  int sign = 1;

  Letter at_step(std::uint64_t k) const {
    const auto i = index(k);
    return {fam.family_at(i), i, sign};
  }
  bool operator==(const Entry&) const = default;
};

struct Cursor {
  std::uint64_t step = 0;
  std::size_t entry = 0;
  bool operator==(const Cursor&) const = default;
};

enum class Direction { forward, backward };

// A letter stream: the entries are emitted in order for steps k, k+1, ...
// starting at the cursor, giving an omega-sequence (the "source sequence").
// A forward stream denotes that sequence; a backward stream denotes its
// formal inverse, an omega* word ending in source(0)^-1.
struct Schema {
  Direction direction = Direction::forward;
  Cursor cursor;
  std::vector<Entry> entries;

  std::size_t period() const { return entries.size(); }

  // Throws DomainError unless entries are nonempty, signs are +-1, indices
  // are valid stream indices and the cursor is in range.
  void validate() const;

  // Letter t of the source sequence (t = 0 at the cursor).
  Letter source_letter(std::uint64_t t) const;
  std::pair<std::uint64_t, std::size_t> position(std::uint64_t t) const;
  FreeWord source_prefix(std::uint64_t n) const;

  Schema advanced(std::uint64_t t) const;
  Schema inverted() const;

  // Same source sequence with entry offset 0.
  Schema rotated_to_origin() const;
  // Same source sequence with the period multiplied by r.
  Schema expanded(std::uint64_t r) const;
  // Largest backward reindexing: the step counter is as large as validity
  // of every entry index allows.
  Schema max_shifted() const;
  // Canonical presentation of the source sequence: offset 0, minimal
  // period, maximal step counter, constant selectors folded to b/c.
  Schema normalized() const;

  // The letter preceding the cursor in the natural backward extension of
  // the source sequence (requires normalized()).
  std::optional<Letter> predecessor() const;
  // Cursor moved back by one letter (requires predecessor()).
  Schema retreated() const;

  bool operator==(const Schema&) const = default;
};

}  // namespace transword
