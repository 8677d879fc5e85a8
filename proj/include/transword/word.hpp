#pragma once

#include <cstdint>
#include <functional>
#include <variant>
#include <vector>

#include "transword/freegroup.hpp"
#include "transword/schema.hpp"

namespace transword {

using Segment = std::variant<FreeWord, Schema>;

// Finite concatenation of finite blocks, forward (omega) and backward
// (omega*) streams.
struct SchematicWord {
  std::vector<Segment> segments;

  static SchematicWord finite(FreeWord w);
  static SchematicWord stream(Schema s);

  bool empty() const { return segments.empty(); }
  bool is_finite() const;
  std::size_t stream_count() const;
  // The letters of a finite word (throws DomainError on streams).
  FreeWord as_finite() const;
};

bool is_block(const Segment& s);
const FreeWord& block(const Segment& s);
const Schema& stream(const Segment& s);

SchematicWord canonicalize(const SchematicWord& w);
SchematicWord concat(const SchematicWord& x, const SchematicWord& y);
SchematicWord invert(const SchematicWord& w);

// Order-isomorphism equality, decided on canonical forms.
bool equivalent(const SchematicWord& x, const SchematicWord& y);

struct Position {
  std::size_t segment = 0;
  std::uint64_t offset = 0;  // letter offset in a block, source position in a stream
  bool operator==(const Position&) const = default;
};
std::vector<Position> occurrences(const SchematicWord& w, Generator g);

// Letters kept by `keep`, in domain order, then freely reduced.  `keep`
// must reject every generator of index > max_index.
FreeWord project_letters(const SchematicWord& w, const std::function<bool(Generator)>& keep,
                         std::uint64_t max_index);
FreeWord project_finite(const SchematicWord& w, const GeneratorSet& gens);
// Rank < n on the tripled alphabet.
FreeWord project_rank(const SchematicWord& w, std::uint64_t n);
// a_0 .. a_{n-1} only.
FreeWord project_a(const SchematicWord& w, std::uint64_t n);

enum class Recode { encode, decode };
Letter gamma_recode(Letter l, Recode dir);
SchematicWord gamma_recode(const SchematicWord& w, Recode dir);

SchematicWord ra_retract(const SchematicWord& w);

}  // namespace transword
