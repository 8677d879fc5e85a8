#pragma once

#include <string>
#include <vector>

#include "transword/dsl.hpp"
#include "transword/word.hpp"

namespace transword {

// Tail class of a stream: the source schema up to a finite prefix, and the
// orientation (+1 forward, -1 backward).
struct Germ {
  Schema schema;
  int sign = 1;

  Germ inverse() const { return {schema, -sign}; }
};

bool same_germ(const Germ& x, const Germ& y);

struct HagClass {
  std::vector<Germ> germs;
  bool is_identity() const { return germs.empty(); }
};

bool operator==(const HagClass& x, const HagClass& y);

Germ germ_of(const Schema& s);
HagClass hag_normal(const SchematicWord& w);
inline HagClass pi(const SchematicWord& w) { return hag_normal(w); }
bool hag_equal(const SchematicWord& x, const SchematicWord& y);

HagClass hag_product(const HagClass& x, const HagClass& y);
HagClass hag_inverse(const HagClass& x);
// Drops b/c letters from every germ.
HagClass ra_retract(const HagClass& h);

// A word using only letters of index >= n whose class is h.
SchematicWord tail_representative(const HagClass& h, std::uint64_t n);

std::string render(const Germ& g, const SetNames* names = nullptr);
std::string render(const HagClass& h, const SetNames* names = nullptr);

}  // namespace transword
