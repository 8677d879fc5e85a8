#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "transword/dsl.hpp"
#include "transword/word.hpp"

namespace transword {

// Index of a tail letter as a function of the source index n.
struct TailIndex {
  enum class Kind { affine, pair_next };
  Kind kind = Kind::affine;
  std::int64_t slope = 1;
  std::int64_t intercept = 0;

  // pair_next: pair(m, i + 1) where (m, i) = unpair(n).
  static TailIndex pair_next() { return {Kind::pair_next, 0, 0}; }
  std::optional<std::uint64_t> at(std::uint64_t n) const;
  bool operator==(const TailIndex&) const = default;
};

struct TailLetter {
  Family family = Family::a;
  TailIndex index;
  int sign = 1;
  bool operator==(const TailLetter&) const = default;
};

// a_n |-> exceptional[n] if listed, tail pattern P(n) for n >= n0, a_n
// otherwise; b and c letters are fixed.
struct SubstitutionMap {
  std::map<std::uint64_t, SchematicWord> exceptional;
  std::uint64_t n0 = 0;
  std::vector<TailLetter> tail{TailLetter{}};

  SchematicWord image(std::uint64_t n) const;
  // Source indices n whose image uses g; nullopt when there are infinitely many.
  std::optional<std::set<std::uint64_t>> support(Generator g) const;
};

SubstitutionMap identity_substitution();
SubstitutionMap telescope_substitution();  // a_n -> a_n a_{n+1}^-1
SubstitutionMap doubling_substitution();   // a_n -> a_{2n} a_{2n+1}
SubstitutionMap tau_substitution();        // a_p -> a_p a_{pair(m, i+1)}^-1, (m, i) = unpair(p)

// support() agrees with direct enumeration for every letter of rank < bound.
bool check_admissible(const SubstitutionMap& s, std::uint64_t bound);

SchematicWord apply_endo(const SubstitutionMap& s, const SchematicWord& w);
FreeWord apply_projected(const SubstitutionMap& s, const SchematicWord& w, const GeneratorSet& gens);
FreeWord apply_projected_rank(const SubstitutionMap& s, const SchematicWord& w, std::uint64_t n);

// prod_k a_{q(k)} a_{q(k+1)}^-1
SchematicWord telescope_product(const IndexPoly& q);

struct EmbeddingReport {
  bool admissible = false;
  bool finite_images = false;
  bool levels_increasing = false;  // j_n strictly increasing
  bool supports_above = false;     // s(a_{n+1}) uses only ranks >= m_n
  bool retraction = false;
  bool injective = false;
  std::vector<std::uint64_t> j;
  std::vector<std::uint64_t> m;
  std::uint64_t words_checked = 0;
  std::string failure;

  bool passed() const {
    return admissible && finite_images && levels_increasing && supports_above && retraction && injective;
  }
};

EmbeddingReport embedding_check(const SubstitutionMap& s, std::uint64_t n_max, std::size_t len_max,
                                std::uint64_t seed = 0);

SubstitutionMap parse_substitution(std::string_view text, const SetNames& names = {});
std::string render(const SubstitutionMap& s, const SetNames* names = nullptr);

}  // namespace transword
