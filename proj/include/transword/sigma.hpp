#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "transword/dsl.hpp"
#include "transword/hag.hpp"
#include "transword/word.hpp"

namespace transword {

// Member slot standing for the distinguished symbol T (not a member).
inline constexpr std::size_t kTarget = std::numeric_limits<std::size_t>::max();

// Finite pairwise almost-disjoint family of infinite prefix-coded sets,
// named S1..Sk.  bound[i][j] = B with S_i and S_j meeting inside [0, B).
struct SigmaFamily {
  std::vector<std::string> names;
  std::vector<SetSpec> members;
  std::vector<std::vector<std::uint64_t>> bound;

  std::size_t size() const { return members.size(); }
  SetNames set_names() const;
  std::optional<std::size_t> find(const SetSpec& s) const;
  std::string name_of(std::size_t member) const;  // "T" for kTarget
};

SigmaFamily make_family(std::size_t k);

// Total map from members to members or T.
struct SigmaMap {
  std::vector<std::size_t> table;
};

SigmaMap identity_map(const SigmaFamily& fam);
// S -> T for S in scal, S -> S otherwise.
SigmaMap selection_map(const std::vector<bool>& scal);
// Unlisted members map to themselves.
SigmaMap parse_sigma_map(std::string_view text, const SigmaFamily& fam);
std::string render(const SigmaMap& f, const SigmaFamily& fam);

SchematicWord u_word(const SetSpec& s, std::uint64_t n);
SchematicWord u_word(const SigmaFamily& fam, std::size_t member, std::uint64_t n);

struct Piece {
  enum class Kind { plain, maximal };
  Kind kind = Kind::plain;
  std::size_t member = 0;
  std::uint64_t n = 0;
  int sign = 1;
  SchematicWord word;
};

struct Decomposition {
  std::vector<Piece> pieces;
  SchematicWord recompose() const;
};

// Requires a reduced word (DomainError otherwise).
Decomposition decompose(const SchematicWord& w, const SigmaFamily& fam);
SchematicWord apply_Ff(const SchematicWord& w, const SigmaFamily& fam, const SigmaMap& f);
HagClass psi_f(const SchematicWord& w, const SigmaFamily& fam, const SigmaMap& f);
HagClass phi_f(const HagClass& h, const SigmaFamily& fam, const SigmaMap& f);
HagClass phi_sigma(const HagClass& h, const SigmaFamily& fam, const std::vector<std::size_t>& perm);

std::vector<bool> separation_pattern(const SigmaFamily& fam, const std::vector<bool>& scal);

std::string render(const Decomposition& d, const SigmaFamily& fam);

}  // namespace transword
