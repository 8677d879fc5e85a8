#include "transword/letter.hpp"

namespace transword {

char family_char(Family f) {
  switch (f) {
    case Family::a:
      return 'a';
    case Family::b:
      return 'b';
    case Family::c:
      return 'c';
  }
  return '?';
}

Generator generator_of_rank(std::uint64_t rank) {
  return {static_cast<Family>(rank % 3), rank / 3};
}

std::string to_string(const Letter& l) {
  std::string out(1, family_char(l.family));
  out += std::to_string(l.index);
  if (l.sign < 0) out += "^-1";
  return out;
}

}  // namespace transword
