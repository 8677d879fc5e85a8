#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace transword {

enum class Family : std::uint8_t { a = 0, b = 1, c = 2 };

char family_char(Family f);

// A generator of the tripled alphabet, sign omitted.
struct Generator {
  Family family = Family::a;
  std::uint64_t index = 0;

  // Position in the interleaved ordering a0 b0 c0 a1 b1 c1 ...
  std::uint64_t rank() const { return 3 * index + static_cast<std::uint64_t>(family); }

  auto operator<=>(const Generator&) const = default;
};

Generator generator_of_rank(std::uint64_t rank);

struct Letter {
  Family family = Family::a;
  std::uint64_t index = 0;
  int sign = 1;

  Letter() = default;
  Letter(Family f, std::uint64_t i, int s = 1) : family(f), index(i), sign(s) {}

  Generator generator() const { return {family, index}; }
  std::uint64_t rank() const { return generator().rank(); }
  Letter inverse() const { return {family, index, -sign}; }
  bool is_inverse_of(const Letter& other) const {
    return family == other.family && index == other.index && sign == -other.sign;
  }

  auto operator<=>(const Letter&) const = default;
};

inline Letter a(std::uint64_t i, int s = 1) { return {Family::a, i, s}; }
inline Letter b(std::uint64_t i, int s = 1) { return {Family::b, i, s}; }
inline Letter c(std::uint64_t i, int s = 1) { return {Family::c, i, s}; }

std::string to_string(const Letter& l);

}  // namespace transword
