#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace transword {

// Finitely supported integer sequence; zero entries are not stored.
struct IntSeq {
  std::map<std::uint64_t, std::int64_t> entries;

  static IntSeq basis(std::uint64_t i, std::int64_t value = 1);
  IntSeq operator+(const IntSeq& o) const;
  bool operator==(const IntSeq&) const = default;
};

bool is_prime(std::uint64_t p);
// Entrywise reduction into [0, p); DomainError unless p is prime.
IntSeq mod_p(const IntSeq& v, std::uint64_t p);
std::uint64_t sum_functional(const std::set<std::uint64_t>& scal, const IntSeq& v, std::uint64_t p);
// Coordinates below n only.
IntSeq truncate(const IntSeq& v, std::uint64_t n);

struct HomsDemo {
  std::uint64_t count = 0;
  // rows[mask][i] = functional of subset `mask` on basis vector e_i.
  std::vector<std::vector<std::uint64_t>> rows;
};
HomsDemo distinct_homs_demo(std::uint64_t k, std::uint64_t p);

}  // namespace transword
