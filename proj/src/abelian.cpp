#include "transword/abelian.hpp"

#include "transword/error.hpp"

namespace transword {

IntSeq IntSeq::basis(std::uint64_t i, std::int64_t value) {
  IntSeq v;
  if (value != 0) v.entries[i] = value;
  return v;
}

IntSeq IntSeq::operator+(const IntSeq& o) const {
  IntSeq out = *this;
  for (const auto& [i, x] : o.entries) {
    const auto s = (out.entries[i] += x);
    if (s == 0) out.entries.erase(i);
  }
  return out;
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

IntSeq mod_p(const IntSeq& v, std::uint64_t p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  const auto pp = static_cast<std::int64_t>(p);
  IntSeq out;
  for (const auto& [i, x] : v.entries) {
    const auto r = ((x % pp) + pp) % pp;
    if (r) out.entries[i] = r;
  }
  return out;
}

std::uint64_t sum_functional(const std::set<std::uint64_t>& scal, const IntSeq& v, std::uint64_t p) {
  if (p == 0) throw DomainError("modulus must be positive");
  const auto pp = static_cast<std::int64_t>(p);
  std::int64_t s = 0;
  for (const auto& [i, x] : v.entries)
    if (scal.count(i)) s = (s + ((x % pp) + pp) % pp) % pp;
  return static_cast<std::uint64_t>(s);
}

IntSeq truncate(const IntSeq& v, std::uint64_t n) {
  IntSeq out;
  for (const auto& [i, x] : v.entries)
    if (i < n) out.entries[i] = x;
  return out;
}

HomsDemo distinct_homs_demo(std::uint64_t k, std::uint64_t p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (k > 20) throw DomainError("demo size limited to k <= 20");
  HomsDemo out;
  std::set<std::vector<std::uint64_t>> distinct;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    std::set<std::uint64_t> scal;
    for (std::uint64_t i = 0; i < k; ++i)
      if (mask >> i & 1) scal.insert(i);
    std::vector<std::uint64_t> row;
    for (std::uint64_t i = 0; i < k; ++i) row.push_back(sum_functional(scal, mod_p(IntSeq::basis(i), p), p));
    distinct.insert(row);
    out.rows.push_back(std::move(row));
  }
  out.count = distinct.size();
  return out;
}

}  // namespace transword
