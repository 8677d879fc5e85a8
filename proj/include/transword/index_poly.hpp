#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace transword {

// Integer-valued polynomial index rule k |-> (A k^2 + B k + C) / D used for
// the letter indices of a stream.  Affine rules have A == 0 and D == 1; the
// Cantor pairing rows k |-> pair(m, k + c) are the quadratic members.
class IndexPoly {
 public:
  IndexPoly() = default;
  IndexPoly(std::int64_t a2, std::int64_t a1, std::int64_t a0, std::int64_t denom);

  static IndexPoly affine(std::int64_t slope, std::int64_t intercept) { return {0, slope, intercept, 1}; }
  // k |-> pair(m, k + c) for the Cantor pairing pair(m, i) = (m+i)(m+i+1)/2 + i.
  static IndexPoly pairing(std::uint64_t m, std::uint64_t c = 0);

  std::int64_t quad() const { return a2_; }
  std::int64_t lin() const { return a1_; }
  std::int64_t constant() const { return a0_; }
  std::int64_t denom() const { return d_; }

  bool is_affine() const { return a2_ == 0 && d_ == 1; }

  // Value at an arbitrary (possibly negative) argument; throws FragmentError
  // when the value leaves [0, 2^62).
  std::uint64_t at(std::int64_t k) const;
  std::uint64_t operator()(std::uint64_t k) const { return at(static_cast<std::int64_t>(k)); }

  // Integer valued, nonnegative at 0 and strictly increasing on k >= 0.
  bool is_valid_stream_index() const;

  IndexPoly shifted(std::int64_t s) const;                  // k |-> q(k + s)
  IndexPoly expanded(std::uint64_t r, std::uint64_t i) const;  // k |-> q(r k + i)
  IndexPoly scaled(std::int64_t mul, std::int64_t add) const;  // k |-> mul q(k) + add
  // k |-> (q(k) - sub) / div; caller guarantees integrality.
  IndexPoly divided(std::int64_t div, std::int64_t sub) const;

  // The k >= 0 with q(k) == value, if any.  Requires is_valid_stream_index().
  std::optional<std::uint64_t> solve(std::uint64_t value) const;

  // If q == pair(m, k + c) as polynomials, returns (m, c).
  std::optional<std::pair<std::uint64_t, std::uint64_t>> as_pairing() const;

  std::string to_string(char var = 'k') const;

  bool operator==(const IndexPoly&) const = default;
  auto operator<=>(const IndexPoly&) const = default;

 private:
  void normalize();

  std::int64_t a2_ = 0;
  std::int64_t a1_ = 1;
  std::int64_t a0_ = 0;
  std::int64_t d_ = 1;
};

// Integer s with p(k + s) == q(k) identically, if one exists.
std::optional<std::int64_t> find_shift(const IndexPoly& p, const IndexPoly& q);

// A K >= 0 such that p(k + dp) != q(k + dq) for every k >= K, or nullopt when
// the two shifted polynomials are identical.
std::optional<std::uint64_t> disagreement_bound(const IndexPoly& p, std::int64_t dp, const IndexPoly& q,
                                                std::int64_t dq);

std::uint64_t cantor_pair(std::uint64_t m, std::uint64_t i);
std::pair<std::uint64_t, std::uint64_t> cantor_unpair(std::uint64_t p);

}  // namespace transword
