#include "transword/index_poly.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "transword/error.hpp"

namespace transword {

namespace {

using i128 = __int128;

constexpr i128 kValueLimit = static_cast<i128>(1) << 62;

std::int64_t narrow(i128 v) {
  if (v > static_cast<i128>(INT64_MAX) || v < static_cast<i128>(INT64_MIN)) {
    throw FragmentError("index polynomial coefficient overflow");
  }
  return static_cast<std::int64_t>(v);
}

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 numerator_at(const IndexPoly& q, i128 k) { return (q.quad() * k + q.lin()) * k + q.constant(); }

}  // namespace

IndexPoly::IndexPoly(std::int64_t a2, std::int64_t a1, std::int64_t a0, std::int64_t denom)
    : a2_(a2), a1_(a1), a0_(a0), d_(denom) {
  if (d_ == 0) throw DomainError("index polynomial with zero denominator");
  normalize();
}

void IndexPoly::normalize() {
  if (d_ < 0) {
    a2_ = -a2_;
    a1_ = -a1_;
    a0_ = -a0_;
    d_ = -d_;
  }
  std::int64_t g = std::gcd(std::gcd(a2_, a1_), std::gcd(a0_, d_));
  if (g > 1) {
    a2_ /= g;
    a1_ /= g;
    a0_ /= g;
    d_ /= g;
  }
}

IndexPoly IndexPoly::pairing(std::uint64_t m, std::uint64_t c) {
  const auto s = static_cast<std::int64_t>(m + c);
  return {1, 2 * s + 3, s * (s + 1) + 2 * static_cast<std::int64_t>(c), 2};
}

std::uint64_t IndexPoly::at(std::int64_t k) const {
  const i128 num = numerator_at(*this, k);
  if (num % d_ != 0) throw FragmentError("index polynomial is not integral at " + std::to_string(k));
  const i128 v = num / d_;
  if (v < 0 || v >= kValueLimit) throw FragmentError("letter index out of range");
  return static_cast<std::uint64_t>(v);
}

bool IndexPoly::is_valid_stream_index() const {
  for (int k = 0; k <= 2; ++k) {
    if (numerator_at(*this, k) % d_ != 0) return false;
  }
  if (a2_ < 0) return false;
  const i128 v0 = numerator_at(*this, 0) / d_;
  const i128 v1 = numerator_at(*this, 1) / d_;
  return v0 >= 0 && v1 - v0 >= 1;
}

IndexPoly IndexPoly::shifted(std::int64_t s) const {
  const i128 S = s;
  return {a2_, narrow(2 * static_cast<i128>(a2_) * S + a1_), narrow((static_cast<i128>(a2_) * S + a1_) * S + a0_), d_};
}

IndexPoly IndexPoly::expanded(std::uint64_t r, std::uint64_t i) const {
  const i128 R = static_cast<i128>(r);
  const i128 I = static_cast<i128>(i);
  return {narrow(a2_ * R * R), narrow(2 * a2_ * R * I + a1_ * R), narrow((a2_ * I + a1_) * I + a0_), d_};
}

IndexPoly IndexPoly::scaled(std::int64_t mul, std::int64_t add) const {
  return {narrow(static_cast<i128>(a2_) * mul), narrow(static_cast<i128>(a1_) * mul),
          narrow(static_cast<i128>(a0_) * mul + static_cast<i128>(add) * d_), d_};
}

IndexPoly IndexPoly::divided(std::int64_t div, std::int64_t sub) const {
  return {a2_, a1_, narrow(static_cast<i128>(a0_) - static_cast<i128>(sub) * d_), narrow(static_cast<i128>(d_) * div)};
}

std::optional<std::uint64_t> IndexPoly::solve(std::uint64_t value) const {
  // q(k) >= k on k >= 0 for valid stream indices.
  std::uint64_t lo = 0;
  std::uint64_t hi = value;
  const i128 target = static_cast<i128>(value) * d_;
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (numerator_at(*this, static_cast<i128>(mid)) < target) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (numerator_at(*this, static_cast<i128>(lo)) == target) return lo;
  return std::nullopt;
}

std::optional<std::pair<std::uint64_t, std::uint64_t>> IndexPoly::as_pairing() const {
  if (a2_ != 1 || d_ != 2) return std::nullopt;
  if (a1_ < 3 || (a1_ - 3) % 2 != 0) return std::nullopt;
  const std::int64_t s = (a1_ - 3) / 2;
  const std::int64_t rest = a0_ - s * (s + 1);
  if (rest < 0 || rest % 2 != 0 || rest / 2 > s) return std::nullopt;
  const std::int64_t c = rest / 2;
  return std::pair{static_cast<std::uint64_t>(s - c), static_cast<std::uint64_t>(c)};
}

std::string IndexPoly::to_string(char var) const {
  std::string v(1, var);
  std::string out;
  auto term = [&](std::int64_t coef, const std::string& mono) {
    if (coef == 0) return;
    if (!out.empty()) out += coef > 0 ? "+" : "-";
    else if (coef < 0) out += "-";
    const auto mag = coef < 0 ? -coef : coef;
    if (mono.empty()) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag);
      out += mono;
    }
  };
  term(a2_, v + "^2");
  term(a1_, v);
  term(a0_, "");
  if (out.empty()) out = "0";
  if (d_ != 1) out = "(" + out + ")/" + std::to_string(d_);
  return out;
}

std::optional<std::int64_t> find_shift(const IndexPoly& p, const IndexPoly& q) {
  // p(k + s) == q(k): compare coefficients over the common denominator.
  const i128 pd = p.denom();
  const i128 qd = q.denom();
  if (static_cast<i128>(p.quad()) * qd != static_cast<i128>(q.quad()) * pd) return std::nullopt;
  i128 num = 0;
  i128 den = 0;
  if (p.quad() != 0) {
    // (2 A s + B_p) qd == B_q pd
    num = static_cast<i128>(q.lin()) * pd - static_cast<i128>(p.lin()) * qd;
    den = 2 * static_cast<i128>(p.quad()) * qd;
  } else {
    if (static_cast<i128>(p.lin()) * qd != static_cast<i128>(q.lin()) * pd || p.lin() == 0) return std::nullopt;
    num = static_cast<i128>(q.constant()) * pd - static_cast<i128>(p.constant()) * qd;
    den = static_cast<i128>(p.lin()) * qd;
  }
  if (num % den != 0) return std::nullopt;
  const i128 s = num / den;
  if (abs128(s) > (static_cast<i128>(1) << 40)) return std::nullopt;
  const auto shift = static_cast<std::int64_t>(s);
  if (p.shifted(shift) == q) return shift;
  return std::nullopt;
}

std::optional<std::uint64_t> disagreement_bound(const IndexPoly& p, std::int64_t dp, const IndexPoly& q,
                                                std::int64_t dq) {
  const IndexPoly P = p.shifted(dp);
  const IndexPoly Q = q.shifted(dq);
  if (P == Q) return std::nullopt;
  const i128 e2 = static_cast<i128>(P.quad()) * Q.denom() - static_cast<i128>(Q.quad()) * P.denom();
  const i128 e1 = static_cast<i128>(P.lin()) * Q.denom() - static_cast<i128>(Q.lin()) * P.denom();
  const i128 e0 = static_cast<i128>(P.constant()) * Q.denom() - static_cast<i128>(Q.constant()) * P.denom();
  i128 lead = 0;
  i128 rest = 0;
  if (e2 != 0) {
    lead = e2;
    rest = std::max(abs128(e1), abs128(e0));
  } else if (e1 != 0) {
    lead = e1;
    rest = abs128(e0);
  } else {
    return 0;
  }
  const i128 bound = 2 + rest / abs128(lead);
  return static_cast<std::uint64_t>(std::min<i128>(bound, static_cast<i128>(1) << 62));
}

std::uint64_t cantor_pair(std::uint64_t m, std::uint64_t i) { return (m + i) * (m + i + 1) / 2 + i; }

std::pair<std::uint64_t, std::uint64_t> cantor_unpair(std::uint64_t p) {
  auto w = static_cast<std::uint64_t>((std::sqrt(8.0L * static_cast<long double>(p) + 1.0L) - 1.0L) / 2.0L);
  while (w * (w + 1) / 2 > p) --w;
  while ((w + 1) * (w + 2) / 2 <= p) ++w;
  const std::uint64_t i = p - w * (w + 1) / 2;
  return {w - i, i};
}

}  // namespace transword
