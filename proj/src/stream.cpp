#include "transword/stream.hpp"

#include <algorithm>
#include <numeric>

#include "transword/error.hpp"

namespace transword {

namespace {

Schema at_period(const Schema& s, std::size_t l) {
  return s.rotated_to_origin().expanded(l / s.period()).rotated_to_origin();
}

}  // namespace

bool same_sequence(const Schema& x, const Schema& y) {
  const std::size_t l = std::lcm(x.period(), y.period());
  const Schema a = at_period(x, l), b = at_period(y, l);
  const auto ka = static_cast<std::int64_t>(a.cursor.step), kb = static_cast<std::int64_t>(b.cursor.step);
  for (std::size_t i = 0; i < l; ++i) {
    const auto& p = a.entries[i];
    const auto& q = b.entries[i];
    if (p.sign != q.sign || p.fam.is_a != q.fam.is_a) return false;
    const auto pi = p.index.shifted(ka), qi = q.index.shifted(kb);
    if (!(pi == qi)) return false;
    if (p.fam.is_a) continue;
    const auto rel = compare_membership(p.fam.selector, pi, q.fam.selector, qi);
    if (rel.agreement != Agreement::equal || rel.from != 0) return false;
  }
  return true;
}

std::optional<Alignment> eventual_alignment(const Schema& x, const Schema& y) {
  const std::size_t l = std::lcm(x.period(), y.period());
  const Schema a = at_period(x, l), b = at_period(y, l);
  const auto ka = static_cast<std::int64_t>(a.cursor.step), kb = static_cast<std::int64_t>(b.cursor.step);
  const auto ll = static_cast<std::int64_t>(l);

  for (std::size_t r = 0; r < l; ++r) {
    std::vector<std::int64_t> u(l);
    bool ok = true;
    std::optional<std::int64_t> delta;
    for (std::size_t i = 0; i < l && ok; ++i) {
      const auto& p = a.entries[(i + r) % l];
      const auto& q = b.entries[i];
      const std::int64_t carry = static_cast<std::int64_t>((i + r) / l);
      if (p.sign != q.sign || p.fam.is_a != q.fam.is_a) {
        ok = false;
        break;
      }
      auto s = find_shift(p.index, q.index.shifted(kb));
      if (!s) {
        ok = false;
        break;
      }
      const std::int64_t d = *s - ka - carry;
      if (delta && *delta != d) ok = false;
      delta = d;
      u[i] = *s;
    }
    if (!ok) continue;

    const std::int64_t umin = *std::min_element(u.begin(), u.end());
    const std::int64_t s0 = std::max<std::int64_t>(0, -umin);
    std::uint64_t from_s = static_cast<std::uint64_t>(s0);
    for (std::size_t i = 0; i < l && ok; ++i) {
      const auto& p = a.entries[(i + r) % l];
      const auto& q = b.entries[i];
      if (p.fam.is_a) continue;
      const auto rel = compare_membership(p.fam.selector, p.index.shifted(u[i] + s0), q.fam.selector,
                                          q.index.shifted(kb + s0));
      if (rel.agreement != Agreement::equal) {
        ok = false;
        break;
      }
      from_s = std::max(from_s, static_cast<std::uint64_t>(s0) + rel.from);
    }
    if (!ok) continue;

    Alignment al;
    al.shift = static_cast<std::int64_t>(r) + ll * *delta;
    std::int64_t from = static_cast<std::int64_t>(from_s) * ll;
    from = std::max(from, -al.shift);
    while (from > 0 && from - 1 + al.shift >= 0 &&
           a.source_letter(static_cast<std::uint64_t>(from - 1 + al.shift)) ==
               b.source_letter(static_cast<std::uint64_t>(from - 1)))
      --from;
    al.from = static_cast<std::uint64_t>(from);
    return al;
  }
  return std::nullopt;
}

EventualRelation entry_relation(const Entry& e1, std::int64_t d1, const Entry& e2, std::int64_t d2) {
  if (auto k = disagreement_bound(e1.index, d1, e2.index, d2)) return {Agreement::different, *k};
  if (e1.fam.is_a && e2.fam.is_a) return {Agreement::equal, 0};
  if (e1.fam.is_a != e2.fam.is_a) return {Agreement::different, 0};
  return compare_membership(e1.fam.selector, e1.index.shifted(d1), e2.fam.selector, e2.index.shifted(d2));
}

std::optional<StreamReduction> reduce_stream(const Schema& source) {
  const Schema x = source.normalized();
  const std::size_t n = x.period();
  const std::uint64_t k0 = x.cursor.step;
  std::uint64_t bound = 0;

  // Generator coincidence from `bound` on; mixed behaviour is out of reach.
  auto same_gen = [&](std::size_t i, std::int64_t di, std::size_t j, std::int64_t dj) {
    const auto rel = entry_relation(x.entries[i], di, x.entries[j], dj);
    if (rel.agreement == Agreement::mixed)
      throw FragmentError("stream cancellation pattern is not eventually constant");
    bound = std::max(bound, rel.from);
    return rel.agreement == Agreement::equal;
  };
  auto cancels = [&](std::size_t i, std::int64_t di, std::size_t j, std::int64_t dj) {
    return same_gen(i, di, j, dj) && x.entries[i].sign == -x.entries[j].sign;
  };

  std::vector<std::size_t> stack;
  for (std::size_t j = 0; j < n; ++j) {
    if (!stack.empty() && cancels(stack.back(), 0, j, 0))
      stack.pop_back();
    else
      stack.push_back(j);
  }
  std::size_t lo = 0, hi = stack.size();
  std::vector<std::size_t> u;
  while (hi - lo >= 2 && cancels(stack[hi - 1], 0, stack[lo], 1)) {
    u.push_back(stack[lo]);
    ++lo;
    --hi;
  }

  auto concrete = [&](std::uint64_t from_step, std::uint64_t to_step) {
    FreeWord w;
    for (std::uint64_t k = from_step; k < to_step; ++k)
      for (const auto& e : x.entries) w.push_back(e.at_step(k));
    return w;
  };

  if (stack.size() == n && u.empty()) {
    // Symbolically reduced; look for accidental cancellation before `bound`.
    for (std::size_t j = 0; j + 1 < n; ++j) same_gen(j, 0, j + 1, 0);
    same_gen(n - 1, 0, 0, 1);
    if (bound <= k0) return std::nullopt;
    const std::uint64_t len = (bound + 1 - k0) * n + 1;
    for (std::uint64_t t = 0; t + 1 < len; ++t) {
      if (!x.source_letter(t).is_inverse_of(x.source_letter(t + 1))) continue;
      StreamReduction out;
      out.head = reduce_free(x.source_prefix(t + 2));
      out.tail = x.advanced(t + 2);
      return out;
    }
    return std::nullopt;
  }

  const std::uint64_t split = std::max(bound, k0);
  StreamReduction out;
  out.head = concrete(k0, split);
  for (auto j : u) out.head.push_back(x.entries[j].at_step(split));
  if (hi > lo) {
    Schema tail;
    tail.direction = Direction::forward;
    tail.cursor = {split, 0};
    for (std::size_t p = lo; p < hi; ++p) tail.entries.push_back(x.entries[stack[p]]);
    out.tail = tail;
  }
  return out;
}

}  // namespace transword
