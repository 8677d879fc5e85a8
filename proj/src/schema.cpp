#include "transword/schema.hpp"

#include "transword/error.hpp"

namespace transword {

FamSpec FamSpec::of(Family f) {
  switch (f) {
    case Family::a: return a();
    case Family::b: return b();
    case Family::c: return c();
  }
  return a();
}

Family FamSpec::family_at(std::uint64_t index) const {
  if (is_a) return Family::a;
  return selector.contains(index) ? Family::b : Family::c;
}

void Schema::validate() const {
  if (entries.empty()) throw DomainError("stream with no entries");
  if (cursor.entry >= entries.size()) throw DomainError("stream cursor out of range");
  for (const auto& e : entries) {
    if (e.sign != 1 && e.sign != -1) throw DomainError("stream entry sign must be +1 or -1");
    if (!e.index.is_valid_stream_index())
      throw DomainError("index rule " + e.index.to_string() + " is not a strictly increasing natural sequence");
  }
}

std::pair<std::uint64_t, std::size_t> Schema::position(std::uint64_t t) const {
  const std::uint64_t pos = cursor.entry + t;
  return {cursor.step + pos / entries.size(), static_cast<std::size_t>(pos % entries.size())};
}

Letter Schema::source_letter(std::uint64_t t) const {
  auto [k, j] = position(t);
  return entries[j].at_step(k);
}

FreeWord Schema::source_prefix(std::uint64_t n) const {
  FreeWord w;
  w.reserve(n);
  for (std::uint64_t t = 0; t < n; ++t) w.push_back(source_letter(t));
  return w;
}

Schema Schema::advanced(std::uint64_t t) const {
  Schema s = *this;
  auto [k, j] = position(t);
  s.cursor = {k, j};
  return s;
}

Schema Schema::inverted() const {
  Schema s = *this;
  s.direction = direction == Direction::forward ? Direction::backward : Direction::forward;
  return s;
}

Schema Schema::rotated_to_origin() const {
  if (cursor.entry == 0) return *this;
  Schema s = *this;
  const std::size_t n = entries.size();
  const std::size_t r = cursor.entry;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t src = r + i;
    if (src < n) {
      s.entries[i] = entries[src];
    } else {
      s.entries[i] = entries[src - n];
      s.entries[i].index = entries[src - n].index.shifted(1);
    }
  }
  s.cursor.entry = 0;
  return s;
}

Schema Schema::expanded(std::uint64_t r) const {
  if (r <= 1) return *this;
  Schema s = *this;
  const std::size_t n = entries.size();
  s.entries.clear();
  s.entries.reserve(n * r);
  for (std::uint64_t i = 0; i < r; ++i)
    for (const auto& e : entries) s.entries.push_back({e.fam, e.index.expanded(r, i), e.sign});
  s.cursor.step = cursor.step / r;
  s.cursor.entry = static_cast<std::size_t>((cursor.step % r) * n + cursor.entry);
  return s;
}

namespace {

bool shift_ok(const IndexPoly& q, std::uint64_t s) { return q.shifted(-static_cast<std::int64_t>(s)).is_valid_stream_index(); }

std::uint64_t entry_max_shift(const IndexPoly& q) {
  if (q.is_affine()) return static_cast<std::uint64_t>(q.constant() / q.lin());
  std::uint64_t lo = 0, hi = q(0);
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo + 1) / 2;
    if (shift_ok(q, mid))
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

// Try to present a period-n origin-rotated schema with period n / r.
std::optional<Schema> compress_by(const Schema& s, std::size_t r) {
  const std::size_t n = s.entries.size();
  const std::size_t d = n / r;
  Schema out = s;
  out.entries.resize(d);
  const auto rr = static_cast<std::int64_t>(r);
  for (std::size_t j = 0; j < d; ++j) {
    const auto& q = s.entries[j].index;
    IndexPoly base(q.quad(), q.lin() * rr, q.constant() * rr * rr, q.denom() * rr * rr);
    if (!base.is_valid_stream_index()) return std::nullopt;
    for (std::size_t i = 0; i < r; ++i) {
      const auto& e = s.entries[i * d + j];
      if (e.sign != s.entries[j].sign || !(e.fam == s.entries[j].fam)) return std::nullopt;
      if (!(base.expanded(r, i) == e.index)) return std::nullopt;
    }
    out.entries[j].index = base;
  }
  out.cursor.step = s.cursor.step * r;
  return out;
}

FamSpec folded(const FamSpec& f, const IndexPoly& q) {
  if (f.is_constant()) return f.is_a ? f : (f.selector.is_everything() ? FamSpec::b() : FamSpec::c());
  try {
    const auto p = membership_profile(f.selector, q);
    if (p.tail == MembershipProfile::Tail::sparse) {
      if (p.hits.empty() && !p.infinite) return FamSpec::c();
      return f;
    }
    const bool v = p.period.front();
    for (bool x : p.period)
      if (x != v) return f;
    for (bool x : p.head)
      if (x != v) return f;
    return v ? FamSpec::b() : FamSpec::c();
  } catch (const FragmentError&) {
    return f;
  }
}

}  // namespace

Schema Schema::max_shifted() const {
  std::uint64_t s = UINT64_MAX;
  for (const auto& e : entries) s = std::min(s, entry_max_shift(e.index));
  if (s == 0) return *this;
  Schema out = *this;
  for (auto& e : out.entries) e.index = e.index.shifted(-static_cast<std::int64_t>(s));
  out.cursor.step += s;
  return out;
}

Schema Schema::normalized() const {
  Schema s = rotated_to_origin();
  const std::size_t n = s.entries.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    if (auto c = compress_by(s, n / d)) {
      s = std::move(*c);
      break;
    }
  }
  s = s.max_shifted();
  for (auto& e : s.entries) e.fam = folded(e.fam, e.index);
  return s;
}

namespace {

// The last entry continued to step -1, when that is still a valid index.
std::optional<Entry> wrapped_last(const Schema& s) {
  Entry e = s.entries.back();
  e.index = e.index.shifted(-1);
  if (!e.index.is_valid_stream_index()) return std::nullopt;
  return e;
}

}  // namespace

std::optional<Letter> Schema::predecessor() const {
  if (cursor.entry > 0) return entries[cursor.entry - 1].at_step(cursor.step);
  if (cursor.step > 0) return entries.back().at_step(cursor.step - 1);
  if (auto e = wrapped_last(*this)) return e->at_step(0);
  return std::nullopt;
}

Schema Schema::retreated() const {
  Schema s = *this;
  if (cursor.entry > 0) {
    --s.cursor.entry;
  } else if (cursor.step > 0) {
    --s.cursor.step;
    s.cursor.entry = entries.size() - 1;
  } else {
    auto e = wrapped_last(*this);
    if (!e) throw DomainError("stream cannot be extended backward");
    s.entries.pop_back();
    s.entries.insert(s.entries.begin(), *e);
  }
  return s;
}

}  // namespace transword
