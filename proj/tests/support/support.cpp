#include "support.hpp"

#include <cstdlib>
#include <string>

namespace transword::testkit {

std::uint64_t test_seed(std::uint64_t fallback) {
  if (const char* s = std::getenv("TRANSWORD_SEED")) return std::stoull(s);
  return fallback;
}

std::vector<SetSpec> set_pool(const SigmaFamily& fam) {
  std::vector<SetSpec> pool = fam.members;
  pool.push_back(SetSpec::ev_periodic("", "10"));
  pool.push_back(SetSpec::ev_periodic("", "01"));
  return pool;
}

Letter WordGen::letter(std::uint64_t max_index) {
  const auto f = static_cast<Family>(uniform(0, 2));
  return {f, uniform(0, max_index), coin() ? 1 : -1};
}

FreeWord WordGen::free_word(std::size_t max_len, std::uint64_t max_index) {
  FreeWord w;
  const auto len = uniform(0, max_len);
  for (std::uint64_t i = 0; i < len; ++i) w.push_back(letter(max_index));
  return w;
}

FreeWord WordGen::a_word(std::size_t max_len, std::uint64_t max_index) {
  FreeWord w;
  const auto len = uniform(0, max_len);
  for (std::uint64_t i = 0; i < len; ++i) w.push_back(a(uniform(0, max_index), coin() ? 1 : -1));
  return w;
}

Schema WordGen::u_stream() {
  Schema s;
  s.direction = coin() ? Direction::forward : Direction::backward;
  s.cursor.step = uniform(0, 8);
  s.entries.push_back({FamSpec::sel(pool_[uniform(0, pool_.size() - 1)]), IndexPoly::affine(1, 0), 1});
  return s;
}

Schema WordGen::stream() {
  Schema s;
  s.direction = coin() ? Direction::forward : Direction::backward;
  // One selector per stream keeps b/c cancellation decidable.
  FamSpec bc;
  switch (uniform(0, 2)) {
    case 0: bc = FamSpec::b(); break;
    case 1: bc = FamSpec::c(); break;
    default: bc = FamSpec::sel(pool_[uniform(0, pool_.size() - 1)]);
  }
  const auto n = uniform(1, 3);
  for (std::uint64_t j = 0; j < n; ++j) {
    Entry e;
    e.fam = coin() ? FamSpec::a() : bc;
    e.index = IndexPoly::affine(static_cast<std::int64_t>(uniform(1, 3)), static_cast<std::int64_t>(uniform(0, 8)));
    e.sign = coin(0.7) ? 1 : -1;
    s.entries.push_back(e);
  }
  s.cursor.step = uniform(0, 4);
  s.cursor.entry = uniform(0, n - 1);
  return s;
}

SchematicWord WordGen::word() {
  SchematicWord w;
  const auto n = uniform(0, 6);
  for (std::uint64_t i = 0; i < n; ++i) {
    const auto r = uniform(0, 9);
    if (r < 4)
      w.segments.emplace_back(free_word(4));
    else if (r < 7)
      w.segments.emplace_back(u_stream());
    else
      w.segments.emplace_back(stream());
  }
  // Occasionally append an inverse tail to force stream cancellations.
  if (!w.segments.empty() && coin(0.3)) {
    SchematicWord tail;
    const auto from = uniform(0, w.segments.size() - 1);
    tail.segments.assign(w.segments.begin() + static_cast<std::ptrdiff_t>(from), w.segments.end());
    tail = invert(tail);
    if (coin()) tail.segments.insert(tail.segments.begin(), Segment{free_word(2)});
    w.segments.insert(w.segments.end(), tail.segments.begin(), tail.segments.end());
  }
  return canonicalize(w);
}

FreeWord naive_reduce(FreeWord w) {
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i].family == w[i + 1].family && w[i].index == w[i + 1].index && w[i].sign == -w[i + 1].sign) {
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(i + 2));
        changed = true;
        break;
      }
    }
  }
  return w;
}

FreeWord naive_project(const SchematicWord& w, std::uint64_t n) {
  FreeWord out;
  for (const auto& seg : w.segments) {
    if (is_block(seg)) {
      for (const auto& l : block(seg))
        if (3 * l.index + static_cast<std::uint64_t>(l.family) < n) out.push_back(l);
      continue;
    }
    const auto& s = stream(seg);
    FreeWord part;
    // Index rules are strictly increasing, so q(k) >= k and steps past n
    // carry only ranks >= n.
    const std::uint64_t last = std::max<std::uint64_t>(s.cursor.step, n) + 1;
    for (std::uint64_t k = s.cursor.step; k <= last; ++k) {
      for (std::size_t j = (k == s.cursor.step ? s.cursor.entry : 0); j < s.entries.size(); ++j) {
        const auto& e = s.entries[j];
        const auto& q = e.index;
        const __int128 kk = k;
        const __int128 num = (static_cast<__int128>(q.quad()) * kk + q.lin()) * kk + q.constant();
        const auto idx = static_cast<std::uint64_t>(num / q.denom());
        const Family f = e.fam.is_a ? Family::a : (e.fam.selector.contains(idx) ? Family::b : Family::c);
        if (3 * idx + static_cast<std::uint64_t>(f) < n) part.push_back({f, idx, e.sign});
      }
    }
    if (s.direction == Direction::backward) {
      std::reverse(part.begin(), part.end());
      for (auto& l : part) l.sign = -l.sign;
    }
    out.insert(out.end(), part.begin(), part.end());
  }
  return naive_reduce(out);
}

SchematicWord shuffle_presentation(const SchematicWord& w, std::mt19937_64& rng) {
  auto pick = [&](std::uint64_t lo, std::uint64_t hi) { return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng); };
  SchematicWord out;
  for (const auto& seg : w.segments) {
    if (is_block(seg)) {
      const auto& b = block(seg);
      const auto cut = pick(0, b.size());
      out.segments.emplace_back(FreeWord(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(cut)));
      out.segments.emplace_back(FreeWord(b.begin() + static_cast<std::ptrdiff_t>(cut), b.end()));
      continue;
    }
    Schema s = stream(seg);
    Schema src = s;
    src.direction = Direction::forward;
    const auto t = pick(0, 4);
    const FreeWord head = src.source_prefix(t);
    Schema rest = src.advanced(t).expanded(pick(1, 3));
    rest.direction = s.direction;
    if (s.direction == Direction::forward) {
      out.segments.emplace_back(head);
      out.segments.emplace_back(rest);
    } else {
      out.segments.emplace_back(rest);
      out.segments.emplace_back(inverse(head));
    }
  }
  return out;
}

std::pair<SchematicWord, SchematicWord> split_word(const SchematicWord& w, std::mt19937_64& rng) {
  auto pick = [&](std::uint64_t lo, std::uint64_t hi) { return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng); };
  SchematicWord w0, w1;
  if (w.segments.empty()) return {w0, w1};
  const auto at = pick(0, w.segments.size() - 1);
  w0.segments.assign(w.segments.begin(), w.segments.begin() + static_cast<std::ptrdiff_t>(at));
  w1.segments.assign(w.segments.begin() + static_cast<std::ptrdiff_t>(at) + 1, w.segments.end());
  const auto& seg = w.segments[at];
  std::vector<Segment> left, right;
  if (is_block(seg)) {
    const auto& b = block(seg);
    const auto cut = pick(0, b.size());
    left.emplace_back(FreeWord(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(cut)));
    right.emplace_back(FreeWord(b.begin() + static_cast<std::ptrdiff_t>(cut), b.end()));
  } else {
    const Schema& s = stream(seg);
    Schema src = s;
    src.direction = Direction::forward;
    const auto t = pick(0, 6);
    const FreeWord head = src.source_prefix(t);
    Schema rest = src.advanced(t);
    rest.direction = s.direction;
    if (s.direction == Direction::forward) {
      left.emplace_back(head);
      right.emplace_back(rest);
    } else {
      left.emplace_back(rest);
      right.emplace_back(inverse(head));
    }
  }
  w0.segments.insert(w0.segments.end(), left.begin(), left.end());
  w1.segments.insert(w1.segments.begin(), right.begin(), right.end());
  return {canonicalize(w0), canonicalize(w1)};
}

}  // namespace transword::testkit
