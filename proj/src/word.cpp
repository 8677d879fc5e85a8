#include "transword/word.hpp"

#include <algorithm>

#include "transword/error.hpp"
#include "transword/stream.hpp"

namespace transword {

SchematicWord SchematicWord::finite(FreeWord w) {
  SchematicWord out;
  if (!w.empty()) out.segments.emplace_back(std::move(w));
  return out;
}

SchematicWord SchematicWord::stream(Schema s) {
  SchematicWord out;
  out.segments.emplace_back(std::move(s));
  return out;
}

bool is_block(const Segment& s) { return std::holds_alternative<FreeWord>(s); }
const FreeWord& block(const Segment& s) { return std::get<FreeWord>(s); }
const Schema& stream(const Segment& s) { return std::get<Schema>(s); }

bool SchematicWord::is_finite() const { return stream_count() == 0; }

std::size_t SchematicWord::stream_count() const {
  return static_cast<std::size_t>(std::count_if(segments.begin(), segments.end(), [](const Segment& s) { return !is_block(s); }));
}

FreeWord SchematicWord::as_finite() const {
  FreeWord out;
  for (const auto& s : segments) {
    if (!is_block(s)) throw DomainError("word is not finite");
    out.insert(out.end(), block(s).begin(), block(s).end());
  }
  return out;
}

namespace {

void push_segment(std::vector<Segment>& segs, Segment s) {
  if (is_block(s)) {
    if (block(s).empty()) return;
    if (!segs.empty() && is_block(segs.back())) {
      auto& prev = std::get<FreeWord>(segs.back());
      prev.insert(prev.end(), block(s).begin(), block(s).end());
      return;
    }
  }
  segs.push_back(std::move(s));
}

bool absorb_forward(FreeWord& blk, Schema& s) {
  bool moved = false;
  while (!blk.empty()) {
    auto p = s.predecessor();
    if (!p || !(*p == blk.back())) break;
    blk.pop_back();
    s = s.retreated().normalized();
    moved = true;
  }
  return moved;
}

bool absorb_backward(Schema& s, FreeWord& blk) {
  bool moved = false;
  while (!blk.empty()) {
    auto p = s.predecessor();
    if (!p || !(p->inverse() == blk.front())) break;
    blk.erase(blk.begin());
    s = s.retreated().normalized();
    moved = true;
  }
  return moved;
}

// Backward x followed by forward y: move letters from the end of x onto y.
bool transfer_junction(Schema& x, Schema& y) {
  bool moved = false;
  for (;;) {
    auto p = y.predecessor();
    if (!p || !(*p == x.source_letter(0).inverse())) break;
    x = x.advanced(1).normalized();
    y = y.retreated().normalized();
    moved = true;
  }
  return moved;
}

}  // namespace

SchematicWord canonicalize(const SchematicWord& w) {
  std::vector<Segment> segs;
  for (const auto& s : w.segments) {
    if (is_block(s)) {
      push_segment(segs, s);
    } else {
      stream(s).validate();
      segs.emplace_back(stream(s).normalized());
    }
  }

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 1; i < segs.size(); ++i) {
      if (is_block(segs[i]) || stream(segs[i]).direction != Direction::forward || !is_block(segs[i - 1])) continue;
      changed |= absorb_forward(std::get<FreeWord>(segs[i - 1]), std::get<Schema>(segs[i]));
    }
    for (std::size_t i = 0; i + 1 < segs.size(); ++i) {
      if (is_block(segs[i]) || stream(segs[i]).direction != Direction::backward || !is_block(segs[i + 1])) continue;
      changed |= absorb_backward(std::get<Schema>(segs[i]), std::get<FreeWord>(segs[i + 1]));
    }
    std::vector<Segment> next;
    for (auto& s : segs) push_segment(next, std::move(s));
    segs = std::move(next);
    for (std::size_t i = 0; i + 1 < segs.size(); ++i) {
      if (is_block(segs[i]) || is_block(segs[i + 1])) continue;
      auto& x = std::get<Schema>(segs[i]);
      auto& y = std::get<Schema>(segs[i + 1]);
      if (x.direction == Direction::backward && y.direction == Direction::forward) changed |= transfer_junction(x, y);
    }
  }
  return SchematicWord{std::move(segs)};
}

SchematicWord concat(const SchematicWord& x, const SchematicWord& y) {
  SchematicWord out = x;
  out.segments.insert(out.segments.end(), y.segments.begin(), y.segments.end());
  return canonicalize(out);
}

SchematicWord invert(const SchematicWord& w) {
  SchematicWord out;
  for (auto it = w.segments.rbegin(); it != w.segments.rend(); ++it) {
    if (is_block(*it))
      out.segments.emplace_back(inverse(block(*it)));
    else
      out.segments.emplace_back(stream(*it).inverted());
  }
  return out;
}

bool equivalent(const SchematicWord& x, const SchematicWord& y) {
  const auto cx = canonicalize(x), cy = canonicalize(y);
  if (cx.segments.size() != cy.segments.size()) return false;
  for (std::size_t i = 0; i < cx.segments.size(); ++i) {
    const auto& p = cx.segments[i];
    const auto& q = cy.segments[i];
    if (is_block(p) != is_block(q)) return false;
    if (is_block(p)) {
      if (block(p) != block(q)) return false;
    } else if (stream(p).direction != stream(q).direction || !same_sequence(stream(p), stream(q))) {
      return false;
    }
  }
  return true;
}

std::vector<Position> occurrences(const SchematicWord& w, Generator g) {
  std::vector<Position> out;
  for (std::size_t i = 0; i < w.segments.size(); ++i) {
    const auto& seg = w.segments[i];
    if (is_block(seg)) {
      const auto& b = block(seg);
      for (std::size_t t = 0; t < b.size(); ++t)
        if (b[t].generator() == g) out.push_back({i, t});
      continue;
    }
    const auto& s = stream(seg);
    std::vector<std::uint64_t> ts;
    const std::size_t n = s.period();
    for (std::size_t j = 0; j < n; ++j) {
      const auto& e = s.entries[j];
      auto k = e.index.solve(g.index);
      if (!k || *k < s.cursor.step || (*k == s.cursor.step && j < s.cursor.entry)) continue;
      if (e.fam.family_at(g.index) != g.family) continue;
      ts.push_back((*k - s.cursor.step) * n + j - s.cursor.entry);
    }
    std::sort(ts.begin(), ts.end());
    if (s.direction == Direction::backward) std::reverse(ts.begin(), ts.end());
    for (auto t : ts) out.push_back({i, t});
  }
  return out;
}

FreeWord project_letters(const SchematicWord& w, const std::function<bool(Generator)>& keep,
                         std::uint64_t max_index) {
  FreeWord out;
  for (const auto& seg : w.segments) {
    if (is_block(seg)) {
      for (const auto& l : block(seg))
        if (keep(l.generator())) out.push_back(l);
      continue;
    }
    const auto& s = stream(seg);
    FreeWord part;
    for (std::uint64_t t = 0;; ++t) {
      auto [k, j] = s.position(t);
      if (t == 0 || j == 0) {
        bool beyond = true;
        for (const auto& e : s.entries)
          if (e.index(k) <= max_index) beyond = false;
        if (beyond) break;
      }
      const Letter l = s.entries[j].at_step(k);
      if (keep(l.generator())) part.push_back(l);
    }
    if (s.direction == Direction::backward) part = inverse(part);
    out.insert(out.end(), part.begin(), part.end());
  }
  return reduce_free(out);
}

FreeWord project_finite(const SchematicWord& w, const GeneratorSet& gens) {
  if (gens.empty()) return {};
  const std::uint64_t top = std::max_element(gens.begin(), gens.end(), [](const Generator& x, const Generator& y) {
                              return x.index < y.index;
                            })->index;
  return project_letters(w, [&](Generator g) { return gens.count(g) > 0; }, top);
}

FreeWord project_rank(const SchematicWord& w, std::uint64_t n) {
  if (n == 0) return {};
  return project_letters(w, [n](Generator g) { return g.rank() < n; }, (n - 1) / 3);
}

FreeWord project_a(const SchematicWord& w, std::uint64_t n) {
  if (n == 0) return {};
  return project_letters(w, [n](Generator g) { return g.family == Family::a && g.index < n; }, n - 1);
}

Letter gamma_recode(Letter l, Recode dir) {
  if (dir == Recode::encode) {
    if (l.family != Family::a) throw DomainError("encode expects letters a_n only, got " + to_string(l));
    return {static_cast<Family>(l.index % 3), l.index / 3, l.sign};
  }
  return {Family::a, 3 * l.index + static_cast<std::uint64_t>(l.family), l.sign};
}

namespace {

Schema encode_stream(const Schema& s) {
  for (const auto& e : s.entries)
    if (!e.fam.is_a) throw DomainError("encode expects letters a_n only");
  std::int64_t dmax = 1;
  for (const auto& e : s.entries) dmax = std::max(dmax, e.index.denom());
  for (std::uint64_t r : {std::uint64_t{1}, std::uint64_t{3}, std::uint64_t{9}, static_cast<std::uint64_t>(3 * dmax),
                          static_cast<std::uint64_t>(9 * dmax)}) {
    Schema x = s.rotated_to_origin().expanded(r).rotated_to_origin();
    bool ok = true;
    std::vector<std::uint64_t> residue(x.period());
    for (std::size_t j = 0; j < x.period() && ok; ++j) {
      const auto& q = x.entries[j].index;
      residue[j] = q(0) % 3;
      for (std::uint64_t k = 1; k < static_cast<std::uint64_t>(6 * dmax) + 6 && ok; ++k) ok = q(k) % 3 == residue[j];
    }
    if (!ok) continue;
    for (std::size_t j = 0; j < x.period(); ++j) {
      auto& e = x.entries[j];
      e.fam = FamSpec::of(static_cast<Family>(residue[j]));
      e.index = e.index.divided(3, static_cast<std::int64_t>(residue[j]));
    }
    x.validate();
    return x.normalized();
  }
  throw FragmentError("index rule residues mod 3 are not periodic");
}

Schema decode_stream(const Schema& s) {
  Schema x = s;
  for (auto& e : x.entries) {
    if (!e.fam.is_constant()) throw DomainError("decode of a selector stream is not supported");
    const Family f = e.fam.is_a ? Family::a : (e.fam.selector.is_everything() ? Family::b : Family::c);
    e.index = e.index.scaled(3, static_cast<std::int64_t>(f));
    e.fam = FamSpec::a();
  }
  return x.normalized();
}

}  // namespace

SchematicWord gamma_recode(const SchematicWord& w, Recode dir) {
  SchematicWord out;
  for (const auto& seg : w.segments) {
    if (is_block(seg)) {
      FreeWord b;
      for (const auto& l : block(seg)) b.push_back(gamma_recode(l, dir));
      out.segments.emplace_back(std::move(b));
    } else {
      Schema s = dir == Recode::encode ? encode_stream(stream(seg)) : decode_stream(stream(seg));
      s.direction = stream(seg).direction;
      out.segments.emplace_back(std::move(s));
    }
  }
  return canonicalize(out);
}

SchematicWord ra_retract(const SchematicWord& w) {
  SchematicWord out;
  for (const auto& seg : w.segments) {
    if (is_block(seg)) {
      FreeWord b;
      for (const auto& l : block(seg))
        if (l.family == Family::a) b.push_back(l);
      out.segments.emplace_back(std::move(b));
      continue;
    }
    const auto& s = stream(seg);
    Schema x = s;
    x.entries.clear();
    std::size_t before = 0;
    for (std::size_t j = 0; j < s.period(); ++j) {
      if (!s.entries[j].fam.is_a) continue;
      if (j < s.cursor.entry) ++before;
      x.entries.push_back(s.entries[j]);
    }
    if (x.entries.empty()) continue;
    x.cursor.entry = before;
    if (before == x.entries.size()) x.cursor = {s.cursor.step + 1, 0};
    out.segments.emplace_back(std::move(x));
  }
  return canonicalize(out);
}

}  // namespace transword
