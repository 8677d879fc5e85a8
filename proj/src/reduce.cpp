#include "transword/reduce.hpp"

#include <algorithm>
#include <random>

#include "transword/error.hpp"
#include "transword/stream.hpp"

namespace transword {

namespace {

enum class Rule { free, stream, block_stream, stream_block, omega_pair, junction };

struct Redex {
  Rule rule;
  std::size_t seg;
  std::size_t pos = 0;
};

bool forward_at(const std::vector<Segment>& s, std::size_t i) {
  return i < s.size() && !is_block(s[i]) && stream(s[i]).direction == Direction::forward;
}
bool backward_at(const std::vector<Segment>& s, std::size_t i) {
  return i < s.size() && !is_block(s[i]) && stream(s[i]).direction == Direction::backward;
}
bool block_at(const std::vector<Segment>& s, std::size_t i) { return i < s.size() && is_block(s[i]); }

Schema source_of(const Schema& s) {
  Schema x = s;
  x.direction = Direction::forward;
  return x;
}

std::vector<Redex> redexes(const std::vector<Segment>& segs) {
  std::vector<Redex> out;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    if (block_at(segs, i)) {
      const auto& b = block(segs[i]);
      for (std::size_t p = 0; p + 1 < b.size(); ++p)
        if (b[p].is_inverse_of(b[p + 1])) out.push_back({Rule::free, i, p});
      if (forward_at(segs, i + 1) && b.back().is_inverse_of(stream(segs[i + 1]).source_letter(0)))
        out.push_back({Rule::block_stream, i});
      continue;
    }
    const auto& s = stream(segs[i]);
    if (reduce_stream(source_of(s))) out.push_back({Rule::stream, i});
    if (s.direction == Direction::backward) {
      if (block_at(segs, i + 1) && block(segs[i + 1]).front() == s.source_letter(0))
        out.push_back({Rule::stream_block, i});
      if (forward_at(segs, i + 1) && s.source_letter(0) == stream(segs[i + 1]).source_letter(0))
        out.push_back({Rule::junction, i});
    } else if (backward_at(segs, i + 1) && eventual_alignment(s, source_of(stream(segs[i + 1])))) {
      out.push_back({Rule::omega_pair, i});
    }
  }
  return out;
}

void rewrite(std::vector<Segment>& segs, const Redex& r) {
  const std::size_t i = r.seg;
  switch (r.rule) {
    case Rule::free: {
      auto& b = std::get<FreeWord>(segs[i]);
      b.erase(b.begin() + static_cast<std::ptrdiff_t>(r.pos), b.begin() + static_cast<std::ptrdiff_t>(r.pos + 2));
      return;
    }
    case Rule::block_stream: {
      std::get<FreeWord>(segs[i]).pop_back();
      auto& y = std::get<Schema>(segs[i + 1]);
      y = y.advanced(1);
      return;
    }
    case Rule::stream_block: {
      auto& b = std::get<FreeWord>(segs[i + 1]);
      b.erase(b.begin());
      auto& x = std::get<Schema>(segs[i]);
      x = x.advanced(1);
      return;
    }
    case Rule::stream: {
      const Schema s = stream(segs[i]);
      auto red = reduce_stream(source_of(s));
      std::vector<Segment> repl;
      if (s.direction == Direction::forward) {
        repl.emplace_back(red->head);
        if (red->tail) repl.emplace_back(*red->tail);
      } else {
        if (red->tail) repl.emplace_back(red->tail->inverted());
        repl.emplace_back(inverse(red->head));
      }
      segs.erase(segs.begin() + static_cast<std::ptrdiff_t>(i));
      segs.insert(segs.begin() + static_cast<std::ptrdiff_t>(i), repl.begin(), repl.end());
      return;
    }
    case Rule::omega_pair: {
      const Schema x = stream(segs[i]);
      const Schema y = source_of(stream(segs[i + 1]));
      const auto al = *eventual_alignment(x, y);
      FreeWord mid = x.source_prefix(static_cast<std::uint64_t>(static_cast<std::int64_t>(al.from) + al.shift));
      const FreeWord q = inverse(y.source_prefix(al.from));
      mid.insert(mid.end(), q.begin(), q.end());
      segs.erase(segs.begin() + static_cast<std::ptrdiff_t>(i), segs.begin() + static_cast<std::ptrdiff_t>(i + 2));
      segs.insert(segs.begin() + static_cast<std::ptrdiff_t>(i), Segment{mid});
      return;
    }
    case Rule::junction: {
      auto& x = std::get<Schema>(segs[i]);
      auto& y = std::get<Schema>(segs[i + 1]);
      if (same_sequence(x, y)) {
        segs.erase(segs.begin() + static_cast<std::ptrdiff_t>(i), segs.begin() + static_cast<std::ptrdiff_t>(i + 2));
      } else {
        x = x.advanced(1);
        y = y.advanced(1);
      }
      return;
    }
  }
}

}  // namespace

SchematicWord reduce(const SchematicWord& w, const ReduceOptions& opts) {
  std::mt19937_64 rng(opts.seed);
  SchematicWord cur = canonicalize(w);
  for (std::size_t step = 0; step < opts.max_steps; ++step) {
    auto rs = redexes(cur.segments);
    if (rs.empty()) return cur;
    std::size_t pick = 0;
    if (opts.order == RuleOrder::right_to_left)
      pick = rs.size() - 1;
    else if (opts.order == RuleOrder::seeded)
      pick = std::uniform_int_distribution<std::size_t>(0, rs.size() - 1)(rng);
    rewrite(cur.segments, rs[pick]);
    cur = canonicalize(cur);
  }
  throw FragmentError("reduction did not terminate within the step budget");
}

bool is_reduced(const SchematicWord& w) { return redexes(canonicalize(w).segments).empty(); }

bool equal_up_to(const SchematicWord& x, const SchematicWord& y, std::uint64_t n) {
  return project_rank(x, n) == project_rank(y, n);
}

bool heg_equal(const SchematicWord& x, const SchematicWord& y) { return equivalent(reduce(x), reduce(y)); }

JunctionSplit junction_split(const SchematicWord& x, const SchematicWord& y) {
  std::vector<Segment> pre = canonicalize(x).segments, suf = canonicalize(y).segments;
  std::vector<Segment> left, right;  // left collected back to front

  auto push_front_block = [](std::vector<Segment>& v, Letter l) {
    if (!v.empty() && is_block(v.back()))
      std::get<FreeWord>(v.back()).insert(std::get<FreeWord>(v.back()).begin(), l);
    else
      v.emplace_back(FreeWord{l});
  };
  auto push_back_block = [](std::vector<Segment>& v, Letter l) {
    if (!v.empty() && is_block(v.back()))
      std::get<FreeWord>(v.back()).push_back(l);
    else
      v.emplace_back(FreeWord{l});
  };

  for (std::size_t guard = 0;; ++guard) {
    if (guard > 1'000'000) throw FragmentError("junction split did not terminate");
    if (pre.empty() || suf.empty()) break;
    Segment& l = pre.back();
    Segment& f = suf.front();
    std::optional<Letter> last, first;
    if (is_block(l))
      last = block(l).back();
    else if (stream(l).direction == Direction::backward)
      last = stream(l).source_letter(0).inverse();
    if (is_block(f))
      first = block(f).front();
    else if (stream(f).direction == Direction::forward)
      first = stream(f).source_letter(0);

    if (!is_block(l) && !is_block(f) && last && first && same_sequence(source_of(stream(l)), stream(f))) {
      left.push_back(l);
      right.push_back(f);
      pre.pop_back();
      suf.erase(suf.begin());
      continue;
    }
    if (last && first) {
      if (!last->is_inverse_of(*first)) break;
      push_front_block(left, *last);
      push_back_block(right, *first);
      if (is_block(l)) {
        std::get<FreeWord>(l).pop_back();
        if (block(l).empty()) pre.pop_back();
      } else {
        std::get<Schema>(l) = stream(l).advanced(1);
      }
      if (is_block(f)) {
        std::get<FreeWord>(f).erase(std::get<FreeWord>(f).begin());
        if (block(f).empty()) suf.erase(suf.begin());
      } else {
        std::get<Schema>(f) = stream(f).advanced(1);
      }
      continue;
    }
    if (!is_block(l) && !is_block(f) && !last && !first) {
      const Schema xs = stream(l);
      const Schema ys = source_of(stream(f));
      auto al = eventual_alignment(xs, ys);
      if (!al) break;
      const std::uint64_t px = static_cast<std::uint64_t>(static_cast<std::int64_t>(al->from) + al->shift);
      left.emplace_back(xs.advanced(px));
      right.emplace_back(ys.advanced(al->from).inverted());
      pre.pop_back();
      suf.erase(suf.begin());
      if (px > 0) pre.emplace_back(xs.source_prefix(px));
      if (al->from > 0) suf.insert(suf.begin(), Segment{inverse(ys.source_prefix(al->from))});
      continue;
    }
    break;
  }

  JunctionSplit out;
  out.prefix = canonicalize(SchematicWord{pre});
  out.suffix = canonicalize(SchematicWord{suf});
  std::reverse(left.begin(), left.end());
  out.left = canonicalize(SchematicWord{left});
  out.right = canonicalize(SchematicWord{right});
  return out;
}

}  // namespace transword
