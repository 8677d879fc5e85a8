#include "transword/hag.hpp"

#include "transword/reduce.hpp"
#include "transword/stream.hpp"

namespace transword {

bool same_germ(const Germ& x, const Germ& y) {
  return x.sign == y.sign && eventual_alignment(x.schema, y.schema).has_value();
}

bool operator==(const HagClass& x, const HagClass& y) {
  if (x.germs.size() != y.germs.size()) return false;
  for (std::size_t i = 0; i < x.germs.size(); ++i)
    if (!same_germ(x.germs[i], y.germs[i])) return false;
  return true;
}

Germ germ_of(const Schema& s) {
  Schema src = s;
  src.direction = Direction::forward;
  return {src.normalized(), s.direction == Direction::forward ? 1 : -1};
}

namespace {

void push_germ(std::vector<Germ>& stack, const Germ& g) {
  if (!stack.empty() && same_germ(stack.back(), g.inverse()))
    stack.pop_back();
  else
    stack.push_back(g);
}

}  // namespace

HagClass hag_normal(const SchematicWord& w) {
  HagClass out;
  for (const auto& seg : reduce(w).segments)
    if (!is_block(seg)) push_germ(out.germs, germ_of(stream(seg)));
  return out;
}

bool hag_equal(const SchematicWord& x, const SchematicWord& y) { return hag_normal(x) == hag_normal(y); }

HagClass hag_product(const HagClass& x, const HagClass& y) {
  HagClass out = x;
  for (const auto& g : y.germs) push_germ(out.germs, g);
  return out;
}

HagClass hag_inverse(const HagClass& x) {
  HagClass out;
  for (auto it = x.germs.rbegin(); it != x.germs.rend(); ++it) out.germs.push_back(it->inverse());
  return out;
}

HagClass ra_retract(const HagClass& h) {
  HagClass out;
  for (const auto& g : h.germs) {
    Schema s = g.schema;
    s.entries.clear();
    for (const auto& e : g.schema.entries)
      if (e.fam.is_a) s.entries.push_back(e);
    if (s.entries.empty()) continue;
    s.cursor = {g.schema.cursor.step + 1, 0};
    push_germ(out.germs, {s.normalized(), g.sign});
  }
  return out;
}

SchematicWord tail_representative(const HagClass& h, std::uint64_t n) {
  SchematicWord w;
  for (const auto& g : h.germs) {
    Schema s = g.schema.rotated_to_origin();
    std::uint64_t k = s.cursor.step;
    for (;;) {
      bool high = true;
      for (const auto& e : s.entries)
        if (e.index(k) < n) high = false;
      if (high) break;
      ++k;
    }
    s.cursor = {k, 0};
    s.direction = g.sign > 0 ? Direction::forward : Direction::backward;
    w.segments.emplace_back(s);
  }
  return canonicalize(w);
}

std::string render(const Germ& g, const SetNames* names) {
  const char sign = g.sign > 0 ? '+' : '-';
  const Schema& s = g.schema;
  if (s.period() == 1 && s.entries[0].index.quad() == 0 && s.entries[0].index.lin() == 1) {
    std::string f = render(s.entries[0].fam, names);
    if (s.entries[0].sign < 0) f += "^-1";
    return f + sign;
  }
  std::string best;
  for (std::size_t r = 0; r < s.period(); ++r) {
    const Schema x = s.advanced(r).normalized();
    std::string text = "{";
    for (std::size_t i = 0; i < x.period(); ++i) {
      if (i) text += ", ";
      text += render(x.entries[i], names);
    }
    text += "}";
    if (best.empty() || text < best) best = text;
  }
  return best + sign;
}

std::string render(const HagClass& h, const SetNames* names) {
  std::string out = "germ-seq: [";
  for (std::size_t i = 0; i < h.germs.size(); ++i) {
    if (i) out += ", ";
    out += render(h.germs[i], names);
  }
  return out + "]";
}

}  // namespace transword
