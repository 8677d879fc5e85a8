#include "transword/sigma.hpp"

#include "transword/error.hpp"
#include "transword/reduce.hpp"
#include "transword/stream.hpp"

namespace transword {

SetNames SigmaFamily::set_names() const {
  SetNames out;
  for (std::size_t i = 0; i < size(); ++i) out.emplace(names[i], members[i]);
  return out;
}

std::optional<std::size_t> SigmaFamily::find(const SetSpec& s) const {
  for (std::size_t i = 0; i < size(); ++i)
    if (members[i] == s) return i;
  return std::nullopt;
}

std::string SigmaFamily::name_of(std::size_t member) const { return member == kTarget ? "T" : names.at(member); }

SigmaFamily make_family(std::size_t k) {
  if (k == 0) throw DomainError("family size must be at least 1");
  std::size_t width = 1;
  while ((std::size_t{1} << width) < k) ++width;
  SigmaFamily fam;
  std::vector<std::string> bits;
  for (std::size_t i = 0; i < k; ++i) {
    std::string b;
    for (std::size_t d = width; d-- > 0;) b += ((i >> d) & 1) ? '1' : '0';
    bits.push_back(b);
    fam.names.push_back("S" + std::to_string(i + 1));
    fam.members.push_back(SetSpec::prefix_code(b.substr(0, width - 1), b.substr(width - 1)));
  }
  // Branch i is bits[i] followed by its last bit forever.
  auto branch_bit = [&](std::size_t i, std::size_t d) { return d < width ? bits[i][d] : bits[i][width - 1]; };
  fam.bound.assign(k, std::vector<std::uint64_t>(k, 0));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      std::string common;
      for (std::size_t d = 0; branch_bit(i, d) == branch_bit(j, d); ++d) common += branch_bit(i, d);
      fam.bound[i][j] = prefix_code_value(common) + 1;
    }
  }
  return fam;
}

SigmaMap identity_map(const SigmaFamily& fam) {
  SigmaMap f;
  for (std::size_t i = 0; i < fam.size(); ++i) f.table.push_back(i);
  return f;
}

SigmaMap selection_map(const std::vector<bool>& scal) {
  SigmaMap f;
  for (std::size_t i = 0; i < scal.size(); ++i) f.table.push_back(scal[i] ? kTarget : i);
  return f;
}

SigmaMap parse_sigma_map(std::string_view text, const SigmaFamily& fam) {
  Scanner sc(text);
  SigmaMap f = identity_map(fam);
  auto member = [&](bool allow_t) {
    const auto name = sc.identifier();
    if (allow_t && name == "T") return kTarget;
    for (std::size_t i = 0; i < fam.size(); ++i)
      if (fam.names[i] == name) return i;
    sc.fail("unknown family member '" + name + "'");
  };
  sc.expect("f");
  sc.expect("{");
  if (!sc.accept("}")) {
    do {
      const auto from = member(false);
      sc.expect("->");
      f.table[from] = member(true);
    } while (sc.accept(","));
    sc.expect("}");
  }
  if (!sc.at_end()) sc.fail("unexpected input");
  return f;
}

std::string render(const SigmaMap& f, const SigmaFamily& fam) {
  std::string out = "f{";
  for (std::size_t i = 0; i < f.table.size(); ++i) {
    if (i) out += ", ";
    out += fam.name_of(i) + "->" + fam.name_of(f.table[i]);
  }
  return out + "}";
}

namespace {

Schema u_source(const SetSpec& s) {
  Schema x;
  x.entries.push_back({FamSpec::sel(s), IndexPoly::affine(1, 0), 1});
  return x;
}

Schema t_source() {
  Schema x;
  x.entries.push_back({FamSpec::a(), IndexPoly::affine(1, 0), 1});
  return x;
}

Schema member_source(const SigmaFamily& fam, std::size_t m) {
  return m == kTarget ? t_source() : u_source(fam.members.at(m));
}

struct Match {
  std::size_t member;
  std::uint64_t head;  // source letters before the participating tail
  std::uint64_t n;
};

std::optional<Match> match_stream(const Schema& s, const SigmaFamily& fam) {
  Schema src = s;
  src.direction = Direction::forward;
  for (std::size_t i = 0; i < fam.size(); ++i) {
    if (auto al = eventual_alignment(u_source(fam.members[i]), src))
      return Match{i, al->from, static_cast<std::uint64_t>(static_cast<std::int64_t>(al->from) + al->shift)};
  }
  return std::nullopt;
}

void add_plain(std::vector<Piece>& pieces, Segment seg) {
  if (is_block(seg) && block(seg).empty()) return;
  if (pieces.empty() || pieces.back().kind != Piece::Kind::plain) pieces.push_back({});
  pieces.back().word.segments.push_back(std::move(seg));
}

}  // namespace

SchematicWord u_word(const SetSpec& s, std::uint64_t n) {
  Schema x = u_source(s);
  x.cursor.step = n;
  return canonicalize(SchematicWord::stream(x));
}

SchematicWord u_word(const SigmaFamily& fam, std::size_t member, std::uint64_t n) {
  Schema x = member_source(fam, member);
  x.cursor.step = n;
  return canonicalize(SchematicWord::stream(x));
}

SchematicWord Decomposition::recompose() const {
  SchematicWord out;
  for (const auto& p : pieces) out.segments.insert(out.segments.end(), p.word.segments.begin(), p.word.segments.end());
  return canonicalize(out);
}

Decomposition decompose(const SchematicWord& w, const SigmaFamily& fam) {
  if (!is_reduced(w)) throw DomainError("decompose requires a reduced word");
  const SchematicWord cw = canonicalize(w);
  Decomposition d;
  auto& pieces = d.pieces;
  for (const auto& seg : cw.segments) {
    if (is_block(seg)) {
      add_plain(pieces, seg);
      continue;
    }
    const Schema& s = stream(seg);
    auto m = match_stream(s, fam);
    if (!m) {
      add_plain(pieces, seg);
      continue;
    }
    Schema src = s;
    src.direction = Direction::forward;
    const FreeWord head = src.source_prefix(m->head);
    Piece p{Piece::Kind::maximal, m->member, m->n, 1, {}};
    if (s.direction == Direction::forward) {
      add_plain(pieces, head);
      pieces.push_back(p);
    } else {
      p.sign = -1;
      pieces.push_back(p);
      add_plain(pieces, inverse(head));
    }
  }

  // Predecessor extension into the adjacent finite block.
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    auto& p = pieces[i];
    if (p.kind != Piece::Kind::maximal) continue;
    const SetSpec& s = fam.members[p.member];
    auto prev_letter = [&](std::uint64_t n) { return Letter(s.contains(n - 1) ? Family::b : Family::c, n - 1, 1); };
    if (p.sign > 0 && i > 0 && pieces[i - 1].kind == Piece::Kind::plain) {
      auto& segs = pieces[i - 1].word.segments;
      if (is_block(segs.back())) {
        auto& b = std::get<FreeWord>(segs.back());
        while (!b.empty() && p.n > 0 && b.back() == prev_letter(p.n)) {
          b.pop_back();
          --p.n;
        }
        if (b.empty()) segs.pop_back();
      }
    } else if (p.sign < 0 && i + 1 < pieces.size() && pieces[i + 1].kind == Piece::Kind::plain) {
      auto& segs = pieces[i + 1].word.segments;
      if (is_block(segs.front())) {
        auto& b = std::get<FreeWord>(segs.front());
        while (!b.empty() && p.n > 0 && b.front() == prev_letter(p.n).inverse()) {
          b.erase(b.begin());
          --p.n;
        }
        if (b.empty()) segs.erase(segs.begin());
      }
    }
  }

  std::vector<Piece> out;
  for (auto& p : pieces) {
    if (p.kind == Piece::Kind::maximal) {
      p.word = u_word(fam, p.member, p.n);
      if (p.sign < 0) p.word = invert(p.word);
      out.push_back(std::move(p));
    } else if (!p.word.segments.empty()) {
      p.word = canonicalize(p.word);
      out.push_back(std::move(p));
    }
  }
  d.pieces = std::move(out);
  return d;
}

SchematicWord apply_Ff(const SchematicWord& w, const SigmaFamily& fam, const SigmaMap& f) {
  if (f.table.size() != fam.size()) throw DomainError("sigma map is not total on the family");
  SchematicWord out;
  for (const auto& p : decompose(w, fam).pieces) {
    SchematicWord part = p.word;
    if (p.kind == Piece::Kind::maximal) {
      part = u_word(fam, f.table[p.member], p.n);
      if (p.sign < 0) part = invert(part);
    }
    out.segments.insert(out.segments.end(), part.segments.begin(), part.segments.end());
  }
  return canonicalize(out);
}

HagClass psi_f(const SchematicWord& w, const SigmaFamily& fam, const SigmaMap& f) {
  return hag_normal(apply_Ff(reduce(w), fam, f));
}

HagClass phi_f(const HagClass& h, const SigmaFamily& fam, const SigmaMap& f) {
  HagClass out;
  for (const auto& g : h.germs) {
    Germ img = g;
    for (std::size_t i = 0; i < fam.size(); ++i) {
      if (eventual_alignment(u_source(fam.members[i]), g.schema)) {
        img = {member_source(fam, f.table.at(i)).normalized(), g.sign};
        break;
      }
    }
    out = hag_product(out, HagClass{{img}});
  }
  return out;
}

HagClass phi_sigma(const HagClass& h, const SigmaFamily& fam, const std::vector<std::size_t>& perm) {
  if (perm.size() != fam.size()) throw DomainError("permutation size does not match the family");
  std::vector<bool> seen(perm.size(), false);
  for (auto p : perm) {
    if (p >= perm.size() || seen[p]) throw DomainError("not a permutation of the family");
    seen[p] = true;
  }
  return phi_f(h, fam, SigmaMap{perm});
}

std::vector<bool> separation_pattern(const SigmaFamily& fam, const std::vector<bool>& scal) {
  if (scal.size() != fam.size()) throw DomainError("selection size does not match the family");
  const SigmaMap f = selection_map(scal);
  std::vector<bool> out;
  for (std::size_t i = 0; i < fam.size(); ++i)
    out.push_back(!ra_retract(psi_f(u_word(fam, i, 0), fam, f)).is_identity());
  return out;
}

std::string render(const Decomposition& d, const SigmaFamily& fam) {
  const auto names = fam.set_names();
  std::string out;
  for (const auto& p : d.pieces) {
    if (!out.empty()) out += "\n";
    if (p.kind == Piece::Kind::plain)
      out += "plain " + render(p.word, &names);
    else
      out += "maximal " + fam.name_of(p.member) + " n=" + std::to_string(p.n) + (p.sign > 0 ? " +" : " -");
  }
  return out;
}

}  // namespace transword
