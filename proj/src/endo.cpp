#include "transword/endo.hpp"

#include <algorithm>
#include <cctype>
#include <random>

#include "transword/error.hpp"

namespace transword {

std::optional<std::uint64_t> TailIndex::at(std::uint64_t n) const {
  if (kind == Kind::pair_next) {
    auto [m, i] = cantor_unpair(n);
    return cantor_pair(m, i + 1);
  }
  const auto v = static_cast<__int128>(slope) * static_cast<__int128>(n) + intercept;
  if (v < 0 || v >= (static_cast<__int128>(1) << 62)) return std::nullopt;
  return static_cast<std::uint64_t>(v);
}

SchematicWord SubstitutionMap::image(std::uint64_t n) const {
  if (auto it = exceptional.find(n); it != exceptional.end()) return it->second;
  if (n < n0) return SchematicWord::finite({a(n)});
  FreeWord w;
  for (const auto& t : tail) {
    auto i = t.index.at(n);
    if (!i) throw DomainError("tail rule gives a negative index at n=" + std::to_string(n));
    w.push_back({t.family, *i, t.sign});
  }
  return SchematicWord::finite(std::move(w));
}

std::optional<std::set<std::uint64_t>> SubstitutionMap::support(Generator g) const {
  std::set<std::uint64_t> out;
  for (const auto& [n, w] : exceptional)
    if (!occurrences(w, g).empty()) out.insert(n);
  auto governed = [&](std::uint64_t n) { return n >= n0 && !exceptional.count(n); };
  if (g.family == Family::a && g.index < n0 && !exceptional.count(g.index)) out.insert(g.index);
  for (const auto& t : tail) {
    if (t.family != g.family) continue;
    if (t.index.kind == TailIndex::Kind::pair_next) {
      auto [m, j] = cantor_unpair(g.index);
      if (j >= 1 && governed(cantor_pair(m, j - 1))) out.insert(cantor_pair(m, j - 1));
      continue;
    }
    const std::int64_t diff = static_cast<std::int64_t>(g.index) - t.index.intercept;
    if (t.index.slope == 0) {
      if (diff == 0) return std::nullopt;
    } else if (t.index.slope > 0) {
      if (diff >= 0 && diff % t.index.slope == 0 && governed(static_cast<std::uint64_t>(diff / t.index.slope)))
        out.insert(static_cast<std::uint64_t>(diff / t.index.slope));
    } else {
      for (std::uint64_t n = n0; t.index.at(n); ++n)
        if (*t.index.at(n) == g.index && governed(n)) out.insert(n);
    }
  }
  return out;
}

SubstitutionMap identity_substitution() { return {}; }

SubstitutionMap telescope_substitution() {
  SubstitutionMap s;
  s.tail = {{Family::a, {TailIndex::Kind::affine, 1, 0}, 1}, {Family::a, {TailIndex::Kind::affine, 1, 1}, -1}};
  return s;
}

SubstitutionMap doubling_substitution() {
  SubstitutionMap s;
  s.tail = {{Family::a, {TailIndex::Kind::affine, 2, 0}, 1}, {Family::a, {TailIndex::Kind::affine, 2, 1}, 1}};
  return s;
}

SubstitutionMap tau_substitution() {
  SubstitutionMap s;
  s.tail = {{Family::a, {TailIndex::Kind::affine, 1, 0}, 1}, {Family::a, TailIndex::pair_next(), -1}};
  return s;
}

namespace {

bool tail_increasing(const SubstitutionMap& s) {
  return std::all_of(s.tail.begin(), s.tail.end(), [](const TailLetter& t) {
    return t.index.kind == TailIndex::Kind::pair_next || t.index.slope >= 1;
  });
}

}  // namespace

bool check_admissible(const SubstitutionMap& s, std::uint64_t bound) {
  if (bound == 0) return true;
  if (!tail_increasing(s)) {
    // Constant tail letters have infinite support; decreasing ones run out.
    for (const auto& t : s.tail)
      if (t.index.kind == TailIndex::Kind::affine && t.index.slope < 0) return false;
  }
  const std::uint64_t top = (bound - 1) / 3;
  std::int64_t low = 0;
  for (const auto& t : s.tail) low = std::min(low, t.index.intercept);
  std::uint64_t horizon = std::max(s.n0, top + 1 + static_cast<std::uint64_t>(-low));
  if (!s.exceptional.empty()) horizon = std::max(horizon, s.exceptional.rbegin()->first + 1);
  ++horizon;
  for (std::uint64_t r = 0; r < bound; ++r) {
    const Generator g = generator_of_rank(r);
    auto claimed = s.support(g);
    if (!claimed) return false;
    std::set<std::uint64_t> direct;
    for (std::uint64_t n = 0; n < horizon; ++n)
      if (!occurrences(s.image(n), g).empty()) direct.insert(n);
    if (direct != *claimed) return false;
  }
  return true;
}

namespace {

SchematicWord letter_image(const SubstitutionMap& s, const Letter& l) {
  if (l.family != Family::a) return SchematicWord::finite({l});
  auto w = s.image(l.index);
  return l.sign < 0 ? invert(w) : w;
}

void append(SchematicWord& out, const SchematicWord& part) {
  out.segments.insert(out.segments.end(), part.segments.begin(), part.segments.end());
}

SchematicWord stream_image(const SubstitutionMap& s, const Schema& st) {
  if (!tail_increasing(s)) throw DomainError("substitution tail is not increasing; image of a stream is not a word");
  Schema src = st.rotated_to_origin();
  src.direction = Direction::forward;
  std::uint64_t limit = s.n0;
  if (!s.exceptional.empty()) limit = std::max(limit, s.exceptional.rbegin()->first + 1);
  std::uint64_t k = src.cursor.step;
  for (;;) {
    bool clear = true;
    for (const auto& e : src.entries)
      if (e.fam.is_a && e.index(k) < limit) clear = false;
    if (clear) break;
    ++k;
  }
  SchematicWord out;
  for (const auto& l : src.source_prefix((k - src.cursor.step) * src.period())) {
    auto img = letter_image(s, l);
    if (!img.is_finite())
      throw DomainError("stream letter " + to_string(l) + " has an infinite image; use projected application");
    append(out, img);
  }

  Schema tail;
  tail.cursor = {k, 0};
  for (const auto& e : src.entries) {
    if (!e.fam.is_a) {
      tail.entries.push_back(e);
      continue;
    }
    std::vector<TailLetter> pat = s.tail;
    if (e.sign < 0) {
      std::reverse(pat.begin(), pat.end());
      for (auto& t : pat) t.sign = -t.sign;
    }
    for (const auto& t : pat) {
      Entry ne{FamSpec::of(t.family), e.index, t.sign};
      if (t.index.kind == TailIndex::Kind::pair_next) {
        auto pr = e.index.as_pairing();
        if (!pr) throw FragmentError("pairing successor applied to a stream whose index is not a pairing row");
        ne.index = IndexPoly::pairing(pr->first, pr->second + 1);
      } else {
        ne.index = e.index.scaled(t.index.slope, t.index.intercept);
      }
      tail.entries.push_back(ne);
    }
  }
  if (!tail.entries.empty()) append(out, SchematicWord::stream(tail));
  return st.direction == Direction::forward ? out : invert(out);
}

}  // namespace

SchematicWord apply_endo(const SubstitutionMap& s, const SchematicWord& w) {
  SchematicWord out;
  for (const auto& seg : w.segments) {
    if (is_block(seg)) {
      for (const auto& l : block(seg)) append(out, letter_image(s, l));
    } else {
      append(out, stream_image(s, stream(seg)));
    }
  }
  return canonicalize(out);
}

FreeWord apply_projected(const SubstitutionMap& s, const SchematicWord& w, const GeneratorSet& gens) {
  GeneratorSet sources;
  for (const auto& g : gens) {
    if (g.family != Family::a) sources.insert(g);
    auto sup = s.support(g);
    if (!sup) throw DomainError("substitution is not admissible: " + to_string(Letter(g.family, g.index)) +
                                " has infinite support");
    for (auto n : *sup) sources.insert({Family::a, n});
  }
  if (sources.empty()) return {};
  std::uint64_t top = 0;
  for (const auto& g : sources) top = std::max(top, g.index);
  const FreeWord pw = project_letters(w, [&](Generator g) { return sources.count(g) > 0; }, top);
  FreeWord out;
  for (const auto& l : pw) {
    if (l.family != Family::a) {
      if (gens.count(l.generator())) out.push_back(l);
      continue;
    }
    FreeWord part = project_finite(s.image(l.index), gens);
    if (l.sign < 0) part = inverse(part);
    out.insert(out.end(), part.begin(), part.end());
  }
  return reduce_free(out);
}

FreeWord apply_projected_rank(const SubstitutionMap& s, const SchematicWord& w, std::uint64_t n) {
  GeneratorSet gens;
  for (std::uint64_t r = 0; r < n; ++r) gens.insert(generator_of_rank(r));
  return apply_projected(s, w, gens);
}

SchematicWord telescope_product(const IndexPoly& q) {
  if (!q.is_valid_stream_index()) throw DomainError("telescope index rule must be strictly increasing");
  Schema x;
  x.entries = {{FamSpec::a(), q, 1}, {FamSpec::a(), q.shifted(1), -1}};
  return canonicalize(SchematicWord::stream(x));
}

namespace {

std::uint64_t min_rank(const FreeWord& w) {
  std::uint64_t r = UINT64_MAX;
  for (const auto& l : w) r = std::min(r, l.rank());
  return r;
}

std::uint64_t max_rank(const FreeWord& w) {
  std::uint64_t r = 0;
  for (const auto& l : w) r = std::max(r, l.rank());
  return r;
}

}  // namespace

EmbeddingReport embedding_check(const SubstitutionMap& s, std::uint64_t n_max, std::size_t len_max,
                                std::uint64_t seed) {
  EmbeddingReport rep;
  const std::uint64_t count = n_max + 2;
  std::vector<FreeWord> img;
  for (std::uint64_t n = 0; n < count; ++n) {
    const auto w = s.image(n);
    if (!w.is_finite()) {
      rep.failure = "image of a" + std::to_string(n) + " is infinite";
      return rep;
    }
    img.push_back(reduce_free(w.as_finite()));
    if (img.back().empty()) {
      rep.failure = "image of a" + std::to_string(n) + " is trivial";
      return rep;
    }
  }
  rep.finite_images = true;

  std::uint64_t bound = 3 * count;
  for (const auto& w : img) bound = std::max(bound, max_rank(w) + 1);
  rep.admissible = check_admissible(s, bound);
  if (!rep.admissible) {
    rep.failure = "substitution is not admissible below rank " + std::to_string(bound);
    return rep;
  }

  rep.levels_increasing = true;
  for (std::uint64_t n = 0; n < count; ++n) {
    rep.j.push_back(min_rank(img[n]));
    if (n > 0 && rep.j[n] <= rep.j[n - 1]) {
      rep.levels_increasing = false;
      rep.failure = "j_n not increasing at n=" + std::to_string(n);
    }
    std::uint64_t m = 0;
    while (project_rank(SchematicWord::finite(img[n]), m).empty()) ++m;
    rep.m.push_back(m);
  }
  if (!rep.levels_increasing) return rep;

  rep.supports_above = true;
  for (std::uint64_t n = 0; n + 1 < count; ++n) {
    if (rep.j[n + 1] < rep.m[n]) {
      rep.supports_above = false;
      rep.failure = "image of a" + std::to_string(n + 1) + " uses a rank below m_" + std::to_string(n);
      return rep;
    }
  }

  // p_{m_{n-1}} . s . p_n == p_{m_{n-1}} . s on sampled words over a_0 .. a_{n_max+1}.
  std::mt19937_64 rng(seed);
  std::vector<SchematicWord> samples;
  GeneratorSet src;
  for (std::uint64_t n = 0; n < count; ++n) src.insert({Family::a, n});
  const std::vector<Generator> srcv(src.begin(), src.end());
  for (int i = 0; i < 200; ++i) {
    FreeWord w;
    const std::size_t len = std::uniform_int_distribution<std::size_t>(0, 2 * len_max)(rng);
    for (std::size_t t = 0; t < len; ++t) {
      const auto& g = srcv[std::uniform_int_distribution<std::size_t>(0, srcv.size() - 1)(rng)];
      w.push_back({g.family, g.index, std::bernoulli_distribution(0.5)(rng) ? 1 : -1});
    }
    samples.push_back(SchematicWord::finite(reduce_free(w)));
  }
  if (tail_increasing(s)) {
    Schema ut;
    ut.entries = {{FamSpec::a(), IndexPoly::affine(1, 0), 1}};
    samples.push_back(SchematicWord::stream(ut));
    samples.push_back(concat(SchematicWord::finite({a(1, -1)}), invert(SchematicWord::stream(ut))));
  }
  rep.retraction = true;
  for (const auto& w : samples) {
    const auto full = apply_endo(s, w);
    for (std::uint64_t n = 1; n < count && rep.retraction; ++n) {
      const auto lhs = project_rank(apply_endo(s, SchematicWord::finite(project_a(w, n))), rep.m[n - 1]);
      if (lhs != project_rank(full, rep.m[n - 1])) {
        rep.retraction = false;
        rep.failure = "retraction identity fails at n=" + std::to_string(n) + " on " + render(w);
      }
    }
    if (!rep.retraction) return rep;
  }

  rep.injective = true;
  for (std::uint64_t n = 1; n <= n_max && rep.injective; ++n) {
    GeneratorSet gens;
    for (std::uint64_t i = 0; i < n; ++i) gens.insert({Family::a, i});
    std::vector<FreeWord> pimg;
    for (std::uint64_t i = 0; i < n; ++i) pimg.push_back(project_rank(SchematicWord::finite(img[i]), rep.m[n - 1]));
    std::map<FreeWord, FreeWord> seen;
    for (const auto& w : enumerate_reduced(gens, len_max)) {
      FreeWord im;
      for (const auto& l : w) {
        const FreeWord& p = pimg[l.index];
        if (l.sign > 0)
          im.insert(im.end(), p.begin(), p.end());
        else
          for (auto it = p.rbegin(); it != p.rend(); ++it) im.push_back(it->inverse());
      }
      im = reduce_free(im);
      ++rep.words_checked;
      auto [it, fresh] = seen.emplace(im, w);
      if (!fresh) {
        rep.injective = false;
        rep.failure = "p_m . s collides on " + to_string(it->second) + " and " + to_string(w) + " (n=" +
                      std::to_string(n) + ")";
        break;
      }
    }
  }
  return rep;
}

namespace {

TailLetter parse_tail_letter(Scanner& sc) {
  TailLetter t;
  const char f = sc.peek();
  if (f != 'a' && f != 'b' && f != 'c') sc.fail("expected a tail letter");
  sc.accept(std::string(1, f));
  t.family = f == 'a' ? Family::a : f == 'b' ? Family::b : Family::c;
  sc.expect("(");
  if (sc.accept("next")) {
    sc.expect("(");
    sc.expect("n");
    sc.expect(")");
    t.index = TailIndex::pair_next();
  } else {
    const IndexPoly q = parse_poly(sc, 'n');
    if (q.quad() != 0 || q.denom() != 1) sc.fail("tail indices must be affine in n");
    t.index = {TailIndex::Kind::affine, q.lin(), q.constant()};
  }
  sc.expect(")");
  if (sc.accept("^")) {
    const auto e = sc.integer();
    if (e != 1 && e != -1) sc.fail("letter exponent must be 1 or -1");
    t.sign = static_cast<int>(e);
  }
  return t;
}

std::string render(const TailLetter& t) {
  std::string idx;
  if (t.index.kind == TailIndex::Kind::pair_next) {
    idx = "next(n)";
  } else {
    const auto a1 = t.index.slope, a0 = t.index.intercept;
    if (a1 != 0) idx = (a1 == 1 ? "" : a1 == -1 ? "-" : std::to_string(a1)) + "n";
    if (a0 != 0 || a1 == 0) idx += (a0 >= 0 && a1 != 0 ? "+" : "") + std::to_string(a0);
  }
  return std::string(1, family_char(t.family)) + "(" + idx + ")" + (t.sign < 0 ? "^-1" : "");
}

}  // namespace

namespace {

void parse_exception(Scanner& sc, SubstitutionMap& s, const SetNames& names) {
  const auto n = sc.natural();
  sc.expect("->");
  s.exceptional[n] = parse_word(sc, names);
}

}  // namespace

SubstitutionMap parse_substitution(std::string_view text, const SetNames& names) {
  Scanner sc(text);
  SubstitutionMap s;
  sc.expect("sub");
  sc.expect("{");
  if (!sc.accept("}")) {
    do {
      if (sc.accept("tail")) {
        sc.expect(":");
        sc.expect("a");
        sc.expect("(");
        sc.expect("n");
        sc.expect(")");
        sc.expect("->");
        s.tail.clear();
        if (sc.accept("[")) {
          while (!sc.accept("]")) {
            if (sc.at_end()) sc.fail("unterminated tail pattern");
            s.tail.push_back(parse_tail_letter(sc));
          }
        } else {
          s.tail.push_back(parse_tail_letter(sc));
        }
      } else if (sc.accept("from")) {
        sc.expect(":");
        s.n0 = sc.natural();
      } else if (sc.accept("except")) {
        sc.expect(":");
        parse_exception(sc, s, names);
      } else if (!s.exceptional.empty() && std::isdigit(static_cast<unsigned char>(sc.peek()))) {
        parse_exception(sc, s, names);
      } else {
        sc.fail("expected tail:, from: or except:");
      }
    } while (sc.accept(","));
    sc.expect("}");
  }
  if (!sc.at_end()) sc.fail("unexpected input");
  return s;
}

std::string render(const SubstitutionMap& s, const SetNames* names) {
  std::string out = "sub{tail: a(n) -> [";
  for (std::size_t i = 0; i < s.tail.size(); ++i) {
    if (i) out += " ";
    out += render(s.tail[i]);
  }
  out += "]";
  if (s.n0) out += ", from: " + std::to_string(s.n0);
  for (const auto& [n, w] : s.exceptional) out += ", except: " + std::to_string(n) + " -> " + render(w, names);
  return out + "}";
}

}  // namespace transword
