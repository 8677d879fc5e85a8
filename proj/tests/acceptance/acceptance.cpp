// Acceptance run: one PASS/FAIL line per criterion.  `acceptance N` runs
// criterion N only; no argument runs all of them.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "support.hpp"
#include "transword/abelian.hpp"
#include "transword/endo.hpp"
#include "transword/error.hpp"
#include "transword/hag.hpp"
#include "transword/reduce.hpp"
#include "transword/sigma.hpp"
#include "transword/stream.hpp"

using namespace transword;
using namespace transword::testkit;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

Outcome free_reduction_oracle() {
  const auto t0 = std::chrono::steady_clock::now();
  const Letter alphabet[] = {a(0), a(0, -1), a(1), a(1, -1), b(0), b(0, -1), b(1), b(1, -1)};
  std::uint64_t checked = 0, mismatches = 0;
  FreeWord w;
  std::vector<int> digits;
  for (std::size_t len = 0; len <= 8; ++len) {
    digits.assign(len, 0);
    for (;;) {
      w.clear();
      for (int d : digits) w.push_back(alphabet[d]);
      if (reduce_free(w) != naive_reduce(w)) ++mismatches;
      ++checked;
      std::size_t i = 0;
      while (i < len && ++digits[i] == 8) digits[i++] = 0;
      if (i == len) break;
    }
  }
  const double secs = seconds_since(t0);
  Outcome o;
  o.pass = mismatches == 0 && secs < 10.0;
  o.detail = std::to_string(checked) + " words, " + std::to_string(mismatches) + " mismatches, " + fmt(secs) + " s";
  return o;
}

Outcome projection_lattice() {
  WordGen gen(test_seed(1002), set_pool(make_family(8)));
  std::uint64_t failures = 0, checks = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto w = gen.word();
    std::vector<FreeWord> p(13);
    for (std::uint64_t n = 0; n <= 12; ++n) p[n] = project_rank(w, n);
    for (std::uint64_t n = 0; n <= 12; ++n) {
      const auto pn = SchematicWord::finite(p[n]);
      for (std::uint64_t m = 0; m <= 12; ++m) {
        ++checks;
        if (project_rank(pn, m) != p[std::min(m, n)]) ++failures;
      }
    }
  }
  return {failures == 0, std::to_string(checks) + " (m, n, w) checks, " + std::to_string(failures) + " failures"};
}

Outcome normal_form_uniqueness() {
  WordGen gen(test_seed(1003), set_pool(make_family(8)));
  std::uint64_t order_mismatch = 0, projection_mismatch = 0, not_reduced = 0, fragment = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto w = gen.word();
    try {
      const auto r1 = reduce(w, {RuleOrder::left_to_right});
      const auto r2 = reduce(shuffle_presentation(w, gen.rng()), {RuleOrder::seeded, gen.uniform(0, 1u << 30)});
      const auto r3 = reduce(w, {RuleOrder::right_to_left});
      if (!equivalent(r1, r2) || !equivalent(r1, r3)) ++order_mismatch;
      if (!equal_up_to(w, r1, 16)) ++projection_mismatch;
      for (std::uint64_t n = 0; n <= 16; ++n)
        if (naive_project(w, n) != project_rank(r1, n)) {
          ++projection_mismatch;
          break;
        }
      if (!is_reduced(r1)) ++not_reduced;
    } catch (const FragmentError&) {
      ++fragment;
    }
  }
  Outcome o;
  o.pass = order_mismatch == 0 && projection_mismatch == 0 && not_reduced == 0 && fragment == 0;
  o.detail = "1000 words: " + std::to_string(order_mismatch) + " order mismatches, " +
             std::to_string(projection_mismatch) + " projection mismatches, " + std::to_string(fragment) +
             " outside the fragment";
  return o;
}

Outcome telescoping_identity() {
  std::vector<std::pair<std::string, IndexPoly>> rules = {{"k(i)=i", IndexPoly::affine(1, 0)},
                                                          {"k(i)=2i", IndexPoly::affine(2, 0)}};
  for (std::uint64_t m = 0; m <= 3; ++m) rules.push_back({"k(i)=pair(" + std::to_string(m) + ",i)", IndexPoly::pairing(m)});
  std::uint64_t failures = 0, checks = 0;
  std::string first;
  for (const auto& [name, q] : rules) {
    const auto t = telescope_product(q);
    const std::uint64_t k0 = q(0);
    for (std::uint64_t n = 1; n <= 20; ++n) {
      // a_{k(0)} itself is only kept once its rank 3 k(0) is below n.
      const FreeWord want = n > 3 * k0 ? FreeWord{a(k0)} : FreeWord{};
      ++checks;
      if (project_rank(t, n) != want || naive_project(t, n) != want) {
        ++failures;
        if (first.empty()) first = name + " N=" + std::to_string(n) + " gives " + to_string(project_rank(t, n));
      }
    }
  }
  return {failures == 0, std::to_string(checks) + " (rule, N) checks, " + std::to_string(failures) + " failures" +
                             (first.empty() ? "" : "; first: " + first)};
}

bool piece_matches_u(const Piece& p, const SigmaFamily& fam) {
  // Maximal piece letters against the definition b_n / c_n by membership.
  for (std::uint64_t n = 0; n <= 30; ++n) {
    FreeWord want;
    for (std::uint64_t i = p.n; 3 * i + 2 < n + 3; ++i) {
      const Letter l(fam.members[p.member].contains(i) ? Family::b : Family::c, i, 1);
      if (l.rank() < n) want.push_back(l);
    }
    if (p.sign < 0) want = inverse(want);
    if (naive_project(p.word, n) != want) return false;
  }
  return true;
}

// Letter of a forward-read stream at source position t.
Letter source_at(const Schema& src, std::uint64_t t) { return src.advanced(t).source_prefix(1).front(); }

bool plain_has_no_member_tail(const Piece& p, const SigmaFamily& fam) {
  for (const auto& seg : p.word.segments) {
    if (is_block(seg)) continue;
    Schema src = stream(seg);
    src.direction = Direction::forward;
    const std::uint64_t t0 = 60;
    const Letter first = source_at(src, t0);
    if (first.family == Family::a) continue;
    bool unit_steps = true;
    for (std::uint64_t t = 1; t <= 30 && unit_steps; ++t) {
      const Letter l = source_at(src, t0 + t);
      unit_steps = l.family != Family::a && l.sign == 1 && l.index == first.index + t;
    }
    if (!unit_steps || first.sign != 1) continue;
    const std::uint64_t i0 = first.index;
    for (const auto& set : fam.members) {
      // Probe the first few members and non-members past i0.
      int members = 0, others = 0;
      bool all = true;
      for (std::uint64_t i = i0; i < i0 + (1u << 20) && all && (members < 3 || others < 3); ++i) {
        const bool in = set.contains(i);
        if (in ? members >= 3 : others >= 3) continue;
        (in ? members : others)++;
        all = source_at(src, t0 + i - i0) == Letter(in ? Family::b : Family::c, i, 1);
      }
      if (all) return false;
    }
  }
  return true;
}

bool same_decomposition(const Decomposition& x, const Decomposition& y) {
  if (x.pieces.size() != y.pieces.size()) return false;
  for (std::size_t i = 0; i < x.pieces.size(); ++i) {
    const auto& p = x.pieces[i];
    const auto& q = y.pieces[i];
    if (p.kind != q.kind) return false;
    if (p.kind == Piece::Kind::maximal && (p.member != q.member || p.n != q.n || p.sign != q.sign)) return false;
    if (!equivalent(p.word, q.word)) return false;
  }
  return true;
}

Outcome decomposition_laws() {
  const auto fam = make_family(8);
  WordGen gen(test_seed(1005), set_pool(fam));
  std::uint64_t cover = 0, shape = 0, maximality = 0, stability = 0, maximal_pieces = 0;
  for (int i = 0; i < 500; ++i) {
    const auto w = reduce(gen.word());
    const auto d = decompose(w, fam);
    if (!equivalent(d.recompose(), w)) ++cover;
    for (std::size_t j = 0; j < d.pieces.size(); ++j) {
      const auto& p = d.pieces[j];
      if (p.word.empty()) ++cover;
      if (p.kind == Piece::Kind::plain) {
        if (!plain_has_no_member_tail(p, fam)) ++maximality;
        continue;
      }
      ++maximal_pieces;
      if (!piece_matches_u(p, fam)) ++shape;
      // No extension: the neighbouring letter toward the finite end is not U_S(n-1).
      if (p.n > 0) {
        const Letter prev(fam.members[p.member].contains(p.n - 1) ? Family::b : Family::c, p.n - 1, 1);
        if (p.sign > 0 && j > 0 && is_block(d.pieces[j - 1].word.segments.back()) &&
            block(d.pieces[j - 1].word.segments.back()).back() == prev)
          ++maximality;
        if (p.sign < 0 && j + 1 < d.pieces.size() && is_block(d.pieces[j + 1].word.segments.front()) &&
            block(d.pieces[j + 1].word.segments.front()).front() == prev.inverse())
          ++maximality;
      }
    }
    const auto again = decompose(reduce(shuffle_presentation(w, gen.rng())), fam);
    if (!same_decomposition(d, again)) ++stability;
  }
  Outcome o;
  o.pass = cover == 0 && shape == 0 && maximality == 0 && stability == 0 && maximal_pieces > 0;
  o.detail = "500 words, " + std::to_string(maximal_pieces) + " maximal pieces; failures: cover " +
             std::to_string(cover) + ", shape " + std::to_string(shape) + ", maximality " +
             std::to_string(maximality) + ", stability " + std::to_string(stability);
  return o;
}

SigmaMap random_map(const SigmaFamily& fam, WordGen& gen) {
  SigmaMap f;
  for (std::size_t i = 0; i < fam.size(); ++i) {
    const auto r = gen.uniform(0, fam.size());
    f.table.push_back(r == fam.size() ? kTarget : r);
  }
  return f;
}

Outcome psi_homomorphism() {
  const auto fam = make_family(8);
  WordGen gen(test_seed(1006), set_pool(fam));
  std::uint64_t failures = 0, inside_stream = 0, finite_fail = 0;
  for (int i = 0; i < 500; ++i) {
    const auto w = reduce(gen.word());
    const auto f = random_map(fam, gen);
    const auto [w0, w1] = split_word(w, gen.rng());
    if (!equivalent(concat(w0, w1), w)) ++failures;
    if (w.stream_count() > w0.stream_count() + w1.stream_count() - 0 ||
        w0.stream_count() + w1.stream_count() > w.stream_count())
      ++failures;
    const bool cut_stream = !w0.segments.empty() && !w1.segments.empty() && !is_block(w0.segments.back()) &&
                            stream(w0.segments.back()).direction == Direction::backward;
    if (cut_stream || (!w1.segments.empty() && !is_block(w1.segments.front()))) ++inside_stream;
    if (!(psi_f(w, fam, f) == hag_product(psi_f(w0, fam, f), psi_f(w1, fam, f)))) ++failures;
    const auto fin = SchematicWord::finite(gen.free_word(8));
    if (!psi_f(fin, fam, f).is_identity()) ++finite_fail;
  }
  Outcome o;
  o.pass = failures == 0 && finite_fail == 0;
  o.detail = "500 triples (" + std::to_string(inside_stream) + " cuts at or inside streams): " +
             std::to_string(failures) + " product failures, " + std::to_string(finite_fail) + " finite words outside the kernel";
  return o;
}

Outcome separation() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto fam = make_family(8);
  std::set<std::vector<bool>> seen;
  std::uint64_t faithful = 0;
  for (std::uint64_t mask = 0; mask < 256; ++mask) {
    std::vector<bool> scal(8);
    for (std::size_t i = 0; i < 8; ++i) scal[i] = (mask >> i) & 1;
    const auto pat = separation_pattern(fam, scal);
    seen.insert(pat);
    if (pat == scal) ++faithful;
  }
  const double secs = seconds_since(t0);
  return {seen.size() == 256 && faithful == 256 && secs < 5.0,
          std::to_string(seen.size()) + "/256 distinct, " + std::to_string(faithful) + "/256 equal to the selection, " +
              fmt(secs) + " s"};
}

std::vector<std::size_t> random_perm(std::size_t k, std::mt19937_64& rng) {
  std::vector<std::size_t> p(k);
  for (std::size_t i = 0; i < k; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

Outcome symmetric_action() {
  const auto fam = make_family(8);
  WordGen gen(test_seed(1008), set_pool(fam));
  std::vector<HagClass> samples;
  while (samples.size() < 20) {
    const auto h = hag_normal(gen.word());
    if (!h.is_identity() || samples.size() < 2) samples.push_back(h);
  }
  std::uint64_t compose = 0, invert_fail = 0, distinct_fail = 0;
  for (int i = 0; i < 50; ++i) {
    const auto s0 = random_perm(8, gen.rng());
    auto s1 = random_perm(8, gen.rng());
    if (s1 == s0) std::swap(s1[0], s1[1]);
    std::vector<std::size_t> comp(8), inv(8);
    for (std::size_t j = 0; j < 8; ++j) {
      comp[j] = s0[s1[j]];
      inv[s0[j]] = j;
    }
    for (const auto& h : samples) {
      if (!(phi_sigma(phi_sigma(h, fam, s1), fam, s0) == phi_sigma(h, fam, comp))) ++compose;
      if (!(phi_sigma(phi_sigma(h, fam, s0), fam, inv) == h)) ++invert_fail;
    }
    bool differ = false;
    for (std::size_t j = 0; j < 8 && !differ; ++j) {
      const auto basis = hag_normal(u_word(fam, j, 0));
      differ = !(phi_sigma(basis, fam, s0) == phi_sigma(basis, fam, s1));
    }
    if (!differ) ++distinct_fail;
  }
  return {compose == 0 && invert_fail == 0 && distinct_fail == 0,
          "50 pairs x 20 classes: " + std::to_string(compose) + " composition, " + std::to_string(invert_fail) +
              " inversion, " + std::to_string(distinct_fail) + " indistinct failures"};
}

Outcome abelian_dichotomy() {
  const auto demo = distinct_homs_demo(10, 2);
  WordGen gen(test_seed(1009), {});
  std::uint64_t not_factoring = 0;
  for (std::uint64_t mask = 0; mask < 1024; mask += 7) {
    std::set<std::uint64_t> scal;
    for (std::uint64_t i = 0; i < 10; ++i)
      if (mask >> i & 1) scal.insert(i);
    const std::uint64_t cut = scal.empty() ? 0 : *scal.rbegin() + 1;
    for (int t = 0; t < 20; ++t) {
      IntSeq v;
      for (int e = 0; e < 6; ++e) v = v + IntSeq::basis(gen.uniform(0, 30), static_cast<std::int64_t>(gen.uniform(0, 9)) - 4);
      const auto r = mod_p(v, 2);
      if (sum_functional(scal, r, 2) != sum_functional(scal, truncate(r, cut), 2)) ++not_factoring;
    }
  }
  return {demo.count == 1024 && not_factoring == 0,
          "count " + std::to_string(demo.count) + "/1024, " + std::to_string(not_factoring) + " functionals not factoring through p_n"};
}

Outcome embedding_machinery() {
  const auto rep = embedding_check(doubling_substitution(), 3, 6, test_seed(1010));
  WordGen gen(test_seed(1010), {});
  std::uint64_t recompose_fail = 0, oracle_fail = 0, tried = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto w = reduce_free(gen.a_word(10, 4));
    GeneratorSet y;
    for (std::uint64_t j = 0; j <= 4; ++j)
      if (gen.coin()) y.insert({Family::a, j});
    if (uses_only(w, y)) continue;
    ++tried;
    if (split_for_adjunction(w, y).recompose() != w) ++recompose_fail;
  }
  int oracle_runs = 0;
  while (oracle_runs < 100) {
    const auto w = reduce_free(gen.a_word(8, 3));
    GeneratorSet y;
    for (std::uint64_t j = 0; j <= 3; ++j)
      if (gen.coin()) y.insert({Family::a, j});
    if (y.size() > 2 || uses_only(w, y)) continue;
    ++oracle_runs;
    if (!adjunction_free_oracle(w, y, 4)) ++oracle_fail;
  }
  std::ostringstream d;
  d << "embedding " << (rep.passed() ? "passed" : "failed: " + rep.failure) << " (" << rep.words_checked
    << " words); " << tried << " splits, " << recompose_fail << " recomposition failures; " << oracle_fail
    << "/100 oracle failures";
  return {rep.passed() && recompose_fail == 0 && oracle_fail == 0 && tried >= 500, d.str()};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"free-reduction oracle equivalence", free_reduction_oracle},
      {"projection lattice", projection_lattice},
      {"normal-form uniqueness", normal_form_uniqueness},
      {"telescoping identity", telescoping_identity},
      {"decomposition laws", decomposition_laws},
      {"psi_f homomorphism", psi_homomorphism},
      {"separation", separation},
      {"symmetric-group action", symmetric_action},
      {"abelian dichotomy", abelian_dichotomy},
      {"embedding machinery", embedding_machinery},
  };
  std::size_t only = 0;
  if (argc > 1) only = std::stoul(argv[1]);
  bool all_pass = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only && only != i + 1) continue;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all_pass &= o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << " (" << criteria[i].first << "): " << o.detail
              << std::endl;
  }
  return all_pass ? 0 : 1;
}
