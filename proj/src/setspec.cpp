#include "transword/setspec.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

#include "transword/error.hpp"

namespace transword {

namespace {

void check_bits(const std::string& bits, const char* what) {
  for (char ch : bits) {
    if (ch != '0' && ch != '1') throw DomainError(std::string(what) + " must be a bit string");
  }
}

bool all_of_char(const std::string& s, char ch) {
  return std::all_of(s.begin(), s.end(), [ch](char x) { return x == ch; });
}

}  // namespace

bool BitSequence::at(std::uint64_t n) const {
  if (n < prefix.size()) return prefix[n] == '1';
  return period[(n - prefix.size()) % period.size()] == '1';
}

BitSequence BitSequence::normalized() const {
  if (period.empty()) throw DomainError("eventually periodic sequence needs a nonempty period");
  BitSequence out = *this;
  const std::size_t n = out.period.size();
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    bool repeats = true;
    for (std::size_t i = d; i < n && repeats; ++i) repeats = out.period[i] == out.period[i - d];
    if (repeats) {
      out.period.resize(d);
      break;
    }
  }
  while (!out.prefix.empty() && out.prefix.back() == out.period.back()) {
    out.period = out.period.back() + out.period.substr(0, out.period.size() - 1);
    out.prefix.pop_back();
  }
  return out;
}

SetSpec::SetSpec(Variant v) : value_(std::move(v)) {
  if (auto* fin = std::get_if<Finite>(&value_)) {
    std::sort(fin->elements.begin(), fin->elements.end());
    fin->elements.erase(std::unique(fin->elements.begin(), fin->elements.end()), fin->elements.end());
  } else if (auto* ev = std::get_if<EvPeriodic>(&value_)) {
    ev->bits = ev->bits.normalized();
    if (all_of_char(ev->bits.period, '0')) {
      std::vector<std::uint64_t> ones;
      for (std::size_t i = 0; i < ev->bits.prefix.size(); ++i) {
        if (ev->bits.prefix[i] == '1') ones.push_back(i);
      }
      value_ = Finite{std::move(ones)};
    }
  } else if (auto* pc = std::get_if<PrefixCode>(&value_)) {
    pc->branch = pc->branch.normalized();
  }
}

SetSpec SetSpec::finite(std::vector<std::uint64_t> elements) { return SetSpec(Finite{std::move(elements)}); }

SetSpec SetSpec::ev_periodic(std::string prefix, std::string period) {
  check_bits(prefix, "eper prefix");
  check_bits(period, "eper period");
  if (period.empty()) throw DomainError("eper period must be nonempty");
  return SetSpec(EvPeriodic{{std::move(prefix), std::move(period)}});
}

SetSpec SetSpec::prefix_code(std::string prefix, std::string period) {
  check_bits(prefix, "pcode prefix");
  check_bits(period, "pcode period");
  if (period.empty()) throw DomainError("pcode period must be nonempty");
  return SetSpec(PrefixCode{{std::move(prefix), std::move(period)}});
}

bool SetSpec::contains(std::uint64_t n) const {
  return std::visit(
      [n](const auto& v) -> bool {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Finite>) {
          return std::binary_search(v.elements.begin(), v.elements.end(), n);
        } else if constexpr (std::is_same_v<T, EvPeriodic>) {
          return v.bits.at(n);
        } else {
          const std::string bits = prefix_code_bits(n);
          for (std::size_t i = 0; i < bits.size(); ++i) {
            if ((bits[i] == '1') != v.branch.at(i)) return false;
          }
          return true;
        }
      },
      value_);
}

bool SetSpec::is_infinite() const { return !std::holds_alternative<Finite>(value_); }

bool SetSpec::is_everything() const {
  const auto* ev = std::get_if<EvPeriodic>(&value_);
  return ev && ev->bits.prefix.empty() && ev->bits.period == "1";
}

bool SetSpec::is_nothing() const {
  const auto* fin = std::get_if<Finite>(&value_);
  return fin && fin->elements.empty();
}

std::string SetSpec::to_string() const {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Finite>) {
          std::string out = "fin{";
          for (std::size_t i = 0; i < v.elements.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(v.elements[i]);
          }
          return out + "}";
        } else if constexpr (std::is_same_v<T, EvPeriodic>) {
          return "eper(\"" + v.bits.prefix + "\",\"" + v.bits.period + "\")";
        } else {
          return "pcode(\"" + v.branch.prefix + "\",\"" + v.branch.period + "\")";
        }
      },
      value_);
}

std::uint64_t prefix_code_value(const std::string& bits) {
  if (bits.size() > 61) throw FragmentError("prefix code depth exceeds 61");
  std::uint64_t v = 1;
  for (char ch : bits) v = (v << 1) | (ch == '1' ? 1u : 0u);
  return v - 1;
}

std::string prefix_code_bits(std::uint64_t n) {
  std::string out;
  for (std::uint64_t v = n + 1; v > 1; v >>= 1) out += (v & 1u) ? '1' : '0';
  std::reverse(out.begin(), out.end());
  return out;
}

namespace {

// Hits of the prefix code along k |-> alpha k + beta.  Codes grow
// geometrically, so past the point where code >= beta only residues matter;
// the state (branch phase, value mod alpha, 2^d mod alpha) is finite.
MembershipProfile sparse_profile(const BitSequence& branch, std::uint64_t alpha, std::uint64_t beta) {
  MembershipProfile prof;
  prof.tail = MembershipProfile::Tail::sparse;

  const std::uint64_t target = beta % alpha;
  std::uint64_t val_mod = 0;
  std::uint64_t pow_mod = 1 % alpha;
  unsigned __int128 code = 0;  // exact while not `big`
  bool big = false;
  std::map<std::tuple<std::size_t, std::uint64_t, std::uint64_t>, std::size_t> seen;
  std::vector<bool> hit_at_depth;

  for (std::size_t d = 0;; ++d) {
    if (!big) {
      code = (static_cast<unsigned __int128>(1) << d) - 1;
      // value of the first d bits
      unsigned __int128 val = 0;
      for (std::size_t i = 0; i < d; ++i) val = (val << 1) | (branch.at(i) ? 1u : 0u);
      code += val;
      if (d >= 62) big = true;
    }
    const bool reached = big || code >= beta;
    const bool hit = reached && (pow_mod + alpha - (1 % alpha) + val_mod) % alpha == target;
    hit_at_depth.push_back(hit);
    if (hit) {
      if (big) {
        prof.infinite = true;
        return prof;
      }
      prof.hits.push_back(static_cast<std::uint64_t>((code - beta) / alpha));
    }
    if (reached && d >= branch.prefix.size()) {
      const auto key = std::make_tuple((d - branch.prefix.size()) % branch.period.size(), val_mod, pow_mod);
      auto [it, inserted] = seen.emplace(key, d);
      if (!inserted) {
        for (std::size_t x = it->second; x < d; ++x) {
          if (hit_at_depth[x]) prof.infinite = true;
        }
        return prof;
      }
    }
    val_mod = (2 * val_mod + (branch.at(d) ? 1u : 0u)) % alpha;
    pow_mod = (2 * pow_mod) % alpha;
  }
}

}  // namespace

MembershipProfile membership_profile(const SetSpec& s, const IndexPoly& q) {
  MembershipProfile prof;
  if (s.is_everything() || s.is_nothing()) {
    prof.period = {s.is_everything()};
    return prof;
  }
  if (const auto* fin = std::get_if<SetSpec::Finite>(&s.value())) {
    const std::uint64_t max = fin->elements.back();
    for (std::uint64_t k = 0; q(k) <= max; ++k) prof.head.push_back(s.contains(q(k)));
    prof.period = {false};
    return prof;
  }
  if (!q.is_affine()) throw FragmentError("membership along a non-affine index needs a constant or finite set");
  const auto alpha = static_cast<std::uint64_t>(q.lin());
  const auto beta = static_cast<std::uint64_t>(q.constant());
  if (const auto* ev = std::get_if<SetSpec::EvPeriodic>(&s.value())) {
    const std::uint64_t len = ev->bits.prefix.size();
    const std::uint64_t h = beta >= len ? 0 : (len - beta + alpha - 1) / alpha;
    for (std::uint64_t k = 0; k < h; ++k) prof.head.push_back(ev->bits.at(q(k)));
    for (std::uint64_t i = 0; i < ev->bits.period.size(); ++i) prof.period.push_back(ev->bits.at(q(h + i)));
    return prof;
  }
  return sparse_profile(std::get<SetSpec::PrefixCode>(s.value()).branch, alpha, beta);
}

namespace {

bool periodic_bit(const MembershipProfile& p, std::uint64_t k) {
  if (k < p.head.size()) return p.head[k];
  return p.period[(k - p.head.size()) % p.period.size()];
}

}  // namespace

EventualRelation compare_membership(const SetSpec& s, const IndexPoly& p, const SetSpec& t, const IndexPoly& q) {
  const auto ps = membership_profile(s, p);
  const auto qt = membership_profile(t, q);
  using Tail = MembershipProfile::Tail;

  EventualRelation rel;
  if (ps.tail == Tail::periodic && qt.tail == Tail::periodic) {
    const std::uint64_t h = std::max(ps.head.size(), qt.head.size());
    const std::uint64_t l = std::lcm(ps.period.size(), qt.period.size());
    bool any_eq = false;
    bool any_ne = false;
    for (std::uint64_t k = h; k < h + l; ++k) {
      (periodic_bit(ps, k) == periodic_bit(qt, k) ? any_eq : any_ne) = true;
    }
    rel.agreement = any_eq && any_ne ? Agreement::mixed : (any_ne ? Agreement::different : Agreement::equal);
    rel.from = h;
  } else if (ps.tail == Tail::sparse && qt.tail == Tail::sparse) {
    if (s == t && p == q) return {Agreement::equal, 0};
    if (ps.infinite || qt.infinite) return {Agreement::mixed, 0};
    std::uint64_t from = 0;
    for (auto k : ps.hits) from = std::max(from, k + 1);
    for (auto k : qt.hits) from = std::max(from, k + 1);
    rel = {Agreement::equal, from};
  } else {
    const auto& sparse = ps.tail == Tail::sparse ? ps : qt;
    const auto& periodic = ps.tail == Tail::sparse ? qt : ps;
    const bool has_one = std::find(periodic.period.begin(), periodic.period.end(), true) != periodic.period.end();
    const bool has_zero = std::find(periodic.period.begin(), periodic.period.end(), false) != periodic.period.end();
    if ((has_one && has_zero) || sparse.infinite) return {Agreement::mixed, 0};
    std::uint64_t from = periodic.head.size();
    for (auto k : sparse.hits) from = std::max(from, k + 1);
    rel = {has_one ? Agreement::different : Agreement::equal, from};
  }
  if (rel.agreement == Agreement::mixed) return rel;
  const bool want_equal = rel.agreement == Agreement::equal;
  while (rel.from > 0 && (s.contains(p(rel.from - 1)) == t.contains(q(rel.from - 1))) == want_equal) --rel.from;
  return rel;
}

}  // namespace transword
