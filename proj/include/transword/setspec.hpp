#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "transword/index_poly.hpp"

namespace transword {

// Eventually periodic bit sequence: prefix, then `period` repeated forever.
struct BitSequence {
  std::string prefix;
  std::string period;  // nonempty, characters '0'/'1'

  bool at(std::uint64_t n) const;
  // Shortest period, then shortest prefix: equal sequences normalize equal.
  BitSequence normalized() const;
  bool operator==(const BitSequence&) const = default;
};

// Decidable subsets of the naturals.
//  - Finite: an explicit sorted list.
//  - EvPeriodic: n in S iff bit n of an eventually periodic sequence is 1.
//  - PrefixCode: { code(branch|k) : k >= 0 } with code(s) = int("1" s, 2) - 1,
//    the members produced by walking one branch of the binary tree.
class SetSpec {
 public:
  struct Finite {
    std::vector<std::uint64_t> elements;
    bool operator==(const Finite&) const = default;
  };
  struct EvPeriodic {
    BitSequence bits;
    bool operator==(const EvPeriodic&) const = default;
  };
  struct PrefixCode {
    BitSequence branch;
    bool operator==(const PrefixCode&) const = default;
  };
  using Variant = std::variant<Finite, EvPeriodic, PrefixCode>;

  SetSpec() : SetSpec(Finite{}) {}
  static SetSpec finite(std::vector<std::uint64_t> elements);
  static SetSpec ev_periodic(std::string prefix, std::string period);
  static SetSpec prefix_code(std::string prefix, std::string period);
  static SetSpec everything() { return ev_periodic("", "1"); }
  static SetSpec nothing() { return finite({}); }

  const Variant& value() const { return value_; }
  bool contains(std::uint64_t n) const;
  bool is_infinite() const;
  bool is_everything() const;
  bool is_nothing() const;

  // Normalized representations compare equal iff the sets are equal.
  bool operator==(const SetSpec& other) const { return value_ == other.value_; }

  std::string to_string() const;

 private:
  explicit SetSpec(Variant v);
  Variant value_;
};

// code(s) for a bit string s, and its inverse.
std::uint64_t prefix_code_value(const std::string& bits);
std::string prefix_code_bits(std::uint64_t n);

// The membership sequence m(k) = [q(k) in S] for k >= 0.
struct MembershipProfile {
  enum class Tail { periodic, sparse };
  Tail tail = Tail::periodic;
  // periodic: m(k) = head[k] for k < head.size(), then period repeats.
  std::vector<bool> head;
  std::vector<bool> period;
  // sparse: the k with m(k) = 1 (complete list unless `infinite`), which
  // then has infinitely many further hits of density zero.
  std::vector<std::uint64_t> hits;
  bool infinite = false;
};

// Throws FragmentError for periodic or prefix-coded sets along non-affine q.
MembershipProfile membership_profile(const SetSpec& s, const IndexPoly& q);

enum class Agreement { equal, different, mixed };

// How [p(k) in S] and [q(k) in T] compare for all k >= from.
struct EventualRelation {
  Agreement agreement = Agreement::equal;
  std::uint64_t from = 0;
};

EventualRelation compare_membership(const SetSpec& s, const IndexPoly& p, const SetSpec& t, const IndexPoly& q);

}  // namespace transword
