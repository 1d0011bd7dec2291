#pragma once

#include <cstddef>
#include <vector>

#include "quadrica/finite_group.hpp"
#include "quadrica/verdict.hpp"

namespace quadrica {

/// Which distributive laws a multiplication must satisfy.
///  - left_only: r(s+t) = rs + rt exactly. This is the R_e component of a
///    square ring, where right distributivity carries a correction term.
///  - both: a near-ring used on its own; both laws are required.
enum class Distributivity { left_only, both };

/// An additive group with an associative unital multiplication.
class NearRing {
 public:
  NearRing() = default;

  const FiniteGroup& additive() const noexcept { return add_; }
  std::size_t order() const noexcept { return add_.order(); }
  Elem add(Elem a, Elem b) const noexcept { return add_.add(a, b); }
  Elem neg(Elem a) const noexcept { return add_.neg(a); }
  Elem sub(Elem a, Elem b) const noexcept { return add_.sub(a, b); }
  Elem mul(Elem a, Elem b) const noexcept { return mul_[a * order() + b]; }
  Elem one() const noexcept { return one_; }
  /// The element 1 + 1.
  Elem two() const noexcept { return add(one_, one_); }
  /// k * 1 for k >= 0.
  Elem from_int(std::size_t k) const noexcept { return add_.multiple(one_, k); }
  const std::vector<Elem>& mul_table() const noexcept { return mul_; }
  bool multiplicatively_commutative() const noexcept;

  bool operator==(const NearRing& o) const {
    return add_ == o.add_ && mul_ == o.mul_ && one_ == o.one_;
  }

  friend NearRing build_near_ring(FiniteGroup, std::vector<Elem>, Elem, Distributivity);

 private:
  FiniteGroup add_;
  std::vector<Elem> mul_;
  Elem one_ = 0;
};

/// Laws of a near-ring as a verdict (associativity, unit, distributivity).
Verdict near_ring_verdict(const FiniteGroup& add, const std::vector<Elem>& mul, Elem one,
                          Distributivity laws);

/// Throws NotARing with the first witness when the laws fail.
NearRing build_near_ring(FiniteGroup add, std::vector<Elem> mul, Elem one,
                         Distributivity laws = Distributivity::both);

/// A finite commutative unital ring.
class CommutativeRing {
 public:
  CommutativeRing() = default;
  explicit CommutativeRing(NearRing ring);  // validates commutativity

  const NearRing& near_ring() const noexcept { return ring_; }
  std::size_t order() const noexcept { return ring_.order(); }
  Elem add(Elem a, Elem b) const noexcept { return ring_.add(a, b); }
  Elem neg(Elem a) const noexcept { return ring_.neg(a); }
  Elem sub(Elem a, Elem b) const noexcept { return ring_.sub(a, b); }
  Elem mul(Elem a, Elem b) const noexcept { return ring_.mul(a, b); }
  Elem one() const noexcept { return ring_.one(); }
  Elem from_int(std::size_t k) const noexcept { return ring_.from_int(k); }

  bool operator==(const CommutativeRing& o) const { return ring_ == o.ring_; }

 private:
  NearRing ring_;
};

CommutativeRing build_commutative_ring(FiniteGroup add, std::vector<Elem> mul, Elem one);

/// The ring Z/n with element k encoded as k.
CommutativeRing zmod(std::size_t n);

}  // namespace quadrica
