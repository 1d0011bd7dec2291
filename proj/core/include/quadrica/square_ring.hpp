#pragma once

#include <memory>
#include <string>
#include <vector>

#include "quadrica/config.hpp"
#include "quadrica/finite_group.hpp"
#include "quadrica/rings.hpp"
#include "quadrica/verdict.hpp"

namespace quadrica {

/// Raw tables of a square ring R_e --H--> R_ee --P--> R_e.
///
/// The action (r, s) . x . t is stored at
/// ((r * |R_e| + s) * |R_ee| + x) * |R_e| + t.
struct SquareRingParts {
  NearRing re;          ///< left-distributive near-ring
  FiniteGroup ree;      ///< abelian group
  std::vector<Elem> action;
  std::vector<Elem> hopf;      ///< H : R_e -> R_ee
  std::vector<Elem> transfer;  ///< P : R_ee -> R_e
  std::vector<Elem> twist;     ///< T : R_ee -> R_ee
  std::string label;
};

/// Immutable square ring. Construction only checks table dimensions;
/// certify() runs the full axiom suite and marks the result.
class SquareRing {
 public:
  explicit SquareRing(SquareRingParts parts);

  const NearRing& re() const noexcept { return p_.re; }
  const FiniteGroup& ree() const noexcept { return p_.ree; }
  std::size_t re_order() const noexcept { return p_.re.order(); }
  std::size_t ree_order() const noexcept { return p_.ree.order(); }

  Elem act(Elem r, Elem s, Elem x, Elem t) const noexcept {
    const std::size_t e = re_order();
    return p_.action[((r * e + s) * ree_order() + x) * e + t];
  }
  /// (r, s) . x
  Elem left(Elem r, Elem s, Elem x) const noexcept { return act(r, s, x, one()); }
  /// x . t
  Elem right(Elem x, Elem t) const noexcept { return act(one(), one(), x, t); }

  Elem hopf(Elem r) const noexcept { return p_.hopf[r]; }
  Elem transfer(Elem x) const noexcept { return p_.transfer[x]; }
  Elem twist(Elem x) const noexcept { return p_.twist[x]; }
  Elem one() const noexcept { return p_.re.one(); }
  Elem two() const noexcept { return p_.re.two(); }

  // Shorthand for R_e arithmetic.
  Elem add(Elem a, Elem b) const noexcept { return p_.re.add(a, b); }
  Elem neg(Elem a) const noexcept { return p_.re.neg(a); }
  Elem sub(Elem a, Elem b) const noexcept { return p_.re.sub(a, b); }
  Elem mul(Elem a, Elem b) const noexcept { return p_.re.mul(a, b); }
  // Shorthand for R_ee arithmetic.
  Elem add_ee(Elem a, Elem b) const noexcept { return p_.ree.add(a, b); }
  Elem neg_ee(Elem a) const noexcept { return p_.ree.neg(a); }

  const SquareRingParts& parts() const noexcept { return p_; }
  const std::string& label() const noexcept { return p_.label; }
  bool certified() const noexcept { return certified_; }

  /// Structural equality of all tables (labels are ignored).
  bool same_tables(const SquareRing& o) const;

  friend std::shared_ptr<const SquareRing> certify(SquareRing, const Config&);

 private:
  SquareRingParts p_;
  bool certified_ = false;
};

using RingPtr = std::shared_ptr<const SquareRing>;

/// Exhaustive check of the square ring axioms AC0-AC8 together with the
/// structural laws of the action, H(1) = 0 and the involution T.
Verdict verify_square_ring(const SquareRing& sr, const Config& cfg = {});

/// True when the witness really violates the named law of `sr`.
bool square_ring_witness_violates(const SquareRing& sr, const Witness& w);

/// Verifies and seals; throws AxiomViolation on failure, CapExceeded when a
/// component is larger than cfg.cap_ring.
RingPtr certify(SquareRing sr, const Config& cfg = {});

/// The ring R_e / im P.
struct RingBar {
  NearRing ring;            ///< bona fide ring (both distributive laws)
  std::vector<Elem> proj;   ///< R_e -> R-bar
  std::vector<Elem> lift;   ///< smallest representative of each class
  bool commutative = false;
};

/// Cokernel of P. Requires a certified ring; throws PreconditionUnmet
/// otherwise and NotARing should the quotient laws fail.
RingBar cokernel_p(const SquareRing& sr);

/// The class-two truncated operad: arity one is R-bar, arity two is R_ee with
/// the reduced action and the symmetric-group action given by T.
struct OperadTrunc2 {
  RingBar arity1;
  FiniteGroup arity2;
  /// (a, b) . x . c over R-bar classes, indexed like SquareRing::act.
  std::vector<Elem> action;
  std::vector<Elem> symmetry;  ///< T

  Elem act(Elem a, Elem b, Elem x, Elem c) const noexcept {
    const std::size_t e = arity1.ring.order();
    return action[((a * e + b) * arity2.order() + x) * e + c];
  }
};

OperadTrunc2 operad_of(const SquareRing& sr);

/// R-bar commutative and (r,1).x = (1,r).x = x.r for all r, x.
/// When true, also checks the standard consequences (see
/// commutativity_consequences) and throws InternalInconsistency if one fails.
/// Needs a certified ring unless the action test already fails.
bool is_commutative(const SquareRing& sr);

/// x.rs = x.sr, commutativity of R_e, and r P(x) = P(x) r^2.
Verdict commutativity_consequences(const SquareRing& sr);

}  // namespace quadrica
