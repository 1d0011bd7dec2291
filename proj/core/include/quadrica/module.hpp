#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "quadrica/config.hpp"
#include "quadrica/finite_group.hpp"
#include "quadrica/square_ring.hpp"
#include "quadrica/verdict.hpp"

namespace quadrica {

/// Raw tables of a module over a square ring.
///  scal[m * |R_e| + r]               = m . r
///  bracket[(m * |M| + n) * |R_ee| + x] = [m, n] . x
struct BhpModuleParts {
  RingPtr ring;
  FiniteGroup group;
  std::vector<Elem> scal;
  std::vector<Elem> bracket;
  std::string label;
};

class BhpModule {
 public:
  explicit BhpModule(BhpModuleParts parts);

  const SquareRing& ring() const noexcept { return *p_.ring; }
  const RingPtr& ring_ptr() const noexcept { return p_.ring; }
  const FiniteGroup& group() const noexcept { return p_.group; }
  std::size_t order() const noexcept { return p_.group.order(); }

  Elem add(Elem a, Elem b) const noexcept { return p_.group.add(a, b); }
  Elem neg(Elem a) const noexcept { return p_.group.neg(a); }
  Elem sub(Elem a, Elem b) const noexcept { return p_.group.sub(a, b); }
  Elem scale(Elem m, Elem r) const noexcept { return p_.scal[m * ring().re_order() + r]; }
  Elem bracket(Elem m, Elem n, Elem x) const noexcept {
    return p_.bracket[(m * order() + n) * ring().ree_order() + x];
  }

  const BhpModuleParts& parts() const noexcept { return p_; }
  const std::string& label() const noexcept { return p_.label; }
  bool certified() const noexcept { return certified_; }
  /// Same ring tables and same module tables.
  bool same_tables(const BhpModule& o) const;

  friend std::shared_ptr<const BhpModule> certify(BhpModule, const Config&);

 private:
  BhpModuleParts p_;
  bool certified_ = false;
};

using ModulePtr = std::shared_ptr<const BhpModule>;

/// MC1-MC7, exhaustively.
Verdict verify_bhp_module(const BhpModule& m, const Config& cfg = {});
bool module_witness_violates(const BhpModule& m, const Witness& w);
/// Throws PreconditionUnmet for an uncertified ring, AxiomViolation on failure.
ModulePtr certify(BhpModule m, const Config& cfg = {});

/// A BHP module with a distinguished subgroup A.
class CpModule {
 public:
  CpModule() = default;
  CpModule(ModulePtr base, Subset distinguished);

  const BhpModule& base() const noexcept { return *base_; }
  const ModulePtr& base_ptr() const noexcept { return base_; }
  const Subset& distinguished() const noexcept { return a_; }
  bool certified() const noexcept { return certified_; }
  bool same_tables(const CpModule& o) const {
    return base_->same_tables(*o.base_) && a_ == o.a_;
  }

  friend CpModule certify(CpModule, const Config&);

 private:
  ModulePtr base_;
  Subset a_;
  bool certified_ = false;
};

/// MC0, MC7a, MC7b and A being a subgroup (plus MC1-MC7 if the base is not
/// yet certified).
Verdict verify_cp_module(const CpModule& m, const Config& cfg = {});
CpModule certify(CpModule m, const Config& cfg = {});

/// Consequences every module satisfies: brackets are central,
/// [m,n].H(2) is the commutator [n,m], the group has class <= 2,
/// (-m).r = -(m.r) + [m,m].H(r), ([m,n].x).P(y) = 0 and P(x)P(y) = 0.
Verdict elementary_properties(const BhpModule& m, const Config& cfg = {});

// ---------------------------------------------------------------------
// Standard modules over a certified ring.

/// R_e acting on itself: m.r = mr and [m,n].x = P((m,n).x).
ModulePtr regular_module(const RingPtr& ring, const Config& cfg = {});
/// R_ee with x.r the right action and zero bracket.
ModulePtr ree_module(const RingPtr& ring, const Config& cfg = {});
/// R-bar = R_e / im P with zero bracket.
ModulePtr rbar_module(const RingPtr& ring, const Config& cfg = {});
ModulePtr zero_module(const RingPtr& ring, const Config& cfg = {});
/// Componentwise structure; element (a, b) is a * |N| + b.
ModulePtr direct_sum(const ModulePtr& m, const ModulePtr& n, const Config& cfg = {});
/// (R_e, P(R_ee)), the free CP-module of rank one.
CpModule rank_one_pair(const RingPtr& ring, const Config& cfg = {});

// ---------------------------------------------------------------------
// Submodules and quotients.

/// Smallest submodule containing the seeds, by closure under +, -, the
/// scalar action and brackets.
Subset generated_submodule(const BhpModule& m, std::span<const Elem> seeds,
                           const Config& cfg = {});
/// Sums of e.r and [e, e'].x with e, e' seeds.
Subset normal_form_span(const BhpModule& m, std::span<const Elem> seeds);
/// {m : [m, n].x = 0 for all n, x}.
Subset r_center(const BhpModule& m, const Config& cfg = {});
/// Submodule generated by all brackets [m, n].x.
Subset derived_module(const BhpModule& m, const Config& cfg = {});
/// {y : [y, z].x = 0 for all z in s, all x}; a submodule.
Subset r_centralizer(const BhpModule& m, const Subset& s);

bool is_submodule(const BhpModule& m, const Subset& s);
/// Submodule, normal subgroup and [m, n].x in s for n in s.
bool is_normal_submodule(const BhpModule& m, const Subset& s);

/// A submodule presented as a module of its own.
struct Submodule {
  ModulePtr module;
  std::vector<Elem> embed;     ///< sub index -> parent element
  std::vector<Elem> index_of;  ///< parent element -> sub index, or npos
  static constexpr Elem npos = static_cast<Elem>(-1);
};
Submodule submodule_of(const ModulePtr& m, const Subset& s, const Config& cfg = {});

struct Quotient {
  ModulePtr module;
  std::vector<Elem> proj;  ///< parent -> class
  std::vector<Elem> lift;  ///< class -> smallest representative
};

/// M / N. Throws NotNormal with a witness when an induced operation is not
/// well defined or N is not a normal submodule.
Quotient quotient_bhp(const BhpModule& m, const Subset& n, const Config& cfg = {});

struct CpQuotient {
  CpModule module;
  std::vector<Elem> proj;
  std::vector<Elem> lift;
};

/// (M/N, A/B) where B = N and A. Throws PreconditionUnmet if b != N and A.
CpQuotient quotient_cp(const CpModule& ma, const Subset& n, const Subset& b,
                       const Config& cfg = {});

/// Every R_e-stable subgroup A with [M, M]_R <= A <= Z_R(M), sorted by size
/// then members. Throws CapExceeded above cfg.cap_subgroup_enum.
std::vector<Subset> admissible_intermediates(const BhpModule& m, const Config& cfg = {});

// ---------------------------------------------------------------------
// Maps.

/// A set map between module carriers.
struct MapTable {
  ModulePtr dom;
  ModulePtr cod;
  std::vector<Elem> values;

  Elem operator()(Elem m) const noexcept { return values[m]; }
};

/// Validates sizes and ranges; throws DimensionMismatch.
MapTable make_map(ModulePtr dom, ModulePtr cod, std::vector<Elem> values);
MapTable identity_map(const ModulePtr& m);
MapTable zero_map(const ModulePtr& dom, const ModulePtr& cod);

/// Additive, scalar-equivariant and bracket-equivariant.
Verdict linearity_verdict(const MapTable& f, const Config& cfg = {});
bool is_linear(const MapTable& f, const Config& cfg = {});
/// Linear and f(A) contained in B.
Verdict cp_linearity_verdict(const MapTable& f, const CpModule& src, const CpModule& dst,
                             const Config& cfg = {});
bool is_cp_linear(const MapTable& f, const CpModule& src, const CpModule& dst,
                  const Config& cfg = {});

}  // namespace quadrica
