#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "quadrica/config.hpp"

namespace quadrica {

/// Nilpotency class reported for groups that are not of class <= 2.
inline constexpr int kClassAboveTwo = -1;

/// A finite group given by its Cayley table, written additively.
/// Element 0 is the neutral element.
class FiniteGroup {
 public:
  FiniteGroup() = default;

  std::size_t order() const noexcept { return n_; }
  Elem add(Elem a, Elem b) const noexcept { return add_[a * n_ + b]; }
  Elem neg(Elem a) const noexcept { return neg_[a]; }
  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
  /// Group commutator a + b - a - b.
  Elem commutator(Elem a, Elem b) const noexcept {
    return sub(sub(add(a, b), a), b);
  }
  /// k-fold sum a + ... + a for k >= 0.
  Elem multiple(Elem a, std::size_t k) const noexcept;
  /// Sum of a sequence, evaluated left to right.
  Elem sum(std::initializer_list<Elem> terms) const noexcept;

  bool commutative() const noexcept { return commutative_; }
  /// 1 for abelian groups, 2 for class two, kClassAboveTwo otherwise.
  /// The trivial group reports 1.
  int nilpotency_class() const noexcept { return class_; }
  std::size_t element_order(Elem a) const noexcept;

  std::span<const Elem> add_table() const noexcept { return add_; }

  bool operator==(const FiniteGroup& o) const { return n_ == o.n_ && add_ == o.add_; }

  friend FiniteGroup build_group(std::vector<Elem>, std::size_t, std::vector<Elem>*);

 private:
  std::size_t n_ = 0;
  std::vector<Elem> add_;
  std::vector<Elem> neg_;
  bool commutative_ = true;
  int class_ = 1;
};

/// Validates a Cayley table (closure, associativity, neutral, inverses).
/// When the neutral is not element 0 the carrier is renumbered by the
/// transposition (0 e); the old-to-new map is written to `relabel`.
/// Throws NotAGroup with a witness, or CapExceeded.
FiniteGroup build_group(std::vector<Elem> table, std::size_t cap = 64,
                        std::vector<Elem>* relabel = nullptr);

FiniteGroup cyclic_group(std::size_t n);
/// Dihedral group of order 2k: rotations 0..k-1, reflections k..2k-1.
FiniteGroup dihedral_group(std::size_t k);
/// Direct product with element (a, b) encoded as a * |H| + b.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, std::size_t cap = 64);

/// A subset of a finite carrier, kept sorted with a membership mask.
class Subset {
 public:
  Subset() = default;
  Subset(std::size_t parent_order, std::vector<Elem> members);

  static Subset full(std::size_t n);
  static Subset zero(std::size_t n);

  std::size_t parent_order() const noexcept { return mask_.size(); }
  std::size_t size() const noexcept { return members_.size(); }
  const std::vector<Elem>& members() const noexcept { return members_; }
  bool contains(Elem e) const noexcept { return e < mask_.size() && mask_[e]; }
  bool is_subset_of(const Subset& other) const noexcept;
  /// Position of e in members(), or size() when absent.
  std::size_t index_of(Elem e) const noexcept;

  bool operator==(const Subset& o) const { return members_ == o.members_ && mask_.size() == o.mask_.size(); }
  bool operator<(const Subset& o) const;

 private:
  std::vector<Elem> members_;
  std::vector<bool> mask_;
};

/// Smallest subgroup containing the seeds.
Subset subgroup_closure(const FiniteGroup& g, std::span<const Elem> seeds);
bool is_subgroup(const FiniteGroup& g, const Subset& s);
/// Normal in the group-theoretic sense: closed under conjugation.
bool is_normal_subgroup(const FiniteGroup& g, const Subset& s);
Subset group_center(const FiniteGroup& g);
/// Subgroup generated by all commutators.
Subset derived_subgroup(const FiniteGroup& g);

}  // namespace quadrica
