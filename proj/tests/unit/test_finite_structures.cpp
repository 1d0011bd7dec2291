#include <gtest/gtest.h>

#include <numeric>

#include "oracles.hpp"
#include "quadrica/quadrica.hpp"

using namespace quadrica;

namespace {

std::vector<Elem> cyclic_table(std::size_t n) {
  std::vector<Elem> t(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) t[a * n + b] = static_cast<Elem>((a + b) % n);
  return t;
}

}  // namespace

TEST(FiniteGroup, CyclicOfOrderFourIsAbelian) {
  const FiniteGroup g = build_group(cyclic_table(4));
  EXPECT_EQ(g.order(), 4u);
  EXPECT_TRUE(g.commutative());
  EXPECT_EQ(g.nilpotency_class(), 1);
  EXPECT_EQ(g.neg(1), 3u);
  EXPECT_EQ(g.element_order(2), 2u);
}

TEST(FiniteGroup, DihedralOfOrderEightHasClassTwo) {
  const FiniteGroup d4 = dihedral_group(4);
  EXPECT_EQ(d4.order(), 8u);
  EXPECT_FALSE(d4.commutative());
  EXPECT_EQ(d4.nilpotency_class(), 2);
  const Subset center = group_center(d4);
  for (Elem a = 0; a < 8; ++a)
    for (Elem b = 0; b < 8; ++b) EXPECT_TRUE(center.contains(d4.commutator(a, b)));
}

TEST(FiniteGroup, BrokenAssociativityIsRejectedWithWitness) {
  std::vector<Elem> t = cyclic_table(4);
  t[1 * 4 + 2] = 0;  // 1 + 2 := 0 breaks associativity (and more)
  try {
    build_group(t);
    FAIL() << "expected NotAGroup";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::not_a_group);
    ASSERT_FALSE(e.witness().empty());
  }
}

TEST(FiniteGroup, NeutralIsRenumberedToZero) {
  // Z/3 with neutral element stored at index 2: a + b = a + b + 1 (mod 3).
  std::vector<Elem> t(9);
  for (Elem a = 0; a < 3; ++a)
    for (Elem b = 0; b < 3; ++b) t[a * 3 + b] = (a + b + 1) % 3;
  std::vector<Elem> relabel;
  const FiniteGroup g = build_group(t, 64, &relabel);
  EXPECT_EQ(relabel[2], 0u);
  for (Elem a = 0; a < 3; ++a) EXPECT_EQ(g.add(0, a), a);
}

TEST(FiniteGroup, CapIsAHardError) {
  try {
    build_group(cyclic_table(5), 4);
    FAIL() << "expected CapExceeded";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::cap_exceeded);
  }
}

TEST(FiniteGroup, ClassTwoIffDoubleCommutatorsVanish) {
  for (const FiniteGroup& g : {dihedral_group(3), dihedral_group(4), dihedral_group(5), cyclic_group(6),
                               direct_product(dihedral_group(4), cyclic_group(2))}) {
    bool vanish = true;
    for (Elem a = 0; a < g.order(); ++a)
      for (Elem b = 0; b < g.order(); ++b)
        for (Elem c = 0; c < g.order(); ++c) vanish = vanish && g.commutator(g.commutator(a, b), c) == 0;
    EXPECT_EQ(vanish, g.nilpotency_class() != kClassAboveTwo) << g.order();
  }
}

TEST(FiniteGroup, DerivedSubgroupMatchesOracle) {
  for (const FiniteGroup& g : {dihedral_group(3), dihedral_group(4), cyclic_group(5)}) {
    const auto oracle = oracle::commutator_subgroup(g);
    const Subset derived = derived_subgroup(g);
    for (Elem e = 0; e < g.order(); ++e) EXPECT_EQ(derived.contains(e), oracle[e]);
  }
}

TEST(Zmod, SmallRings) {
  const CommutativeRing z2 = zmod(2);
  EXPECT_EQ(z2.order(), 2u);
  EXPECT_EQ(z2.add(1, 1), 0u);
  const CommutativeRing z4 = zmod(4);
  EXPECT_EQ(z4.mul(2, 2), 0u);
  EXPECT_EQ(z4.mul(3, 3), 1u);
  const CommutativeRing z1 = zmod(1);
  EXPECT_EQ(z1.order(), 1u);
  EXPECT_EQ(z1.one(), 0u);
}

TEST(NearRing, TensorComponentIsOnlyLeftDistributive) {
  // Over Z/3 the correction term (0, 2rr's'') of right distributivity is nonzero.
  RingPtr ring = build_example({ExampleKind::tensor, zmod(3), 0});
  const NearRing& re = ring->re();
  EXPECT_TRUE(near_ring_verdict(re.additive(), re.mul_table(), re.one(), Distributivity::left_only).passed());
  const Verdict both = near_ring_verdict(re.additive(), re.mul_table(), re.one(), Distributivity::both);
  EXPECT_FALSE(both.passed());
}

TEST(CommutativeRing, NonCommutativeProductIsRejected) {
  RingPtr ring = build_example({ExampleKind::tensor, zmod(3), 0});
  const NearRing& re = ring->re();
  EXPECT_FALSE(re.multiplicatively_commutative());
  try {
    build_commutative_ring(re.additive(), re.mul_table(), re.one());
    FAIL() << "expected NotARing";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::not_a_ring);
  }
}

TEST(Subset, ClosureExamples) {
  const FiniteGroup z4 = cyclic_group(4);
  const std::vector<Elem> two{2}, three{3};
  EXPECT_EQ(subgroup_closure(z4, two).members(), (std::vector<Elem>{0, 2}));
  EXPECT_EQ(subgroup_closure(z4, three).size(), 4u);
  const FiniteGroup d4 = dihedral_group(4);
  const std::vector<Elem> half_turn{2};
  EXPECT_EQ(subgroup_closure(d4, half_turn), group_center(d4));
}

TEST(Subset, ClosureIsIdempotentAndMonotone) {
  const FiniteGroup d4 = dihedral_group(4);
  for (Elem a = 0; a < 8; ++a)
    for (Elem b = 0; b < 8; ++b) {
      const std::vector<Elem> one{a}, two{a, b};
      const Subset s = subgroup_closure(d4, one);
      const Subset t = subgroup_closure(d4, two);
      EXPECT_EQ(subgroup_closure(d4, s.members()), s);
      EXPECT_TRUE(s.is_subset_of(t));
      EXPECT_TRUE(is_subgroup(d4, t));
    }
}

TEST(Subset, NormalityOfSubgroupsInDihedral) {
  const FiniteGroup d4 = dihedral_group(4);
  const std::vector<Elem> reflection{4};
  const Subset s = subgroup_closure(d4, reflection);
  EXPECT_TRUE(is_subgroup(d4, s));
  EXPECT_FALSE(is_normal_subgroup(d4, s));
  EXPECT_TRUE(is_normal_subgroup(d4, group_center(d4)));
}
