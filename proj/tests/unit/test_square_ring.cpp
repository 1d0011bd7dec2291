#include <gtest/gtest.h>

#include "oracles.hpp"
#include "quadrica/quadrica.hpp"

using namespace quadrica;

namespace {

std::vector<ExampleSpec> all_small_specs() {
  std::vector<ExampleSpec> specs;
  for (std::size_t n : {2, 3, 4})
    for (ExampleKind k : {ExampleKind::classical, ExampleKind::rnil, ExampleKind::lambda, ExampleKind::tensor,
                          ExampleKind::sym, ExampleKind::gamma})
      for (Elem e : k == ExampleKind::gamma ? valid_epsilons(zmod(n)) : std::vector<Elem>{0})
        specs.push_back({k, zmod(n), e});
  return specs;
}

SquareRingParts perturbed_action(const SquareRing& sr, std::size_t cell) {
  SquareRingParts p = sr.parts();
  p.action[cell] = sr.ree().add(p.action[cell], 1);
  return p;
}

}  // namespace

TEST(SquareRing, TensorOverZ2PassesEveryAxiom) {
  RingPtr ring = build_example({ExampleKind::tensor, zmod(2), 0});
  EXPECT_EQ(ring->re_order(), 4u);
  EXPECT_EQ(ring->ree_order(), 4u);
  const Verdict v = verify_square_ring(*ring);
  EXPECT_TRUE(v.passed()) << v.summary();
  for (const char* law : {"AC0", "AC1", "AC2", "AC3", "AC5", "AC6", "AC8"})
    EXPECT_NE(v.statement(law), nullptr) << law;
}

TEST(SquareRing, ClassicalOverZ3PassesWithTrivialStructureMaps) {
  RingPtr ring = build_example({ExampleKind::classical, zmod(3), 0});
  EXPECT_TRUE(verify_square_ring(*ring).passed());
  EXPECT_EQ(ring->ree_order(), 1u);
  for (Elem r = 0; r < 3; ++r) EXPECT_EQ(ring->hopf(r), 0u);
}

TEST(SquareRing, PerturbedActionCellIsCaughtWithGenuineWitnesses) {
  RingPtr ring = build_example({ExampleKind::tensor, zmod(2), 0});
  Config cfg;
  cfg.witnesses = WitnessMode::exhaustive;
  for (std::size_t cell : {5u, 77u, 200u}) {
    const SquareRing mutant(perturbed_action(*ring, cell));
    const Verdict v = verify_square_ring(mutant, cfg);
    ASSERT_FALSE(v.passed());
    for (const Witness& w : v.failures()) EXPECT_TRUE(square_ring_witness_violates(mutant, w)) << w.law;
    EXPECT_THROW(certify(mutant), AxiomViolation);
  }
}

TEST(SquareRing, WitnessOfAPassingLawIsNotAViolation) {
  RingPtr ring = build_example({ExampleKind::sym, zmod(3), 0});
  EXPECT_FALSE(square_ring_witness_violates(*ring, Witness{"AC7", {1, 2, 3}}));
}

TEST(SquareRing, CertifyRespectsCap) {
  Config cfg;
  cfg.cap_ring = 4;
  try {
    build_example({ExampleKind::tensor, zmod(3), 0}, cfg);
    FAIL() << "expected CapExceeded";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::cap_exceeded);
  }
}

TEST(SquareRing, StructuralIdentitiesHoldOnEveryExample) {
  for (const ExampleSpec& spec : all_small_specs()) {
    RingPtr ring = build_example(spec);
    const SquareRing& R = *ring;
    const std::size_t e = R.re_order(), x = R.ree_order();
    EXPECT_EQ(R.hopf(R.one()), 0u);
    for (Elem y = 0; y < x; ++y) {
      EXPECT_EQ(R.transfer(R.twist(y)), R.transfer(y));
      // T = HP - id
      EXPECT_EQ(R.twist(y), R.ree().sub(R.hopf(R.transfer(y)), y));
      for (Elem z = 0; z < x; ++z) EXPECT_EQ(R.mul(R.transfer(y), R.transfer(z)), 0u);
    }
    for (Elem r = 0; r < e; ++r)
      for (Elem s = 0; s < e; ++s) {
        for (Elem t = 0; t < e; ++t)
          EXPECT_EQ(R.mul(R.add(r, s), t), R.add(R.add(R.mul(r, t), R.mul(s, t)), R.transfer(R.left(r, s, R.hopf(t)))));
        // [r, s] = P((s, r).H(2)) and im P is central
        EXPECT_EQ(R.re().additive().commutator(r, s), R.transfer(R.left(s, r, R.hopf(R.two()))));
      }
    for (Elem y = 0; y < x; ++y)
      for (Elem r = 0; r < e; ++r) EXPECT_EQ(R.add(R.transfer(y), r), R.add(r, R.transfer(y)));
  }
}

TEST(SquareRing, CokernelOfP) {
  EXPECT_EQ(cokernel_p(*build_example({ExampleKind::classical, zmod(4), 0})).ring.order(), 4u);
  EXPECT_EQ(cokernel_p(*build_example({ExampleKind::tensor, zmod(2), 0})).ring.order(), 2u);
  const RingBar gamma4 = cokernel_p(*build_example({ExampleKind::gamma, zmod(4), 0}));
  EXPECT_EQ(gamma4.ring.order(), 8u);
  EXPECT_TRUE(gamma4.commutative);
}

TEST(SquareRing, CokernelRequiresCertification) {
  RingPtr ring = build_example({ExampleKind::tensor, zmod(2), 0});
  const SquareRing raw(ring->parts());
  EXPECT_THROW(cokernel_p(raw), Error);
}

TEST(SquareRing, TruncatedOperad) {
  const OperadTrunc2 classical = operad_of(*build_example({ExampleKind::classical, zmod(3), 0}));
  EXPECT_EQ(classical.arity1.ring.order(), 3u);
  EXPECT_EQ(classical.arity2.order(), 1u);
  const OperadTrunc2 rnil = operad_of(*build_example({ExampleKind::rnil, zmod(4), 0}));
  EXPECT_EQ(rnil.arity1.ring.order(), 4u);
  EXPECT_EQ(rnil.arity2.order(), 2u);
  const OperadTrunc2 lambda = operad_of(*build_example({ExampleKind::lambda, zmod(3), 0}));
  EXPECT_EQ(lambda.arity2.order(), 3u);
  for (Elem y = 0; y < 3; ++y) EXPECT_EQ(lambda.symmetry[y], lambda.arity2.neg(y));
}

TEST(SquareRing, CommutativityDecisions) {
  EXPECT_TRUE(is_commutative(*build_example({ExampleKind::sym, zmod(3), 0})));
  Config cfg;
  cfg.cap_ring = 25;
  EXPECT_TRUE(is_commutative(*build_example({ExampleKind::gamma, zmod(5), 0}, cfg)));
  EXPECT_FALSE(is_commutative(*build_example({ExampleKind::gamma, oracle::z2_extension(true, true), 0})));
}

TEST(SquareRing, AlteredRightActionBreaksCommutativity) {
  RingPtr ring = build_example({ExampleKind::tensor, zmod(2), 0});
  SquareRingParts p = ring->parts();
  const std::size_t e = ring->re_order(), x = ring->ree_order();
  // x.t for t = (1, 0) + ... : swap the two components of x.r only in the
  // third slot, keeping (r, 1).x and (1, r).x intact.
  const Elem one = ring->one();
  bool changed = false;
  for (Elem y = 0; y < x; ++y)
    for (Elem t = 0; t < e; ++t)
      if (t != one && t != 0) {
        auto& cell = p.action[((one * e + one) * x + y) * e + t];
        const Elem swapped = ring->twist(cell);
        changed = changed || swapped != cell;
        cell = swapped;
      }
  ASSERT_TRUE(changed);
  EXPECT_FALSE(is_commutative(SquareRing(p)));
}

TEST(SquareRing, CommutativeRingsSatisfyTheConsequences) {
  for (const ExampleSpec& spec : all_small_specs()) {
    RingPtr ring = build_example(spec);
    if (!is_commutative(*ring)) continue;
    EXPECT_TRUE(commutativity_consequences(*ring).passed()) << ring->label();
    EXPECT_TRUE(ring->re().additive().commutative());
    for (Elem r = 0; r < ring->re_order(); ++r)
      for (Elem y = 0; y < ring->ree_order(); ++y) {
        EXPECT_EQ(ring->left(r, ring->one(), y), ring->right(y, r));
        EXPECT_EQ(ring->left(ring->one(), r, y), ring->right(y, r));
      }
  }
}

TEST(SquareRing, VerificationIsIndependentOfWorkerCount) {
  RingPtr ring = build_example({ExampleKind::tensor, zmod(2), 0});
  const SquareRing mutant(perturbed_action(*ring, 77));
  Config one, four;
  one.witnesses = four.witnesses = WitnessMode::exhaustive;
  four.jobs = 4;
  const Verdict a = verify_square_ring(mutant, one), b = verify_square_ring(mutant, four);
  ASSERT_EQ(a.failures().size(), b.failures().size());
  for (std::size_t i = 0; i < a.failures().size(); ++i) EXPECT_EQ(a.failures()[i], b.failures()[i]);
}
