#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <functional>

#include "oracles.hpp"
#include "quadrica/quadrica.hpp"

using namespace quadrica;

namespace {

constexpr std::array kAllKinds{ExampleKind::classical, ExampleKind::rnil,  ExampleKind::lambda,
                               ExampleKind::tensor,    ExampleKind::sym,   ExampleKind::gamma};

std::vector<bool> as_mask(const Subset& s, std::size_t n) {
  std::vector<bool> out(n, false);
  for (Elem e : s.members()) out[e] = true;
  return out;
}

ErrorKind kind_of_throw(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::internal_inconsistency;
}

}  // namespace

TEST(Families, SizesAndLabels) {
  for (std::size_t n : {2, 3, 4}) {
    for (ExampleKind k : kAllKinds) {
      const RingPtr r = build_example({k, zmod(n), 0});
      EXPECT_TRUE(r->certified());
      const bool pairs = k == ExampleKind::tensor || k == ExampleKind::sym || k == ExampleKind::gamma;
      EXPECT_EQ(r->re_order(), pairs ? n * n : n) << r->label();
      std::size_t ree = n;
      if (k == ExampleKind::tensor) ree = n * n;
      if (k == ExampleKind::rnil) ree = ideal_i2(zmod(n)).members().size();
      if (k == ExampleKind::classical) ree = 1;
      EXPECT_EQ(r->ree_order(), ree) << r->label();
    }
  }
  EXPECT_EQ(example_label({ExampleKind::tensor, zmod(2), 0}), "tensor(Z/2)");
  EXPECT_EQ(example_label({ExampleKind::gamma, zmod(4), 2}), "gamma[eps=2](Z/4)");
  EXPECT_EQ(example_label({ExampleKind::sym, oracle::z2_extension(true, true), 0}), "sym(R4)");
  for (ExampleKind k : kAllKinds) EXPECT_EQ(parse_example_kind(to_string(k)), k);
  EXPECT_FALSE(parse_example_kind("poly").has_value());
}

TEST(Families, IdealI2AndDoubles) {
  std::vector<CommutativeRing> bases;
  for (std::size_t n = 2; n <= 12; ++n) bases.push_back(zmod(n));
  bases.push_back(oracle::z2_extension(true, true));
  bases.push_back(oracle::z2_extension(false, false));
  bases.push_back(oracle::z2_extension(false, true));
  for (const CommutativeRing& r : bases) {
    EXPECT_EQ(as_mask(ideal_i2(r), r.order()), oracle::ideal_i2(r));
    std::vector<bool> twice(r.order(), false);
    for (Elem x = 0; x < r.order(); ++x) twice[r.add(x, x)] = true;
    EXPECT_EQ(as_mask(doubled(r), r.order()), twice);
  }
}

TEST(Families, ValidEpsilons) {
  for (const CommutativeRing& r : {zmod(2), zmod(4), zmod(6), oracle::z2_extension(false, false)}) {
    const std::vector<bool> i2 = oracle::ideal_i2(r);
    std::vector<Elem> expected;
    for (Elem e = 0; e < r.order(); ++e) {
      bool kills = true;
      for (Elem x = 0; x < r.order(); ++x) kills = kills && (!i2[x] || r.mul(e, x) == 0);
      if (kills) expected.push_back(e);
    }
    EXPECT_EQ(valid_epsilons(r), expected);
    for (Elem e = 0; e < r.order(); ++e) {
      Config cfg;
      cfg.cap_ring = 36;
      const ExampleSpec spec{ExampleKind::gamma, r, e};
      if (std::find(expected.begin(), expected.end(), e) != expected.end()) {
        EXPECT_TRUE(build_example(spec, cfg)->certified());
      } else {
        EXPECT_EQ(kind_of_throw([&] { build_example(spec, cfg); }), ErrorKind::invalid_epsilon);
      }
    }
  }
  EXPECT_EQ(kind_of_throw([] { build_example({ExampleKind::sym, zmod(4), 2}); }), ErrorKind::invalid_epsilon);
}

TEST(Families, TensorTwistAndTransferFormula) {
  for (std::size_t n : {2, 3, 4}) {
    const RingPtr r = build_example({ExampleKind::tensor, zmod(n), 0});
    auto pair = [&](Elem a, Elem b) { return static_cast<Elem>(a * n + b); };
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y) EXPECT_EQ(r->twist(pair(x, y)), pair(y, x));
    for (Elem a = 0; a < n * n; ++a)
      for (Elem b = 0; b < n * n; ++b)
        for (Elem c = 0; c < n * n; ++c) {
          const Elem rr = a / n, rp = b / n, s2 = c % n;
          EXPECT_EQ(r->transfer(r->left(a, b, r->hopf(c))), pair(0, (2 * rr * rp * s2) % n));
        }
  }
}

TEST(Families, TwistOfTheOneDimensionalFamilies) {
  for (std::size_t n : {2, 3, 4}) {
    for (ExampleKind k : {ExampleKind::sym, ExampleKind::gamma}) {
      const RingPtr r = build_example({k, zmod(n), 0});
      for (Elem x = 0; x < r->ree_order(); ++x) EXPECT_EQ(r->twist(x), x) << r->label();
      EXPECT_EQ(r->hopf(r->two()), 0u) << r->label();
    }
    const RingPtr lam = build_example({ExampleKind::lambda, zmod(n), 0});
    for (Elem x = 0; x < n; ++x) EXPECT_EQ(lam->twist(x), lam->neg_ee(x));
  }
}

TEST(Census, GammaOverCyclicRingsAndExtensions) {
  std::vector<ExampleSpec> specs;
  for (std::size_t n = 2; n <= 6; ++n) specs.push_back({ExampleKind::gamma, zmod(n), 0});
  specs.push_back({ExampleKind::gamma, oracle::z2_extension(true, true), 0});
  specs.push_back({ExampleKind::gamma, oracle::z2_extension(false, false), 0});
  specs.push_back({ExampleKind::tensor, zmod(3), 0});
  Config cfg;
  cfg.cap_ring = 36;
  const auto rows = commutativity_census(specs, cfg);
  ASSERT_EQ(rows.size(), specs.size());
  for (std::size_t i = 0; i < 5; ++i) {
    EXPECT_TRUE(rows[i].commutative) << rows[i].label;
    EXPECT_EQ(rows[i].i2_is_2r, std::optional<bool>(true));
    EXPECT_TRUE(rows[i].agrees);
  }
  for (std::size_t i = 5; i < 7; ++i) {
    EXPECT_FALSE(rows[i].commutative) << rows[i].label;
    EXPECT_EQ(rows[i].i2_is_2r, std::optional<bool>(false));
    EXPECT_TRUE(rows[i].agrees);
  }
  EXPECT_FALSE(rows[7].i2_is_2r.has_value());
  EXPECT_TRUE(rows[7].agrees);
}

TEST(Algebras, HeisenbergLieAlgebra) {
  const ExampleSpec spec{ExampleKind::lambda, zmod(3), 0};
  const AlgebraData h = oracle::heisenberg_z3();
  const ModulePtr m = module_from_algebra(spec, h);
  EXPECT_EQ(m->order(), 27u);
  EXPECT_TRUE(verify_bhp_module(*m).passed());
  const std::vector<bool> center = oracle::lie_center(*m);
  EXPECT_EQ(std::count(center.begin(), center.end(), true), 3);
  EXPECT_EQ(algebra_from_module(spec, *m), h);
}

TEST(Algebras, AbelianAlgebraHasZeroBracket) {
  const std::array<std::size_t, 2> factors{2, 4};
  const AlgebraData d = cyclic_factors(zmod(4), factors);
  const ModulePtr m = module_from_algebra({ExampleKind::lambda, zmod(4), 0}, d);
  for (Elem a = 0; a < m->order(); ++a)
    for (Elem b = 0; b < m->order(); ++b)
      for (Elem x = 0; x < m->ring().ree_order(); ++x) EXPECT_EQ(m->bracket(a, b, x), 0u);
}

TEST(Algebras, TruncatedPolynomialsOverSym) {
  const ExampleSpec spec{ExampleKind::sym, zmod(2), 0};
  const AlgebraData t = oracle::truncated_z2();
  const ModulePtr m = module_from_algebra(spec, t);
  EXPECT_TRUE(verify_bhp_module(*m).passed());
  EXPECT_EQ(algebra_from_module(spec, *m), t);
  // x.(0,1) = x^2 and [x, x].1 = x^2.
  const Elem x = 2, x2 = 1;
  EXPECT_EQ(t.mul(x, x), x2);
  EXPECT_EQ(m->scale(x, 1), x2);
  EXPECT_EQ(m->bracket(x, x, 1), x2);
}

TEST(Algebras, DividedPowerAlgebra) {
  // span{x, g(x)} over Z/2 with g(x) = y, g(y) = 0; x = 2, y = 1.
  const ExampleSpec spec{ExampleKind::gamma, zmod(2), 0};
  const std::array<std::size_t, 2> factors{2, 2};
  AlgebraData d = cyclic_factors(zmod(2), factors);
  d.gamma = {0, 0, 1, 1};
  const ModulePtr m = module_from_algebra(spec, d);
  EXPECT_TRUE(verify_bhp_module(*m).passed());
  EXPECT_EQ(m->scale(2, 1), 1u);
  EXPECT_EQ(algebra_from_module(spec, *m), d);
}

TEST(Algebras, RejectsNonNilpotentProduct) {
  const std::array<std::size_t, 1> factors{2};
  AlgebraData d = cyclic_factors(zmod(2), factors);
  d.product = {0, 0, 0, 1};
  EXPECT_EQ(kind_of_throw([&] { module_from_algebra({ExampleKind::sym, zmod(2), 0}, d); }),
            ErrorKind::not_an_algebra);
  EXPECT_EQ(kind_of_throw([&] { module_from_algebra({ExampleKind::rnil, zmod(2), 0}, cyclic_factors(zmod(2), factors)); }),
            ErrorKind::precondition_unmet);
}

TEST(Algebras, CyclicFactors) {
  const std::array<std::size_t, 2> factors{2, 4};
  const AlgebraData d = cyclic_factors(zmod(4), factors);
  EXPECT_EQ(d.additive.order(), 8u);
  EXPECT_EQ(d.scale(5, 3), 7u);  // (1, 1) * 3 = (1, 3)
  EXPECT_EQ(d.additive.add(5, 5), 2u);
  const std::array<std::size_t, 1> bad{3};
  EXPECT_EQ(kind_of_throw([&] { cyclic_factors(zmod(4), bad); }), ErrorKind::dimension_mismatch);
}

TEST(Nil2Groups, DihedralGroupOverRnil) {
  const ModulePtr d4 = nil2_group_module(4, dihedral_group(4));
  EXPECT_TRUE(verify_bhp_module(*d4).passed());
  EXPECT_TRUE(elementary_properties(*d4).passed());
  // [m, m'].2 is the commutator [m', m].
  for (Elem a = 0; a < 8; ++a)
    for (Elem b = 0; b < 8; ++b) EXPECT_EQ(d4->bracket(a, b, 1), d4->group().commutator(b, a));
  EXPECT_EQ(kind_of_throw([] { nil2_group_module(2, dihedral_group(4)); }), ErrorKind::axiom_violation);
  EXPECT_TRUE(verify_bhp_module(*nil2_group_module(4, cyclic_group(4))).passed());
  EXPECT_EQ(kind_of_throw([] { nil2_group_module(2, cyclic_group(4)); }), ErrorKind::axiom_violation);
}
