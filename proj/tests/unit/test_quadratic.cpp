#include <gtest/gtest.h>

#include "oracles.hpp"
#include "quadrica/quadrica.hpp"

using namespace quadrica;

namespace {

RingPtr ring_of(ExampleKind k, std::size_t n) { return build_example({k, zmod(n), 0}); }

MapTable hopf_map(const RingPtr& ring) {
  return make_map(regular_module(ring), ree_module(ring), ring->parts().hopf);
}

MapTable right_multiplication(const ModulePtr& m, Elem t) {
  std::vector<Elem> v(m->order());
  for (Elem x = 0; x < m->order(); ++x) v[x] = m->scale(x, t);
  return make_map(m, m, v);
}

MapTable squaring(const RingPtr& ring) {
  ModulePtr re = regular_module(ring);
  std::vector<Elem> v(re->order());
  for (Elem r = 0; r < re->order(); ++r) v[r] = ring->mul(r, r);
  return make_map(re, re, v);
}

std::vector<ExampleSpec> commutative_specs() {
  std::vector<ExampleSpec> out;
  for (std::size_t n : {2, 3, 4})
    for (ExampleKind k : {ExampleKind::classical, ExampleKind::rnil, ExampleKind::lambda, ExampleKind::tensor,
                          ExampleKind::sym, ExampleKind::gamma})
      out.push_back({k, zmod(n), 0});
  return out;
}

// BHP-quadratic maps between the small modules over R_Nil(Z/2) and S_{Z/2}.
std::vector<MapTable> small_quadratic_maps() {
  std::vector<MapTable> out;
  for (ExampleKind k : {ExampleKind::rnil, ExampleKind::sym}) {
    const auto mods = oracle::small_modules(ring_of(k, 2), 4);
    for (const ModulePtr& m : mods)
      for (const ModulePtr& n : mods)
        for (const auto& v : oracle::all_tables(m->order(), n->order(), false)) {
          MapTable f = make_map(m, n, v);
          if (routes::bhp_relations(f).passed()) out.push_back(std::move(f));
        }
  }
  return out;
}

}  // namespace

TEST(Defects, LinearMapsHaveNoDefects) {
  RingPtr ring = ring_of(ExampleKind::sym, 2);
  const DefectBundle d = defects(identity_map(regular_module(ring)));
  for (Elem v : d.additive_table) EXPECT_EQ(v, 0u);
  for (Elem v : d.scalar_table) EXPECT_EQ(v, 0u);
  for (Elem v : d.bracket_table) EXPECT_EQ(v, 0u);
}

TEST(Defects, DefectsOfH) {
  for (const ExampleSpec& spec : commutative_specs()) {
    RingPtr ring = build_example(spec);
    const DefectBundle d = defects(hopf_map(ring));
    const Elem h2 = ring->hopf(ring->two());
    for (Elem r = 0; r < ring->re_order(); ++r)
      for (Elem s = 0; s < ring->re_order(); ++s) {
        EXPECT_EQ(d.additive(r, s), ring->left(s, r, h2)) << ring->label();
        EXPECT_EQ(d.scalar(r, s), ring->left(s, s, ring->hopf(r))) << ring->label();
        for (Elem x = 0; x < ring->ree_order(); ++x)
          EXPECT_EQ(d.bracket(x, r, s), ring->hopf(ring->transfer(ring->left(r, s, x)))) << ring->label();
      }
  }
}

TEST(Defects, AdditiveDefectOfRightMultiplication) {
  RingPtr ring = ring_of(ExampleKind::tensor, 3);
  ModulePtr re = regular_module(ring);
  for (Elem t = 0; t < re->order(); ++t) {
    const DefectBundle d = defects(right_multiplication(re, t));
    for (Elem m = 0; m < re->order(); ++m)
      for (Elem n = 0; n < re->order(); ++n) EXPECT_EQ(d.additive(m, n), re->bracket(m, n, ring->hopf(t)));
  }
}

TEST(BhpQuadratic, HopfMapOnRnilZ4) {
  const QuadCertificate c = is_bhp_quadratic(hopf_map(ring_of(ExampleKind::rnil, 4)));
  EXPECT_TRUE(c.quadratic()) << c.verdict.summary();
  EXPECT_TRUE(c.dual_route_checked);
  for (const char* law : {"(a)", "(b)", "(c)", "(d)", "(e)", "(f)", "(g)", "(h)"})
    EXPECT_NE(c.verdict.statement(law), nullptr) << law;
}

TEST(BhpQuadratic, RightMultiplicationsOnSymZ3) {
  ModulePtr re = regular_module(ring_of(ExampleKind::sym, 3));
  for (Elem t = 0; t < re->order(); ++t) EXPECT_TRUE(is_bhp_quadratic(right_multiplication(re, t)).quadratic()) << t;
}

TEST(BhpQuadratic, SquaringOnTensorIsQuadraticOnlyForBooleanBase) {
  EXPECT_TRUE(is_bhp_quadratic(squaring(ring_of(ExampleKind::tensor, 2))).quadratic());
  for (std::size_t n : {3, 4}) {
    RingPtr ring = ring_of(ExampleKind::tensor, n);
    const MapTable f = squaring(ring);
    const QuadCertificate c = is_bhp_quadratic(f);
    ASSERT_FALSE(c.quadratic());
    const Witness* w = c.verdict.first_failure("(d)");
    ASSERT_NE(w, nullptr);
    // Re-evaluate relation (d) at the witness by hand (N is abelian here).
    const BhpModule& N = *f.cod;
    const Elem m = w->tuple[0], m1 = w->tuple[1], m2 = w->tuple[2];
    auto add = [&](Elem a, Elem b) { return N.add(a, b); };
    const Elem lhs = add(add(add(f(add(add(m, m1), m2)), f(m)), f(m1)), f(m2));
    const Elem rhs = add(add(f(add(m, m1)), f(add(m1, m2))), f(add(m, m2)));
    EXPECT_NE(lhs, rhs);
  }
}

TEST(BhpQuadratic, NonCommutativeRingIsAnError) {
  Config cfg;
  RingPtr ring = build_example({ExampleKind::gamma, oracle::z2_extension(true, true), 0}, cfg);
  try {
    is_bhp_quadratic(identity_map(regular_module(ring)));
    FAIL() << "expected NonCommutativeRing";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::non_commutative_ring);
  }
}

TEST(BhpQuadratic, NaiveDefinitionAgreesOnSmallModules) {
  RingPtr ring = ring_of(ExampleKind::sym, 2);
  const auto mods = oracle::small_modules(ring, 4);
  std::size_t yes = 0;
  for (const ModulePtr& m : mods)
    for (const ModulePtr& n : mods)
      for (const auto& v : oracle::all_tables(m->order(), n->order(), true)) {
        const MapTable f = make_map(m, n, v);
        const bool q = is_bhp_quadratic(f).quadratic();
        EXPECT_EQ(q, oracle::bhp_quadratic(f));
        yes += q;
      }
  EXPECT_GT(yes, 0u);
}

TEST(BhpQuadratic, ReleaseProfileSamplesTheSecondRoute) {
  const MapTable f = hopf_map(ring_of(ExampleKind::rnil, 4));
  Config never, always;
  never.profile = always.profile = Profile::release;
  never.dual_route_rate = 0.0;
  always.dual_route_rate = 1.0;
  const QuadCertificate a = is_bhp_quadratic(f, never), b = is_bhp_quadratic(f, always);
  EXPECT_FALSE(a.dual_route_checked);
  EXPECT_TRUE(b.dual_route_checked);
  EXPECT_EQ(a.quadratic(), b.quadratic());
}

TEST(BhpQuadratic, DefectsVanishOnTheDerivedModule) {
  for (const MapTable& f : small_quadratic_maps()) {
    const DefectBundle d = defects(f);
    const Subset derived = derived_module(*f.dom);
    for (Elem a : derived.members())
      for (Elem m = 0; m < f.dom->order(); ++m) {
        EXPECT_EQ(d.additive(m, a), 0u);
        EXPECT_EQ(d.additive(a, m), 0u);
        for (Elem x = 0; x < f.dom->ring().ree_order(); ++x) {
          EXPECT_EQ(d.bracket(x, m, a), 0u);
          EXPECT_EQ(d.bracket(x, a, m), 0u);
        }
      }
  }
}

TEST(BhpQuadratic, ScalarDefectsAreQuadratic) {
  for (const MapTable& f : small_quadratic_maps())
    for (Elem r = 0; r < f.dom->ring().re_order(); ++r)
      EXPECT_TRUE(is_bhp_quadratic(scalar_defect_map(f, r)).quadratic());
}

TEST(CpQuadratic, HopfMapBetweenCpPairsOverSym) {
  RingPtr ring = ring_of(ExampleKind::sym, 2);
  ModulePtr re = regular_module(ring), ree = ree_module(ring);
  const MapTable h = hopf_map(ring);
  std::size_t checked = 0;
  for (const Subset& a : admissible_intermediates(*re))
    for (const Subset& b : admissible_intermediates(*ree)) {
      bool image_in_b = true;
      for (Elem x : a.members()) image_in_b = image_in_b && b.contains(h(x));
      if (!image_in_b || !rank_one_pair(ring).distinguished().is_subset_of(a)) continue;
      ++checked;
      const QuadCertificate c = is_cp_quadratic(h, certify(CpModule(re, a)), certify(CpModule(ree, b)));
      EXPECT_TRUE(c.quadratic()) << c.verdict.summary();
    }
  EXPECT_GT(checked, 0u);
}

TEST(CpQuadratic, ZeroMapIsQuadraticWithZeroDefects) {
  const CpModule p = rank_one_pair(ring_of(ExampleKind::sym, 2));
  const MapTable z = zero_map(p.base_ptr(), p.base_ptr());
  EXPECT_TRUE(is_cp_quadratic(z, p, p).quadratic());
  const DefectBundle d = defects(z);
  for (Elem v : d.additive_table) EXPECT_EQ(v, 0u);
  for (Elem v : d.scalar_table) EXPECT_EQ(v, 0u);
}

TEST(CpQuadratic, CensusOverRnilMatchesBruteForce) {
  const CpModule p = rank_one_pair(ring_of(ExampleKind::rnil, 2));
  std::size_t brute = 0;
  for (const auto& v : oracle::all_tables(p.base().order(), p.base().order(), true))
    brute += oracle::cp_quadratic(make_map(p.base_ptr(), p.base_ptr(), v), p.distinguished(), p.distinguished());
  EXPECT_EQ(enumerate_cp_quadratic(p, p, 1000).size(), brute);
}

TEST(CpQuadratic, UncertifiedEndpointsAreRefused) {
  const CpModule p = rank_one_pair(ring_of(ExampleKind::sym, 2));
  const CpModule raw(p.base_ptr(), p.distinguished());
  try {
    is_cp_quadratic(identity_map(p.base_ptr()), raw, p);
    FAIL() << "expected PreconditionUnmet";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::precondition_unmet);
  }
}

TEST(CpQuadratic, InducedGradedMaps) {
  RingPtr ring = ring_of(ExampleKind::sym, 2);
  const CpModule p = rank_one_pair(ring);
  const GradedAlgebra2 g = gr(p);
  for (const MapTable& f : enumerate_cp_quadratic(p, p, 1000)) {
    const QuadCertificate c = is_cp_quadratic(f, p, p);
    ASSERT_TRUE(c.graded.has_value());
    for (Elem m = 0; m < p.base().order(); ++m) EXPECT_EQ(c.graded->deg1[g.deg1_proj[m]], g.deg1_proj[f(m)]);
    const auto& a = p.distinguished().members();
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(c.graded->deg2[i], p.distinguished().index_of(f(a[i])));
  }
}

TEST(CpQuadratic, CpQuadraticImpliesBhpQuadratic) {
  const CpModule p = rank_one_pair(ring_of(ExampleKind::sym, 2));
  for (const MapTable& f : enumerate_cp_quadratic(p, p, 1000)) EXPECT_TRUE(cp_implies_bhp(f, p, p).quadratic());
}

TEST(ThreeDefects, LinearHopfAndRightMultiplications) {
  EXPECT_TRUE(three_defects_check(identity_map(regular_module(ring_of(ExampleKind::sym, 2)))).passed());
  const Verdict h = three_defects_check(hopf_map(ring_of(ExampleKind::rnil, 4)));
  EXPECT_TRUE(h.passed()) << h.summary();
  EXPECT_NE(h.statement("two-specialization"), nullptr);
  ModulePtr re = regular_module(ring_of(ExampleKind::sym, 3));
  for (Elem t = 0; t < re->order(); ++t) EXPECT_TRUE(three_defects_check(right_multiplication(re, t)).passed());
}

TEST(ThreeDefects, HopfMapAtThreePointwise) {
  RingPtr ring = ring_of(ExampleKind::rnil, 4);
  const MapTable h = hopf_map(ring);
  const DefectBundle d = defects(h);
  const Elem r = 3;
  const MapTable hr = scalar_defect_map(h, r);
  const DefectBundle dr = defects(hr);
  const Elem r2r = ring->sub(ring->mul(r, r), r);
  for (Elem m = 0; m < 4; ++m)
    for (Elem mp = 0; mp < 4; ++mp)
      EXPECT_EQ(dr.additive(m, mp),
                h.cod->add(d.bracket(ring->hopf(r), m, mp), h.cod->scale(d.additive(m, mp), r2r)));
}

TEST(ThreeDefects, NonQuadraticMapIsAPreconditionFailure) {
  try {
    three_defects_check(squaring(ring_of(ExampleKind::tensor, 3)));
    FAIL() << "expected PreconditionUnmet";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::precondition_unmet);
  }
}

TEST(Compose, IdentityIsNeutral) {
  const CpModule p = rank_one_pair(ring_of(ExampleKind::sym, 2));
  const MapTable id = identity_map(p.base_ptr());
  for (const MapTable& g : enumerate_cp_quadratic(p, p, 1000)) {
    const Composite c = compose_quadratic(g, id, p, p, p);
    EXPECT_EQ(c.map.values, g.values);
    EXPECT_TRUE(c.formulas.passed());
    EXPECT_TRUE(c.certificate.quadratic());
  }
}

TEST(Compose, RightMultiplicationsCompose) {
  RingPtr ring = ring_of(ExampleKind::sym, 3);
  const CpModule p = rank_one_pair(ring);
  std::size_t pairs = 0;
  for (Elem s = 0; s < p.base().order(); ++s)
    for (Elem t = 0; t < p.base().order(); ++t) {
      const MapTable ms = right_multiplication(p.base_ptr(), s), mt = right_multiplication(p.base_ptr(), t);
      if (!is_cp_quadratic(ms, p, p).quadratic() || !is_cp_quadratic(mt, p, p).quadratic()) continue;
      ++pairs;
      const Composite c = compose_quadratic(ms, mt, p, p, p);
      EXPECT_EQ(c.map.values, right_multiplication(p.base_ptr(), ring->mul(t, s)).values);
      EXPECT_TRUE(c.formulas.passed());
    }
  EXPECT_GT(pairs, 0u);
}

TEST(Compose, HopfAfterRightMultiplicationOnRnilZ4) {
  RingPtr ring = ring_of(ExampleKind::rnil, 4);
  const CpModule p = rank_one_pair(ring);
  ModulePtr ree = ree_module(ring);
  const CpModule full = certify(CpModule(ree, Subset::full(ree->order())));
  const MapTable h = hopf_map(ring);
  for (Elem t = 0; t < 4; ++t) {
    const Composite c = compose_quadratic(h, right_multiplication(p.base_ptr(), t), p, p, full);
    EXPECT_TRUE(c.certificate.quadratic());
    EXPECT_TRUE(c.formulas.passed()) << c.formulas.summary();
  }
}

TEST(Compose, MismatchedModulesAreNotComposable) {
  RingPtr ring = ring_of(ExampleKind::rnil, 4);
  const CpModule p = rank_one_pair(ring);
  ModulePtr ree = ree_module(ring);
  const CpModule full = certify(CpModule(ree, Subset::full(ree->order())));
  const MapTable h = hopf_map(ring);
  try {
    compose_quadratic(h, h, p, full, full);
    FAIL() << "expected NotComposable";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::not_composable);
  }
}

TEST(Compose, NonQuadraticInputIsAnInvalidCertificate) {
  RingPtr ring = ring_of(ExampleKind::sym, 2);
  const CpModule p = rank_one_pair(ring);
  std::vector<Elem> v(p.base().order(), 0);
  v[0] = 1;  // f(0) != 0
  try {
    compose_quadratic(identity_map(p.base_ptr()), make_map(p.base_ptr(), p.base_ptr(), v), p, p, p);
    FAIL() << "expected CertificateInvalid";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::certificate_invalid);
  }
}

TEST(Promotion, LinearHopfAndRightMultiplications) {
  EXPECT_TRUE(promote_to_cp(identity_map(regular_module(ring_of(ExampleKind::sym, 2)))).certificate.quadratic());
  const Promotion h = promote_to_cp(hopf_map(ring_of(ExampleKind::rnil, 4)));
  EXPECT_TRUE(h.certificate.quadratic());
  EXPECT_TRUE(verify_cp_module(h.source).passed());
  EXPECT_TRUE(verify_cp_module(h.target).passed());
  ModulePtr re = regular_module(ring_of(ExampleKind::sym, 3));
  for (Elem t = 0; t < re->order(); ++t) EXPECT_TRUE(promote_to_cp(right_multiplication(re, t)).certificate.quadratic());
}

TEST(Factorization, ClassicalDividedSquares) {
  RingPtr ring = ring_of(ExampleKind::classical, 4);
  ModulePtr re = regular_module(ring);
  const CpModule src = certify(CpModule(re, Subset::zero(4)));
  const CpModule dst = certify(CpModule(re, Subset::full(4)));
  for (Elem a = 0; a < 4; ++a) {
    std::vector<Elem> v(4);
    for (Elem n = 0; n < 4; ++n) v[n] = (a * n * n) % 4;
    const MapTable f = make_map(re, re, v);
    ASSERT_TRUE(is_cp_quadratic(f, src, dst).quadratic()) << a;
    EXPECT_TRUE(factorization_check(f, src, dst).passed());
  }
  const CpModule zero_pair = certify(CpModule(re, Subset::zero(4)));
  const Verdict lin = factorization_check(identity_map(re), zero_pair, zero_pair);
  EXPECT_TRUE(lin.passed());
}

TEST(Factorization, HopfMapOverSym) {
  RingPtr ring = ring_of(ExampleKind::sym, 2);
  ModulePtr ree = ree_module(ring);
  const CpModule src = rank_one_pair(ring);
  const CpModule dst = certify(CpModule(ree, Subset::full(ree->order())));
  EXPECT_TRUE(factorization_check(hopf_map(ring), src, dst).passed());
}

TEST(Factorization, RequiresAQuadraticMap) {
  RingPtr ring = ring_of(ExampleKind::classical, 4);
  ModulePtr re = regular_module(ring);
  const CpModule p = certify(CpModule(re, Subset::zero(4)));
  const MapTable sq = make_map(re, re, {0, 1, 0, 1});
  try {
    factorization_check(sq, p, p);
    FAIL() << "expected PreconditionUnmet";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::precondition_unmet);
  }
}

TEST(Routes, CharacterizationsAgreeOnRankOnePairs) {
  for (ExampleKind k : {ExampleKind::rnil, ExampleKind::sym, ExampleKind::gamma, ExampleKind::tensor}) {
    const CpModule p = rank_one_pair(ring_of(k, 2));
    for (const auto& v : oracle::all_tables(p.base().order(), p.base().order(), true)) {
      const MapTable f = make_map(p.base_ptr(), p.base_ptr(), v);
      const bool red = routes::cp_reduced(f, p, p).passed();
      EXPECT_EQ(red, routes::cp_definition(f, p, p).passed());
      EXPECT_EQ(red, routes::cp_factorization(f, p, p).passed());
      const bool rel = routes::bhp_relations(f).passed();
      EXPECT_EQ(rel, routes::bhp_definition(f).passed());
      EXPECT_EQ(rel, routes::bhp_linear_brackets(f).passed());
    }
  }
}
