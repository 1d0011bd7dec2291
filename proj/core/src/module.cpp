#include "quadrica/module.hpp"

#include <string>

#include "quadrica/errors.hpp"
#include "quadrica/laws.hpp"

namespace quadrica {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::dimension_mismatch, "module: " + what);
}

}  // namespace

BhpModule::BhpModule(BhpModuleParts parts) : p_(std::move(parts)) {
  require(p_.ring != nullptr, "missing ring");
  const std::size_t m = p_.group.order(), e = p_.ring->re_order(), x = p_.ring->ree_order();
  require(m > 0, "empty carrier");
  require(p_.scal.size() == m * e, "scalar table has wrong size");
  require(p_.bracket.size() == m * m * x, "bracket table has wrong size");
  for (Elem v : p_.scal) require(v < m, "scalar value out of range");
  for (Elem v : p_.bracket) require(v < m, "bracket value out of range");
}

bool BhpModule::same_tables(const BhpModule& o) const {
  if (this == &o) return true;
  return p_.ring->same_tables(*o.p_.ring) && p_.group == o.p_.group && p_.scal == o.p_.scal
         && p_.bracket == o.p_.bracket;
}

namespace {

std::vector<Law> bhp_laws(const BhpModule& mod) {
  const SquareRing& R = mod.ring();
  const auto M = iota_domain(mod.order());
  const auto E = iota_domain(R.re_order());
  const auto X = iota_domain(R.ree_order());
  const BhpModule* m = &mod;
  const SquareRing* r = &R;
  std::vector<Law> laws;
  auto law = [&](std::string id, std::string st, std::vector<std::vector<Elem>> d,
                 std::function<bool(Tuple)> f) {
    laws.push_back({std::move(id), std::move(st), std::move(d), std::move(f)});
  };

  law("MC1.unit", "m.1 = m", {M}, [m, r](Tuple v) { return m->scale(v[0], r->one()) == v[0]; });
  law("MC1.assoc", "(m.r).s = m.(r s)", {M, E, E}, [m, r](Tuple v) {
    return m->scale(m->scale(v[0], v[1]), v[2]) == m->scale(v[0], r->mul(v[1], v[2]));
  });
  law("MC1.additive", "m.(r + s) = m.r + m.s", {M, E, E}, [m, r](Tuple v) {
    return m->scale(v[0], r->add(v[1], v[2])) == m->add(m->scale(v[0], v[1]), m->scale(v[0], v[2]));
  });
  law("MC2", "(m + n).r = m.r + n.r + [m, n].H(r)", {M, M, E}, [m, r](Tuple v) {
    const Elem rhs = m->group().sum(
        {m->scale(v[0], v[2]), m->scale(v[1], v[2]), m->bracket(v[0], v[1], r->hopf(v[2]))});
    return m->scale(m->add(v[0], v[1]), v[2]) == rhs;
  });
  law("MC3", "m.P(x) = [m, m].x", {M, X}, [m, r](Tuple v) {
    return m->scale(v[0], r->transfer(v[1])) == m->bracket(v[0], v[0], v[1]);
  });
  law("MC4", "[m, n].T(x) = [n, m].x", {M, M, X}, [m, r](Tuple v) {
    return m->bracket(v[0], v[1], r->twist(v[2])) == m->bracket(v[1], v[0], v[2]);
  });
  law("MC5.left", "[m + m', n].x = [m, n].x + [m', n].x", {M, M, M, X}, [m](Tuple v) {
    return m->bracket(m->add(v[0], v[1]), v[2], v[3])
           == m->add(m->bracket(v[0], v[2], v[3]), m->bracket(v[1], v[2], v[3]));
  });
  law("MC5.right", "[m, n + n'].x = [m, n].x + [m, n'].x", {M, M, M, X}, [m](Tuple v) {
    return m->bracket(v[0], m->add(v[1], v[2]), v[3])
           == m->add(m->bracket(v[0], v[1], v[3]), m->bracket(v[0], v[2], v[3]));
  });
  law("MC5.ring", "[m, n].(x + y) = [m, n].x + [m, n].y", {M, M, X, X}, [m, r](Tuple v) {
    return m->bracket(v[0], v[1], r->add_ee(v[2], v[3]))
           == m->add(m->bracket(v[0], v[1], v[2]), m->bracket(v[0], v[1], v[3]));
  });
  law("MC6", "([m.r, n.s].x).t = [m, n].((r, s).x.t)", {M, M, E, E, X, E}, [m, r](Tuple v) {
    const Elem lhs = m->scale(m->bracket(m->scale(v[0], v[2]), m->scale(v[1], v[3]), v[4]), v[5]);
    return lhs == m->bracket(v[0], v[1], r->act(v[2], v[3], v[4], v[5]));
  });
  law("MC7", "[[m, m'].x, n].y = 0", {M, M, X, M, X}, [m](Tuple v) {
    return m->bracket(m->bracket(v[0], v[1], v[2]), v[3], v[4]) == 0;
  });
  return laws;
}

std::vector<Law> cp_laws(const CpModule& cp) {
  const BhpModule& mod = cp.base();
  const SquareRing& R = mod.ring();
  const auto M = iota_domain(mod.order());
  const auto E = iota_domain(R.re_order());
  const auto X = iota_domain(R.ree_order());
  const auto& Am = cp.distinguished().members();
  const BhpModule* m = &mod;
  const Subset* a = &cp.distinguished();
  return {
      {"A-subgroup", "A is a subgroup of M", {},
       [m, a](Tuple) { return is_subgroup(m->group(), *a); }},
      {"MC0", "a.r in A for a in A", {Am, E},
       [m, a](Tuple v) { return a->contains(m->scale(v[0], v[1])); }},
      {"MC7a", "[a, n].x = 0 for a in A", {Am, M, X},
       [m](Tuple v) { return m->bracket(v[0], v[1], v[2]) == 0; }},
      {"MC7b", "[m, n].x in A", {M, M, X},
       [m, a](Tuple v) { return a->contains(m->bracket(v[0], v[1], v[2])); }},
  };
}

}  // namespace

Verdict verify_bhp_module(const BhpModule& m, const Config& cfg) {
  return check_laws(bhp_laws(m), CheckOptions::from(cfg));
}

bool module_witness_violates(const BhpModule& m, const Witness& w) {
  return witness_violates(bhp_laws(m), w);
}

ModulePtr certify(BhpModule m, const Config& cfg) {
  if (!m.ring().certified())
    throw Error(ErrorKind::precondition_unmet, "module over an uncertified square ring");
  if (m.order() > cfg.cap_group)
    throw Error(ErrorKind::cap_exceeded, "module of order " + std::to_string(m.order())
                                             + " exceeds cap " + std::to_string(cfg.cap_group));
  Verdict v = verify_bhp_module(m, cfg);
  if (!v.passed()) throw AxiomViolation("BHP module " + m.label(), std::move(v));
  m.certified_ = true;
  return std::make_shared<const BhpModule>(std::move(m));
}

CpModule::CpModule(ModulePtr base, Subset distinguished)
    : base_(std::move(base)), a_(std::move(distinguished)) {
  if (!base_) throw Error(ErrorKind::dimension_mismatch, "CP module: missing base");
  if (a_.parent_order() != base_->order())
    throw Error(ErrorKind::dimension_mismatch, "CP module: subgroup over a different carrier");
}

Verdict verify_cp_module(const CpModule& m, const Config& cfg) {
  Verdict v;
  if (!m.base().certified()) v = verify_bhp_module(m.base(), cfg);
  v.merge(check_laws(cp_laws(m), CheckOptions::from(cfg)));
  return v;
}

CpModule certify(CpModule m, const Config& cfg) {
  if (!m.base().ring().certified())
    throw Error(ErrorKind::precondition_unmet, "CP module over an uncertified square ring");
  Verdict v = verify_cp_module(m, cfg);
  if (!v.passed()) throw AxiomViolation("CP module " + m.base().label(), std::move(v));
  m.certified_ = true;
  return m;
}

Verdict elementary_properties(const BhpModule& mod, const Config& cfg) {
  const SquareRing& R = mod.ring();
  const auto M = iota_domain(mod.order());
  const auto E = iota_domain(R.re_order());
  const auto X = iota_domain(R.ree_order());
  const BhpModule* m = &mod;
  const SquareRing* r = &R;
  const std::vector<Law> laws{
      {"brackets-central", "[m, n].x + k = k + [m, n].x", {M, M, X, M},
       [m](Tuple v) {
         const Elem b = m->bracket(v[0], v[1], v[2]);
         return m->add(b, v[3]) == m->add(v[3], b);
       }},
      {"bracket-H2-commutator", "[m, n].H(2) = n + m - n - m", {M, M},
       [m, r](Tuple v) {
         return m->bracket(v[0], v[1], r->hopf(r->two())) == m->group().commutator(v[1], v[0]);
       }},
      {"class-two", "the group is nilpotent of class <= 2", {},
       [m](Tuple) { return m->group().nilpotency_class() != kClassAboveTwo; }},
      {"negation-scalar", "(-m).r = -(m.r) + [m, m].H(r) = -(m.r) + m.PH(r)", {M, E},
       [m, r](Tuple v) {
         const Elem lhs = m->scale(m->neg(v[0]), v[1]);
         const Elem base = m->neg(m->scale(v[0], v[1]));
         return lhs == m->add(base, m->bracket(v[0], v[0], r->hopf(v[1])))
                && lhs == m->add(base, m->scale(v[0], r->transfer(r->hopf(v[1]))));
       }},
      {"bracket-kills-P", "([m, n].x).P(y) = 0", {M, M, X, X},
       [m, r](Tuple v) { return m->scale(m->bracket(v[0], v[1], v[2]), r->transfer(v[3])) == 0; }},
      {"P-products-vanish", "P(x) P(y) = 0", {X, X},
       [r](Tuple v) { return r->mul(r->transfer(v[0]), r->transfer(v[1])) == 0; }},
  };
  return check_laws(laws, CheckOptions::from(cfg));
}

// ---------------------------------------------------------------------

ModulePtr regular_module(const RingPtr& ring, const Config& cfg) {
  const SquareRing& R = *ring;
  const std::size_t e = R.re_order(), x = R.ree_order();
  BhpModuleParts p{ring, R.re().additive(), {}, {}, "regular(" + R.label() + ")"};
  p.scal = R.re().mul_table();
  p.bracket.resize(e * e * x);
  for (Elem a = 0; a < e; ++a)
    for (Elem b = 0; b < e; ++b)
      for (Elem v = 0; v < x; ++v) p.bracket[(a * e + b) * x + v] = R.transfer(R.left(a, b, v));
  return certify(BhpModule(std::move(p)), cfg);
}

ModulePtr ree_module(const RingPtr& ring, const Config& cfg) {
  const SquareRing& R = *ring;
  const std::size_t e = R.re_order(), x = R.ree_order();
  BhpModuleParts p{ring, R.ree(), std::vector<Elem>(x * e), std::vector<Elem>(x * x * x, 0),
                   "ree(" + R.label() + ")"};
  for (Elem v = 0; v < x; ++v)
    for (Elem t = 0; t < e; ++t) p.scal[v * e + t] = R.right(v, t);
  return certify(BhpModule(std::move(p)), cfg);
}

ModulePtr rbar_module(const RingPtr& ring, const Config& cfg) {
  const SquareRing& R = *ring;
  const RingBar bar = cokernel_p(R);
  const std::size_t k = bar.ring.order(), e = R.re_order(), x = R.ree_order();
  BhpModuleParts p{ring, bar.ring.additive(), std::vector<Elem>(k * e),
                   std::vector<Elem>(k * k * x, 0), "rbar(" + R.label() + ")"};
  for (Elem c = 0; c < k; ++c)
    for (Elem r = 0; r < e; ++r) p.scal[c * e + r] = bar.ring.mul(c, bar.proj[r]);
  return certify(BhpModule(std::move(p)), cfg);
}

ModulePtr zero_module(const RingPtr& ring, const Config& cfg) {
  BhpModuleParts p{ring, cyclic_group(1), std::vector<Elem>(ring->re_order(), 0),
                   std::vector<Elem>(ring->ree_order(), 0), "zero(" + ring->label() + ")"};
  return certify(BhpModule(std::move(p)), cfg);
}

ModulePtr direct_sum(const ModulePtr& m, const ModulePtr& n, const Config& cfg) {
  if (!m->ring().same_tables(n->ring()))
    throw Error(ErrorKind::dimension_mismatch, "direct sum of modules over different rings");
  const SquareRing& R = m->ring();
  const std::size_t a = m->order(), b = n->order(), e = R.re_order(), x = R.ree_order();
  BhpModuleParts p{m->ring_ptr(), direct_product(m->group(), n->group(), cfg.cap_group), {}, {},
                   m->label() + "+" + n->label()};
  const std::size_t total = a * b;
  p.scal.resize(total * e);
  p.bracket.resize(total * total * x);
  for (Elem u = 0; u < total; ++u) {
    for (Elem r = 0; r < e; ++r)
      p.scal[u * e + r] = static_cast<Elem>(m->scale(u / b, r) * b + n->scale(u % b, r));
    for (Elem w = 0; w < total; ++w)
      for (Elem v = 0; v < x; ++v)
        p.bracket[(u * total + w) * x + v] =
            static_cast<Elem>(m->bracket(u / b, w / b, v) * b + n->bracket(u % b, w % b, v));
  }
  return certify(BhpModule(std::move(p)), cfg);
}

CpModule rank_one_pair(const RingPtr& ring, const Config& cfg) {
  ModulePtr reg = regular_module(ring, cfg);
  std::vector<Elem> image;
  for (Elem v = 0; v < ring->ree_order(); ++v) image.push_back(ring->transfer(v));
  return certify(CpModule(reg, Subset(reg->order(), std::move(image))), cfg);
}

// ---------------------------------------------------------------------

MapTable make_map(ModulePtr dom, ModulePtr cod, std::vector<Elem> values) {
  if (!dom || !cod) throw Error(ErrorKind::dimension_mismatch, "map: missing endpoint");
  if (values.size() != dom->order())
    throw Error(ErrorKind::dimension_mismatch, "map: table size differs from domain order");
  for (Elem v : values)
    if (v >= cod->order()) throw Error(ErrorKind::dimension_mismatch, "map: value out of range", {v});
  if (!dom->ring().same_tables(cod->ring()))
    throw Error(ErrorKind::dimension_mismatch, "map: endpoints over different rings");
  return MapTable{std::move(dom), std::move(cod), std::move(values)};
}

MapTable identity_map(const ModulePtr& m) {
  return make_map(m, m, iota_domain(m->order()));
}

MapTable zero_map(const ModulePtr& dom, const ModulePtr& cod) {
  return make_map(dom, cod, std::vector<Elem>(dom->order(), 0));
}

namespace {

std::vector<Law> linear_laws(const MapTable& f) {
  const BhpModule* M = f.dom.get();
  const BhpModule* N = f.cod.get();
  const auto Md = iota_domain(M->order());
  const auto E = iota_domain(M->ring().re_order());
  const auto X = iota_domain(M->ring().ree_order());
  const std::vector<Elem>* t = &f.values;
  return {
      {"additive", "f(m + m') = f(m) + f(m')", {Md, Md},
       [M, N, t](Tuple v) { return (*t)[M->add(v[0], v[1])] == N->add((*t)[v[0]], (*t)[v[1]]); }},
      {"scalar", "f(m.r) = f(m).r", {Md, E},
       [M, N, t](Tuple v) { return (*t)[M->scale(v[0], v[1])] == N->scale((*t)[v[0]], v[1]); }},
      {"bracket", "f([m, m'].x) = [f(m), f(m')].x", {Md, Md, X},
       [M, N, t](Tuple v) {
         return (*t)[M->bracket(v[0], v[1], v[2])] == N->bracket((*t)[v[0]], (*t)[v[1]], v[2]);
       }},
  };
}

}  // namespace

Verdict linearity_verdict(const MapTable& f, const Config& cfg) {
  return check_laws(linear_laws(f), CheckOptions::from(cfg));
}

bool is_linear(const MapTable& f, const Config& cfg) { return linearity_verdict(f, cfg).passed(); }

Verdict cp_linearity_verdict(const MapTable& f, const CpModule& src, const CpModule& dst,
                             const Config& cfg) {
  if (!src.base().same_tables(*f.dom) || !dst.base().same_tables(*f.cod))
    throw Error(ErrorKind::dimension_mismatch, "CP-linear check: endpoints do not match the map");
  Verdict v = linearity_verdict(f, cfg);
  const Subset* b = &dst.distinguished();
  const std::vector<Elem>* t = &f.values;
  const std::vector<Law> image{{"image-of-A", "f(A) contained in B", {src.distinguished().members()},
                                [b, t](Tuple x) { return b->contains((*t)[x[0]]); }}};
  v.merge(check_laws(image, CheckOptions::from(cfg)));
  return v;
}

bool is_cp_linear(const MapTable& f, const CpModule& src, const CpModule& dst, const Config& cfg) {
  return cp_linearity_verdict(f, src, dst, cfg).passed();
}

}  // namespace quadrica
