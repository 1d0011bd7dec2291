#include "quadrica/graded.hpp"

#include "quadrica/errors.hpp"
#include "quadrica/laws.hpp"

namespace quadrica {

namespace {

std::vector<Law> rbar_module_laws(const RbarModule* m, const NearRing* bar, const std::string& tag) {
  const auto G = iota_domain(m->group.order());
  const auto C = iota_domain(bar->order());
  return {
      {tag + "-abelian", "a + b = b + a", {G, G},
       [m](Tuple v) { return m->group.add(v[0], v[1]) == m->group.add(v[1], v[0]); }},
      {tag + "-unit", "a.1 = a", {G}, [m, bar](Tuple v) { return m->act(v[0], bar->one()) == v[0]; }},
      {tag + "-assoc", "(a.c).d = a.(c d)", {G, C, C},
       [m, bar](Tuple v) { return m->act(m->act(v[0], v[1]), v[2]) == m->act(v[0], bar->mul(v[1], v[2])); }},
      {tag + "-additive-module", "(a + b).c = a.c + b.c", {G, G, C},
       [m](Tuple v) {
         return m->act(m->group.add(v[0], v[1]), v[2]) == m->group.add(m->act(v[0], v[2]), m->act(v[1], v[2]));
       }},
      {tag + "-additive-ring", "a.(c + d) = a.c + a.d", {G, C, C},
       [m, bar](Tuple v) {
         return m->act(v[0], bar->add(v[1], v[2])) == m->group.add(m->act(v[0], v[1]), m->act(v[0], v[2]));
       }},
  };
}

}  // namespace

Verdict graded_verdict(const GradedAlgebra2& g) {
  const NearRing* bar = &g.operad.arity1.ring;
  auto laws = rbar_module_laws(&g.deg1, bar, "deg1");
  auto more = rbar_module_laws(&g.deg2, bar, "deg2");
  laws.insert(laws.end(), more.begin(), more.end());
  const auto D = iota_domain(g.deg1.group.order());
  const auto X = iota_domain(g.operad.arity2.order());
  const auto C = iota_domain(bar->order());
  const GradedAlgebra2* G = &g;
  const FiniteGroup* d1 = &g.deg1.group;
  const FiniteGroup* d2 = &g.deg2.group;
  const FiniteGroup* x2 = &g.operad.arity2;
  laws.push_back({"pairing-additive-left", "<a + a', b; x> = <a, b; x> + <a', b; x>", {D, D, D, X},
                  [G, d1, d2](Tuple v) {
                    return G->pair(d1->add(v[0], v[1]), v[2], v[3])
                           == d2->add(G->pair(v[0], v[2], v[3]), G->pair(v[1], v[2], v[3]));
                  }});
  laws.push_back({"pairing-additive-right", "<a, b + b'; x> = <a, b; x> + <a, b'; x>", {D, D, D, X},
                  [G, d1, d2](Tuple v) {
                    return G->pair(v[0], d1->add(v[1], v[2]), v[3])
                           == d2->add(G->pair(v[0], v[1], v[3]), G->pair(v[0], v[2], v[3]));
                  }});
  laws.push_back({"pairing-additive-operation", "<a, b; x + y> = <a, b; x> + <a, b; y>", {D, D, X, X},
                  [G, d2, x2](Tuple v) {
                    return G->pair(v[0], v[1], x2->add(v[2], v[3]))
                           == d2->add(G->pair(v[0], v[1], v[2]), G->pair(v[0], v[1], v[3]));
                  }});
  laws.push_back({"pairing-equivariant", "<a.c, b.d; x> = <a, b; (c, d).x>", {D, D, C, C, X},
                  [G, bar](Tuple v) {
                    return G->pair(G->deg1.act(v[0], v[2]), G->deg1.act(v[1], v[3]), v[4])
                           == G->pair(v[0], v[1], G->operad.act(v[2], v[3], v[4], bar->one()));
                  }});
  laws.push_back({"pairing-right-action", "<a, b; x>.c = <a, b; x.c>", {D, D, X, C},
                  [G, bar](Tuple v) {
                    return G->deg2.act(G->pair(v[0], v[1], v[2]), v[3])
                           == G->pair(v[0], v[1], G->operad.act(bar->one(), bar->one(), v[2], v[3]));
                  }});
  laws.push_back({"pairing-symmetric", "<a, b; T(x)> = <b, a; x>", {D, D, X},
                  [G](Tuple v) {
                    return G->pair(v[0], v[1], G->operad.symmetry[v[2]]) == G->pair(v[1], v[0], v[2]);
                  }});
  return check_laws(laws);
}

GradedAlgebra2 gr(const CpModule& ma, const Config& cfg) {
  if (!ma.certified())
    throw Error(ErrorKind::precondition_unmet, "gr needs a certified CP module");
  const BhpModule& m = ma.base();
  const Subset& a = ma.distinguished();
  GradedAlgebra2 g;
  g.operad = operad_of(m.ring());
  const RingBar& bar = g.operad.arity1;
  const std::size_t kb = bar.ring.order(), x = m.ring().ree_order();

  const Elem none = static_cast<Elem>(m.order());
  g.deg1_proj.assign(m.order(), none);
  for (Elem v = 0; v < m.order(); ++v) {
    if (g.deg1_proj[v] != none) continue;
    const Elem cls = static_cast<Elem>(g.deg1_lift.size());
    g.deg1_lift.push_back(v);
    for (Elem w : a.members()) g.deg1_proj[m.add(v, w)] = cls;
  }
  g.deg2_embed = a.members();
  const std::size_t k1 = g.deg1_lift.size(), k2 = g.deg2_embed.size();

  std::vector<Elem> add1(k1 * k1), add2(k2 * k2);
  g.deg1.rbar_order = g.deg2.rbar_order = kb;
  g.deg1.action.resize(k1 * kb);
  g.deg2.action.resize(k2 * kb);
  for (Elem i = 0; i < k1; ++i) {
    for (Elem j = 0; j < k1; ++j) add1[i * k1 + j] = g.deg1_proj[m.add(g.deg1_lift[i], g.deg1_lift[j])];
    for (Elem c = 0; c < kb; ++c) g.deg1.action[i * kb + c] = g.deg1_proj[m.scale(g.deg1_lift[i], bar.lift[c])];
  }
  for (Elem i = 0; i < k2; ++i) {
    for (Elem j = 0; j < k2; ++j)
      add2[i * k2 + j] = static_cast<Elem>(a.index_of(m.add(g.deg2_embed[i], g.deg2_embed[j])));
    for (Elem c = 0; c < kb; ++c)
      g.deg2.action[i * kb + c] = static_cast<Elem>(a.index_of(m.scale(g.deg2_embed[i], bar.lift[c])));
  }
  g.deg1.group = build_group(std::move(add1), cfg.cap_group);
  g.deg2.group = build_group(std::move(add2), cfg.cap_group);
  g.pairing.resize(k1 * k1 * x);
  for (Elem i = 0; i < k1; ++i)
    for (Elem j = 0; j < k1; ++j)
      for (Elem v = 0; v < x; ++v)
        g.pairing[(i * k1 + j) * x + v] =
            static_cast<Elem>(a.index_of(m.bracket(g.deg1_lift[i], g.deg1_lift[j], v)));

  // Independence of representatives, over every element and every R_e lift.
  for (Elem u = 0; u < m.order(); ++u) {
    for (Elem r = 0; r < m.ring().re_order(); ++r)
      if (g.deg1_proj[m.scale(u, r)] != g.deg1.act(g.deg1_proj[u], bar.proj[r]))
        throw Error(ErrorKind::internal_inconsistency, "M/A action not well defined", {u, r});
    for (Elem w = 0; w < m.order(); ++w)
      for (Elem v = 0; v < x; ++v)
        if (a.index_of(m.bracket(u, w, v)) != g.pair(g.deg1_proj[u], g.deg1_proj[w], v))
          throw Error(ErrorKind::internal_inconsistency, "pairing not well defined", {u, w, v});
  }
  for (Elem u : a.members())
    for (Elem r = 0; r < m.ring().re_order(); ++r)
      if (a.index_of(m.scale(u, r)) != g.deg2.act(static_cast<Elem>(a.index_of(u)), bar.proj[r]))
        throw Error(ErrorKind::internal_inconsistency, "A action not well defined", {u, r});

  const Verdict v = graded_verdict(g);
  if (!v.passed())
    throw Error(ErrorKind::internal_inconsistency, "graded algebra laws fail: " + v.summary());
  return g;
}

GradedAlgebra2 gr_gamma(const ModulePtr& m, const Config& cfg) {
  return gr(certify(CpModule(m, derived_module(*m, cfg)), cfg), cfg);
}

GradedAlgebra2 gr_z(const ModulePtr& m, const Config& cfg) {
  return gr(certify(CpModule(m, r_center(*m, cfg)), cfg), cfg);
}

}  // namespace quadrica
