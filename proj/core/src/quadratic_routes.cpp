// The characterizations of quadratic maps, each phrased as a law family so
// that every route reports re-checkable witnesses.

#include <memory>

#include "quadrica/errors.hpp"
#include "quadrica/laws.hpp"
#include "quadrica/quadratic.hpp"

namespace quadrica::routes {

namespace {

using Phi = std::function<Elem(Elem param, Elem m, Elem n)>;

struct Ctx {
  const BhpModule* M;
  const BhpModule* N;
  const SquareRing* R;
  std::shared_ptr<const DefectBundle> d;
  const std::vector<Elem>* f;
  std::vector<Elem> Md, E, X;

  explicit Ctx(const MapTable& map)
      : M(map.dom.get()), N(map.cod.get()), R(&map.dom->ring()),
        d(std::make_shared<const DefectBundle>(defects(map))), f(&map.values),
        Md(iota_domain(M->order())), E(iota_domain(R->re_order())), X(iota_domain(R->ree_order())) {}
};

/// R-linearity of phi(p, -, n) and phi(p, m, -) for every parameter p.
void add_bilinear(std::vector<Law>& laws, const Ctx& c, const std::string& id,
                  const std::vector<Elem>& params, Phi phi) {
  const BhpModule* M = c.M;
  const BhpModule* N = c.N;
  const auto& Md = c.Md;
  laws.push_back({id + ".additive-left", "phi(m + m', n) = phi(m, n) + phi(m', n)", {params, Md, Md, Md},
                  [M, N, phi](Tuple v) {
                    return phi(v[0], M->add(v[1], v[2]), v[3]) == N->add(phi(v[0], v[1], v[3]), phi(v[0], v[2], v[3]));
                  }});
  laws.push_back({id + ".additive-right", "phi(m, n + n') = phi(m, n) + phi(m, n')", {params, Md, Md, Md},
                  [M, N, phi](Tuple v) {
                    return phi(v[0], v[1], M->add(v[2], v[3])) == N->add(phi(v[0], v[1], v[2]), phi(v[0], v[1], v[3]));
                  }});
  laws.push_back({id + ".scalar-left", "phi(m.r, n) = phi(m, n).r", {params, Md, c.E, Md},
                  [M, N, phi](Tuple v) {
                    return phi(v[0], M->scale(v[1], v[2]), v[3]) == N->scale(phi(v[0], v[1], v[3]), v[2]);
                  }});
  laws.push_back({id + ".scalar-right", "phi(m, n.r) = phi(m, n).r", {params, Md, Md, c.E},
                  [M, N, phi](Tuple v) {
                    return phi(v[0], v[1], M->scale(v[2], v[3])) == N->scale(phi(v[0], v[1], v[2]), v[3]);
                  }});
  laws.push_back({id + ".bracket-left", "phi([m, m'].y, n) = [phi(m, n), phi(m', n)].y",
                  {params, Md, Md, c.X, Md}, [M, N, phi](Tuple v) {
                    return phi(v[0], M->bracket(v[1], v[2], v[3]), v[4])
                           == N->bracket(phi(v[0], v[1], v[4]), phi(v[0], v[2], v[4]), v[3]);
                  }});
  laws.push_back({id + ".bracket-right", "phi(m, [n, n'].y) = [phi(m, n), phi(m, n')].y",
                  {params, Md, Md, Md, c.X}, [M, N, phi](Tuple v) {
                    return phi(v[0], v[1], M->bracket(v[2], v[3], v[4]))
                           == N->bracket(phi(v[0], v[1], v[2]), phi(v[0], v[1], v[3]), v[4]);
                  }});
}

Phi additive_phi(const Ctx& c) {
  auto d = c.d;
  return [d](Elem, Elem m, Elem n) { return d->additive(m, n); };
}

Phi bracket_phi(const Ctx& c) {
  auto d = c.d;
  return [d](Elem x, Elem m, Elem n) { return d->bracket(x, m, n); };
}

void add_homogeneity(std::vector<Law>& laws, const Ctx& c) {
  auto d = c.d;
  const BhpModule* M = c.M;
  const BhpModule* N = c.N;
  const SquareRing* R = c.R;
  laws.push_back({"scalar-defect-homogeneous", "f_(r)(m.s) = f_(r)(m).s^2", {c.E, c.Md, c.E},
                  [d, M, N, R](Tuple v) {
                    return d->scalar(v[0], M->scale(v[1], v[2])) == N->scale(d->scalar(v[0], v[1]), R->mul(v[2], v[2]));
                  }});
}

std::vector<Elem> additive_values(const DefectBundle& d) { return d.additive_table; }

std::vector<Elem> scalar_values(const DefectBundle& d, Elem r) {
  return {d.scalar_table.begin() + r * d.m_order, d.scalar_table.begin() + (r + 1) * d.m_order};
}

std::vector<Elem> bracket_values(const DefectBundle& d, Elem x) {
  const std::size_t block = d.m_order * d.m_order;
  return {d.bracket_table.begin() + x * block, d.bracket_table.begin() + (x + 1) * block};
}

/// "[y, z].x = 0 for y in inner and z in outer" as a law.
Law centrality_law(const Ctx& c, std::string id, const Subset& inner, std::shared_ptr<const Subset> outer) {
  const BhpModule* N = c.N;
  auto in = std::make_shared<const Subset>(inner);
  return {std::move(id), "[y, z].x = 0 for y in the defect image, z in im_R f",
          {in->members(), outer->members(), c.X},
          [N, in, outer](Tuple v) { return N->bracket(v[0], v[1], v[2]) == 0; }};
}

Law containment_law(std::string id, std::string statement, const Subset& image, const Subset* b) {
  auto img = std::make_shared<const Subset>(image);
  return {std::move(id), std::move(statement), {img->members()},
          [b](Tuple v) { return b->contains(v[0]); }};
}

void require_same(const MapTable& f, const CpModule& src, const CpModule& dst) {
  if (!src.base().same_tables(*f.dom) || !dst.base().same_tables(*f.cod))
    throw Error(ErrorKind::dimension_mismatch, "CP route: endpoints do not match the map");
}

Law zero_law(const std::vector<Elem>* f) {
  return {"zero", "f(0) = 0", {}, [f](Tuple) { return (*f)[0] == 0; }};
}

std::string indexed(const std::string& base, Elem i) { return base + "[" + std::to_string(i) + "]"; }

}  // namespace

Verdict bhp_relations(const MapTable& map, const Config& cfg, bool stop_early) {
  const Ctx c(map);
  const BhpModule* M = c.M;
  const BhpModule* N = c.N;
  const SquareRing* R = c.R;
  const std::vector<Elem>* f = c.f;
  const auto& Md = c.Md;
  const auto& E = c.E;
  const auto& X = c.X;
  auto F = [f](Elem m) { return (*f)[m]; };
  const std::vector<Law> laws{
      zero_law(f),
      {"(a)", "[f(m+m'), f(n)].x = [f(m), f(n)].x + [f(m'), f(n)].x", {Md, Md, Md, X},
       [=](Tuple v) {
         return N->bracket(F(M->add(v[0], v[1])), F(v[2]), v[3])
                == N->add(N->bracket(F(v[0]), F(v[2]), v[3]), N->bracket(F(v[1]), F(v[2]), v[3]));
       }},
      {"(b)", "[f(m.r), f(n)].x = ([f(m), f(n)].x).r", {Md, E, Md, X},
       [=](Tuple v) {
         return N->bracket(F(M->scale(v[0], v[1])), F(v[2]), v[3]) == N->scale(N->bracket(F(v[0]), F(v[2]), v[3]), v[1]);
       }},
      {"(c)", "[f([m, m'].x), f(n)].y = 0", {Md, Md, X, Md, X},
       [=](Tuple v) { return N->bracket(F(M->bracket(v[0], v[1], v[2])), F(v[3]), v[4]) == 0; }},
      {"(d)",
       "f(m+m'+m'') + f(m) + f(m') + f(m'') = f(m+m') + f(m'+m'') + f(m+m'') - [f(m'), f(m+m'')]",
       {Md, Md, Md},
       [=](Tuple v) {
         const Elem m = v[0], m1 = v[1], m2 = v[2];
         const Elem lhs = N->group().sum({F(M->add(M->add(m, m1), m2)), F(m), F(m1), F(m2)});
         const Elem rhs = N->group().sum({F(M->add(m, m1)), F(M->add(m1, m2)), F(M->add(m, m2)),
                                          N->neg(N->group().commutator(F(m1), F(M->add(m, m2))))});
         return lhs == rhs;
       }},
      {"(e)",
       "f(m.r + n.s) = f(m+n).rs - f(n).rs - f(m).rs + f(m.r) + f(n.s) - [f(m), f(n)].H(rs)",
       {Md, E, Md, E},
       [=](Tuple v) {
         const Elem m = v[0], r = v[1], n = v[2], s = v[3], t = R->mul(r, s);
         const Elem lhs = F(M->add(M->scale(m, r), M->scale(n, s)));
         const Elem rhs = N->group().sum(
             {N->scale(F(M->add(m, n)), t), N->neg(N->scale(F(n), t)), N->neg(N->scale(F(m), t)),
              F(M->scale(m, r)), F(M->scale(n, s)), N->neg(N->bracket(F(m), F(n), R->hopf(t)))});
         return lhs == rhs;
       }},
      {"(f)", "f([m, m'].x + n) = f([m, m'].x) + f(n)", {Md, Md, X, Md},
       [=](Tuple v) {
         const Elem b = M->bracket(v[0], v[1], v[2]);
         return F(M->add(b, v[3])) == N->add(F(b), F(v[3]));
       }},
      {"(g)", "f(m.sr) - f(m.s).r = (f(m.r) - f(m).r).s^2", {Md, E, E},
       [=](Tuple v) {
         const Elem m = v[0], s = v[1], r = v[2];
         const Elem lhs = N->sub(F(M->scale(m, R->mul(s, r))), N->scale(F(M->scale(m, s)), r));
         const Elem rhs = N->scale(N->sub(F(M->scale(m, r)), N->scale(F(m), r)), R->mul(s, s));
         return lhs == rhs;
       }},
      {"(h)", "f(([m, n].x).r) = f([m, n].x).r", {Md, Md, X, E},
       [=](Tuple v) {
         const Elem b = M->bracket(v[0], v[1], v[2]);
         return F(M->scale(b, v[3])) == N->scale(F(b), v[3]);
       }},
  };
  return check_laws(laws, CheckOptions::from(cfg, stop_early));
}

Verdict bhp_definition(const MapTable& map, const Config& cfg) {
  const Ctx c(map);
  std::vector<Law> laws{zero_law(c.f)};
  const DefectBundle& d = *c.d;
  auto image = std::make_shared<const Subset>(generated_submodule(*c.N, map.values, cfg));
  laws.push_back(centrality_law(c, "additive-defect-central",
                                generated_submodule(*c.N, additive_values(d), cfg), image));
  for (Elem r = 0; r < c.R->re_order(); ++r)
    laws.push_back(centrality_law(c, indexed("scalar-defect-central", r),
                                  generated_submodule(*c.N, scalar_values(d, r), cfg), image));
  for (Elem x = 0; x < c.R->ree_order(); ++x)
    laws.push_back(centrality_law(c, indexed("bracket-defect-central", x),
                                  generated_submodule(*c.N, bracket_values(d, x), cfg), image));
  add_bilinear(laws, c, "additive-defect-bilinear", {0}, additive_phi(c));
  add_bilinear(laws, c, "bracket-defect-bilinear", c.X, bracket_phi(c));
  add_homogeneity(laws, c);
  return check_laws(laws, CheckOptions::from(cfg));
}

Verdict bhp_linear_brackets(const MapTable& map, const Config& cfg) {
  const Ctx c(map);
  std::vector<Law> laws{zero_law(c.f)};
  const BhpModule* M = c.M;
  const BhpModule* N = c.N;
  const std::vector<Elem>* f = c.f;
  const Subset values(c.N->order(), map.values);
  const auto& Md = c.Md;
  const auto& X = c.X;
  auto F = [f](Elem m) { return (*f)[m]; };
  laws.push_back({"linear-brackets.additive", "[f(m + m'), n].x = [f(m), n].x + [f(m'), n].x",
                  {Md, Md, values.members(), X}, [=](Tuple v) {
                    return N->bracket(F(M->add(v[0], v[1])), v[2], v[3])
                           == N->add(N->bracket(F(v[0]), v[2], v[3]), N->bracket(F(v[1]), v[2], v[3]));
                  }});
  laws.push_back({"linear-brackets.scalar", "[f(m.r), n].x = ([f(m), n].x).r",
                  {Md, c.E, values.members(), X}, [=](Tuple v) {
                    return N->bracket(F(M->scale(v[0], v[1])), v[2], v[3]) == N->scale(N->bracket(F(v[0]), v[2], v[3]), v[1]);
                  }});
  laws.push_back({"linear-brackets.bracket", "[f([m, m'].y), n].x = [[f(m), n].x, [f(m'), n].x].y",
                  {Md, Md, X, values.members(), X}, [=](Tuple v) {
                    return N->bracket(F(M->bracket(v[0], v[1], v[2])), v[3], v[4])
                           == N->bracket(N->bracket(F(v[0]), v[3], v[4]), N->bracket(F(v[1]), v[3], v[4]), v[2]);
                  }});
  add_bilinear(laws, c, "additive-defect-bilinear", {0}, additive_phi(c));
  add_homogeneity(laws, c);
  auto d = c.d;
  const Subset derived = derived_module(*c.M, cfg);
  laws.push_back({"scalar-defect-kills-derived", "f_(r)(a) = 0 for a in [M, M]_R",
                  {c.E, derived.members()}, [d](Tuple v) { return d->scalar(v[0], v[1]) == 0; }});
  return check_laws(laws, CheckOptions::from(cfg));
}

namespace {

void add_vanishing_on_a(std::vector<Law>& laws, const Ctx& c, const Subset& a, bool with_brackets) {
  auto d = c.d;
  laws.push_back({"additive-defect-vanishes-on-A", "d_f(m, a) = d_f(a, m) = 0", {c.Md, a.members()},
                  [d](Tuple v) { return d->additive(v[0], v[1]) == 0 && d->additive(v[1], v[0]) == 0; }});
  laws.push_back({"scalar-defect-vanishes-on-A", "f_(r)(a) = 0", {c.E, a.members()},
                  [d](Tuple v) { return d->scalar(v[0], v[1]) == 0; }});
  if (with_brackets)
    laws.push_back({"bracket-defect-vanishes-on-A", "f_[x](m, a) = f_[x](a, m) = 0",
                    {c.X, c.Md, a.members()}, [d](Tuple v) {
                      return d->bracket(v[0], v[1], v[2]) == 0 && d->bracket(v[0], v[2], v[1]) == 0;
                    }});
}

}  // namespace

Verdict cp_definition(const MapTable& map, const CpModule& src, const CpModule& dst, const Config& cfg) {
  require_same(map, src, dst);
  const Ctx c(map);
  const DefectBundle& d = *c.d;
  const Subset* b = &dst.distinguished();
  const Subset& a = src.distinguished();
  std::vector<Law> laws{zero_law(c.f)};
  std::vector<Elem> fa;
  for (Elem v : a.members()) fa.push_back(map(v));
  laws.push_back(containment_law("image-of-A", "f(A) contained in B", Subset(c.N->order(), fa), b));
  laws.push_back(containment_law("additive-defect-in-B", "im_R d_f contained in B",
                                 generated_submodule(*c.N, additive_values(d), cfg), b));
  for (Elem r = 0; r < c.R->re_order(); ++r)
    laws.push_back(containment_law(indexed("scalar-defect-in-B", r), "im_R f_(r) contained in B",
                                   generated_submodule(*c.N, scalar_values(d, r), cfg), b));
  for (Elem x = 0; x < c.R->ree_order(); ++x)
    laws.push_back(containment_law(indexed("bracket-defect-in-B", x), "im_R f_[x] contained in B",
                                   generated_submodule(*c.N, bracket_values(d, x), cfg), b));
  add_bilinear(laws, c, "additive-defect-bilinear", {0}, additive_phi(c));
  add_bilinear(laws, c, "bracket-defect-bilinear", c.X, bracket_phi(c));
  add_homogeneity(laws, c);
  add_vanishing_on_a(laws, c, a, true);
  return check_laws(laws, CheckOptions::from(cfg));
}

Verdict cp_reduced(const MapTable& map, const CpModule& src, const CpModule& dst, const Config& cfg,
                   bool stop_early) {
  require_same(map, src, dst);
  const Ctx c(map);
  auto d = c.d;
  const Subset* b = &dst.distinguished();
  const std::vector<Elem>* f = c.f;
  std::vector<Law> laws{zero_law(f)};
  // Cheap containment first so enumeration rejects early.
  laws.push_back({"image-of-A", "f(A) contained in B", {src.distinguished().members()},
                  [f, b](Tuple v) { return b->contains((*f)[v[0]]); }});
  laws.push_back({"additive-defect-in-B", "d_f(m, m') in B", {c.Md, c.Md},
                  [d, b](Tuple v) { return b->contains(d->additive(v[0], v[1])); }});
  laws.push_back({"scalar-defect-in-B", "f_(r)(m) in B", {c.E, c.Md},
                  [d, b](Tuple v) { return b->contains(d->scalar(v[0], v[1])); }});
  add_vanishing_on_a(laws, c, src.distinguished(), false);
  add_bilinear(laws, c, "additive-defect-bilinear", {0}, additive_phi(c));
  add_homogeneity(laws, c);
  return check_laws(laws, CheckOptions::from(cfg, stop_early));
}

Verdict cp_factorization(const MapTable& map, const CpModule& src, const CpModule& dst, const Config& cfg) {
  require_same(map, src, dst);
  const Ctx c(map);
  auto d = c.d;
  const BhpModule* M = c.M;
  const BhpModule* N = c.N;
  const SquareRing* R = c.R;
  const Subset* b = &dst.distinguished();
  const auto& A = src.distinguished().members();
  const std::vector<Elem>* f = c.f;
  const auto& Md = c.Md;
  const auto& E = c.E;
  // Polarization of f_(r); B is abelian so the order of terms is irrelevant.
  auto polar = [d, N](Elem r, Elem m, Elem n, Elem mn) {
    return N->sub(N->sub(d->scalar(r, mn), d->scalar(r, m)), d->scalar(r, n));
  };
  const std::vector<Law> laws{
      zero_law(f),
      {"image-of-A", "f(A) contained in B", {A}, [f, b](Tuple v) { return b->contains((*f)[v[0]]); }},
      {"additive-defect-on-classes", "d_f(m + a, m' + a') = d_f(m, m')", {Md, A, Md, A},
       [d, M](Tuple v) { return d->additive(M->add(v[0], v[1]), M->add(v[2], v[3])) == d->additive(v[0], v[2]); }},
      {"additive-defect-in-B", "d_f(m, m') in B", {Md, Md},
       [d, b](Tuple v) { return b->contains(d->additive(v[0], v[1])); }},
      {"additive-defect-biadditive", "d_f(m + m', n) = d_f(m, n) + d_f(m', n), and on the right",
       {Md, Md, Md}, [d, M, N](Tuple v) {
         return d->additive(M->add(v[0], v[1]), v[2]) == N->add(d->additive(v[0], v[2]), d->additive(v[1], v[2]))
                && d->additive(v[2], M->add(v[0], v[1])) == N->add(d->additive(v[2], v[0]), d->additive(v[2], v[1]));
       }},
      {"additive-defect-balanced", "d_f(m.r, m') = d_f(m, m').r = d_f(m, m'.r)", {Md, E, Md},
       [d, M, N](Tuple v) {
         const Elem t = N->scale(d->additive(v[0], v[2]), v[1]);
         return d->additive(M->scale(v[0], v[1]), v[2]) == t && d->additive(v[0], M->scale(v[2], v[1])) == t;
       }},
      {"scalar-defect-on-classes", "f_(r)(m + a) = f_(r)(m)", {E, Md, A},
       [d, M](Tuple v) { return d->scalar(v[0], M->add(v[1], v[2])) == d->scalar(v[0], v[1]); }},
      {"scalar-defect-in-B", "f_(r)(m) in B", {E, Md},
       [d, b](Tuple v) { return b->contains(d->scalar(v[0], v[1])); }},
      {"scalar-defect-homogeneous", "f_(r)(m.s) = f_(r)(m).s^2", {E, Md, E},
       [d, M, N, R](Tuple v) {
         return d->scalar(v[0], M->scale(v[1], v[2])) == N->scale(d->scalar(v[0], v[1]), R->mul(v[2], v[2]));
       }},
      {"scalar-polarization-biadditive", "p_r(m + m', n) = p_r(m, n) + p_r(m', n)", {E, Md, Md, Md},
       [M, N, polar](Tuple v) {
         const Elem r = v[0], m = v[1], m1 = v[2], n = v[3];
         const Elem mm = M->add(m, m1);
         return polar(r, mm, n, M->add(mm, n))
                == N->add(polar(r, m, n, M->add(m, n)), polar(r, m1, n, M->add(m1, n)));
       }},
      {"scalar-polarization-bilinear", "p_r(m.t, n) = p_r(m, n).t = p_r(m, n.t)", {E, Md, E, Md},
       [M, N, polar](Tuple v) {
         const Elem r = v[0], m = v[1], t = v[2], n = v[3];
         const Elem mt = M->scale(m, t), nt = M->scale(n, t);
         const Elem base = N->scale(polar(r, m, n, M->add(m, n)), t);
         return polar(r, mt, n, M->add(mt, n)) == base && polar(r, m, nt, M->add(m, nt)) == base;
       }},
  };
  return check_laws(laws, CheckOptions::from(cfg));
}

}  // namespace quadrica::routes
