#include "quadrica/errors.hpp"
#include "quadrica/laws.hpp"
#include "quadrica/quadratic.hpp"

namespace quadrica {

Composite compose_quadratic(const MapTable& g, const MapTable& f, const CpModule& ma, const CpModule& nb,
                            const CpModule& lc, const Config& cfg) {
  if (!f.dom->same_tables(ma.base()) || !f.cod->same_tables(nb.base()) || !g.dom->same_tables(nb.base()) ||
      !g.cod->same_tables(lc.base()))
    throw Error(ErrorKind::not_composable, "maps do not chain through the given CP modules");
  const QuadCertificate cf = is_cp_quadratic(f, ma, nb, cfg);
  if (!cf.quadratic()) throw Error(ErrorKind::certificate_invalid, "f is not CP-quadratic: " + cf.verdict.summary());
  const QuadCertificate cg = is_cp_quadratic(g, nb, lc, cfg);
  if (!cg.quadratic()) throw Error(ErrorKind::certificate_invalid, "g is not CP-quadratic: " + cg.verdict.summary());

  std::vector<Elem> values(f.values.size());
  for (std::size_t m = 0; m < values.size(); ++m) values[m] = g(f(static_cast<Elem>(m)));
  MapTable h = make_map(f.dom, g.cod, std::move(values));

  auto df = std::make_shared<const DefectBundle>(defects(f));
  auto dg = std::make_shared<const DefectBundle>(defects(g));
  auto dh = std::make_shared<const DefectBundle>(defects(h));
  const BhpModule* L = g.cod.get();
  const std::vector<Elem>* fv = &f.values;
  const std::vector<Elem>* gv = &g.values;
  const SquareRing& R = f.dom->ring();
  const auto Md = iota_domain(f.dom->order());
  const std::vector<Law> laws{
      {"composite-additive-defect", "d_{gf}(m, m') = g(d_f(m, m')) + d_g(f(m), f(m'))", {Md, Md},
       [=](Tuple v) {
         return dh->additive(v[0], v[1])
                == L->add((*gv)[df->additive(v[0], v[1])], dg->additive((*fv)[v[0]], (*fv)[v[1]]));
       }},
      {"composite-scalar-defect", "(gf)_(r)(m) = g(f_(r)(m)) + g_(r)(f(m))", {iota_domain(R.re_order()), Md},
       [=](Tuple v) {
         return dh->scalar(v[0], v[1]) == L->add((*gv)[df->scalar(v[0], v[1])], dg->scalar(v[0], (*fv)[v[1]]));
       }},
      {"composite-bracket-defect", "(gf)_[x](m, m') = g(f_[x](m, m')) + g_[x](f(m), f(m'))",
       {iota_domain(R.ree_order()), Md, Md},
       [=](Tuple v) {
         return dh->bracket(v[0], v[1], v[2])
                == L->add((*gv)[df->bracket(v[0], v[1], v[2])], dg->bracket(v[0], (*fv)[v[1]], (*fv)[v[2]]));
       }},
  };
  Verdict formulas = check_laws(laws, CheckOptions::from(cfg));
  if (!formulas.passed())
    throw Error(ErrorKind::internal_inconsistency, "composite defect formulas fail: " + formulas.summary());
  QuadCertificate cert = is_cp_quadratic(h, ma, lc, cfg);
  if (!cert.quadratic())
    throw Error(ErrorKind::internal_inconsistency, "composite is not CP-quadratic: " + cert.verdict.summary());
  return Composite{std::move(h), std::move(cert), std::move(formulas)};
}

}  // namespace quadrica
