#include "quadrica/quadratic.hpp"

namespace quadrica {

DefectBundle defects(const MapTable& f) {
  const BhpModule& M = *f.dom;
  const BhpModule& N = *f.cod;
  DefectBundle d;
  d.m_order = M.order();
  d.re_order = M.ring().re_order();
  d.ree_order = M.ring().ree_order();
  const std::size_t n = d.m_order;
  d.additive_table.resize(n * n);
  d.scalar_table.resize(d.re_order * n);
  d.bracket_table.resize(d.ree_order * n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) d.additive_table[a * n + b] = N.sub(N.sub(f(M.add(a, b)), f(b)), f(a));
  for (Elem r = 0; r < d.re_order; ++r)
    for (Elem a = 0; a < n; ++a) d.scalar_table[r * n + a] = N.sub(f(M.scale(a, r)), N.scale(f(a), r));
  for (Elem x = 0; x < d.ree_order; ++x)
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        d.bracket_table[(x * n + a) * n + b] = N.sub(f(M.bracket(a, b, x)), N.bracket(f(a), f(b), x));
  return d;
}

MapTable scalar_defect_map(const MapTable& f, Elem r) {
  const BhpModule& M = *f.dom;
  const BhpModule& N = *f.cod;
  std::vector<Elem> v(M.order());
  for (Elem a = 0; a < M.order(); ++a) v[a] = N.sub(f(M.scale(a, r)), N.scale(f(a), r));
  return MapTable{f.dom, f.cod, std::move(v)};
}

}  // namespace quadrica
