#include "quadrica/hom.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <thread>

#include "quadrica/errors.hpp"
#include "quadrica/laws.hpp"

namespace quadrica {

std::uint64_t enumeration_bound(const CpModule& src, const CpModule& dst) {
  const std::uint64_t base = dst.base().order();
  std::uint64_t bound = 1;
  for (std::size_t i = 1; i < src.base().order(); ++i) {
    if (base != 0 && bound > std::numeric_limits<std::uint64_t>::max() / base)
      return std::numeric_limits<std::uint64_t>::max();
    bound *= base;
  }
  return bound;
}

namespace {

// Constraints on a partial table, each filed under the largest element index
// it reads so it fires as soon as that value is assigned.
struct PairCheck {
  Elem m, mp, sum;
  bool touches_a;
};
struct ScalarCheck {
  Elem m, r, image;
  bool in_a;
};
struct TripleCheck {
  Elem m, m1, m2, m01, m12, m02, m012;
};

class Enumerator {
 public:
  Enumerator(const CpModule& src, const CpModule& dst, const Config& cfg)
      : src_(src), dst_(dst), M_(src.base()), N_(dst.base()), B_(dst.distinguished()), leaf_cfg_(cfg) {
    leaf_cfg_.jobs = 1;
    const std::size_t n = M_.order();
    const Subset& A = src.distinguished();
    in_a_.assign(n, false);
    for (Elem a : A.members()) in_a_[a] = true;
    pairs_.resize(n);
    scalars_.resize(n);
    triples_.resize(n);
    for (Elem m = 0; m < n; ++m)
      for (Elem mp = 0; mp < n; ++mp) {
        const Elem s = M_.add(m, mp);
        pairs_[std::max({m, mp, s})].push_back({m, mp, s, in_a_[m] || in_a_[mp]});
        for (Elem m2 = 0; m2 < n; ++m2) {
          TripleCheck t{m, mp, m2, s, M_.add(mp, m2), M_.add(m, m2), M_.add(s, m2)};
          triples_[std::max({t.m, t.m1, t.m2, t.m01, t.m12, t.m02, t.m012})].push_back(t);
        }
      }
    for (Elem m = 0; m < n; ++m)
      for (Elem r = 0; r < M_.ring().re_order(); ++r) {
        const Elem t = M_.scale(m, r);
        scalars_[std::max(m, t)].push_back({m, r, t, static_cast<bool>(in_a_[m])});
      }
  }

  std::vector<MapTable> run(unsigned jobs) {
    const std::size_t n = M_.order();
    if (n == 1) {
      std::vector<Elem> values{0};
      std::vector<MapTable> out;
      leaf(values, out);
      return out;
    }
    const std::size_t branches = N_.order();
    std::vector<std::vector<MapTable>> per_branch(branches);
    auto work = [&](std::size_t first, std::size_t stride) {
      std::vector<Elem> values(n, 0);
      for (std::size_t v = first; v < branches; v += stride) {
        values[1] = static_cast<Elem>(v);
        if (consistent(values, 1)) descend(values, 2, per_branch[v]);
      }
    };
    const std::size_t workers = std::clamp<std::size_t>(jobs, 1, branches);
    if (workers == 1) {
      work(0, 1);
    } else {
      std::vector<std::thread> pool;
      for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
      for (auto& t : pool) t.join();
    }
    std::vector<MapTable> out;
    for (auto& b : per_branch)
      for (auto& f : b) out.push_back(std::move(f));
    return out;
  }

 private:
  bool consistent(const std::vector<Elem>& f, Elem k) const {
    if (in_a_[k] && !B_.contains(f[k])) return false;
    for (const PairCheck& p : pairs_[k]) {
      const Elem d = N_.sub(N_.sub(f[p.sum], f[p.mp]), f[p.m]);
      if (p.touches_a ? d != 0 : !B_.contains(d)) return false;
    }
    for (const ScalarCheck& s : scalars_[k]) {
      const Elem d = N_.sub(f[s.image], N_.scale(f[s.m], s.r));
      if (s.in_a ? d != 0 : !B_.contains(d)) return false;
    }
    const FiniteGroup& G = N_.group();
    for (const TripleCheck& t : triples_[k]) {
      const Elem lhs = G.sum({f[t.m012], f[t.m], f[t.m1], f[t.m2]});
      const Elem rhs = G.sum({f[t.m01], f[t.m12], f[t.m02], G.neg(G.commutator(f[t.m1], f[t.m02]))});
      if (lhs != rhs) return false;
    }
    return true;
  }

  void descend(std::vector<Elem>& f, Elem k, std::vector<MapTable>& out) const {
    if (k == f.size()) {
      leaf(f, out);
      return;
    }
    for (Elem v = 0; v < N_.order(); ++v) {
      f[k] = v;
      if (consistent(f, k)) descend(f, k + 1, out);
    }
    f[k] = 0;
  }

  void leaf(const std::vector<Elem>& f, std::vector<MapTable>& out) const {
    MapTable map{src_.base_ptr(), dst_.base_ptr(), f};
    if (is_cp_quadratic(map, src_, dst_, leaf_cfg_).quadratic()) out.push_back(std::move(map));
  }

  const CpModule& src_;
  const CpModule& dst_;
  const BhpModule& M_;
  const BhpModule& N_;
  const Subset& B_;
  Config leaf_cfg_;
  std::vector<char> in_a_;
  std::vector<std::vector<PairCheck>> pairs_;
  std::vector<std::vector<ScalarCheck>> scalars_;
  std::vector<std::vector<TripleCheck>> triples_;
};

std::string endpoints_label(const CpModule& src, const CpModule& dst) {
  return "Hom(" + src.base().label() + ", " + dst.base().label() + ")";
}

}  // namespace

std::vector<MapTable> enumerate_cp_quadratic(const CpModule& src, const CpModule& dst, std::uint64_t limit,
                                             const Config& cfg) {
  if (!src.certified() || !dst.certified())
    throw Error(ErrorKind::precondition_unmet, "enumeration needs certified CP modules");
  const std::uint64_t bound = enumeration_bound(src, dst);
  if (bound > limit) {
    std::ostringstream msg;
    msg << "search space " << bound << " exceeds limit " << limit;
    throw Error(ErrorKind::search_space_too_large, msg.str());
  }
  if (!src.base().ring().same_tables(dst.base().ring()))
    throw Error(ErrorKind::dimension_mismatch, "CP modules over different square rings");
  if (!is_commutative(src.base().ring()))
    throw Error(ErrorKind::non_commutative_ring, "quadratic maps need a commutative square ring");
  return Enumerator(src, dst, cfg).run(cfg.jobs);
}

Elem HomModule::index_of(const std::vector<Elem>& values) const {
  auto it = std::lower_bound(maps.begin(), maps.end(), values,
                             [](const MapTable& f, const std::vector<Elem>& v) { return f.values < v; });
  if (it == maps.end() || it->values != values) return npos;
  return static_cast<Elem>(it - maps.begin());
}

HomModule hom_module(const CpModule& src, const CpModule& dst, const Config& cfg) {
  HomModule hom;
  hom.maps = enumerate_cp_quadratic(src, dst, cfg.enum_limit, cfg);
  const BhpModule& M = src.base();
  const BhpModule& N = dst.base();
  const SquareRing& R = M.ring();
  const std::size_t k = hom.maps.size(), m = M.order(), e = R.re_order(), x_count = R.ree_order();

  auto lookup = [&](const std::vector<Elem>& v, std::vector<Elem> witness, const char* op) {
    const Elem i = hom.index_of(v);
    if (i == HomModule::npos)
      throw Error(ErrorKind::hom_not_closed, std::string("pointwise ") + op + " leaves the quadratic maps",
                  std::move(witness));
    return i;
  };

  std::vector<Elem> add(k * k), scal(k * e), bracket(k * k * x_count);
  std::vector<Elem> v(m);
  for (Elem i = 0; i < k; ++i)
    for (Elem j = 0; j < k; ++j) {
      for (Elem a = 0; a < m; ++a) v[a] = N.add(hom.maps[i](a), hom.maps[j](a));
      add[i * k + j] = lookup(v, {i, j}, "sum");
      for (Elem x = 0; x < x_count; ++x) {
        for (Elem a = 0; a < m; ++a) v[a] = N.bracket(hom.maps[i](a), hom.maps[j](a), x);
        bracket[(i * k + j) * x_count + x] = lookup(v, {i, j, x}, "bracket");
      }
    }
  for (Elem i = 0; i < k; ++i)
    for (Elem r = 0; r < e; ++r) {
      for (Elem a = 0; a < m; ++a) v[a] = N.scale(hom.maps[i](a), r);
      scal[i * e + r] = lookup(v, {i, r}, "scalar action");
    }

  std::vector<Elem> dist;
  for (Elem i = 0; i < k; ++i) {
    const auto& f = hom.maps[i].values;
    const bool into_b = std::all_of(f.begin(), f.end(), [&](Elem y) { return dst.distinguished().contains(y); });
    const bool kills_a = std::all_of(src.distinguished().members().begin(), src.distinguished().members().end(),
                                     [&](Elem a) { return f[a] == 0; });
    if (into_b && kills_a) dist.push_back(i);
  }

  BhpModuleParts parts{M.ring_ptr(), build_group(std::move(add), cfg.cap_group), std::move(scal),
                       std::move(bracket), endpoints_label(src, dst)};
  ModulePtr base = certify(BhpModule(std::move(parts)), cfg);
  hom.module = certify(CpModule(base, Subset(k, std::move(dist))), cfg);
  return hom;
}

namespace {

void require_quadratic(const MapTable& f, const CpModule& s, const CpModule& t, const Config& cfg, const char* name) {
  if (!s.base().same_tables(*f.dom) || !t.base().same_tables(*f.cod))
    throw Error(ErrorKind::not_composable, std::string(name) + " does not match the given CP modules");
  const QuadCertificate c = is_cp_quadratic(f, s, t, cfg);
  if (!c.quadratic())
    throw Error(ErrorKind::certificate_invalid, std::string(name) + " is not CP-quadratic: " + c.verdict.summary());
}

Elem composite_index(const HomModule& to, const MapTable& outer, const MapTable& inner) {
  std::vector<Elem> v(inner.values.size());
  for (std::size_t a = 0; a < v.size(); ++a) v[a] = outer(inner(static_cast<Elem>(a)));
  const Elem i = to.index_of(v);
  if (i == HomModule::npos)
    throw Error(ErrorKind::internal_inconsistency, "composite of CP-quadratic maps is missing from the hom module");
  return i;
}

}  // namespace

InducedMap pullback(const MapTable& f, const CpModule& ma, const CpModule& nb, const CpModule& lc,
                    const Config& cfg) {
  require_quadratic(f, ma, nb, cfg, "f");
  InducedMap out{hom_module(nb, lc, cfg), hom_module(ma, lc, cfg), {}, {}};
  std::vector<Elem> table;
  for (const MapTable& h : out.from.maps) table.push_back(composite_index(out.to, h, f));
  out.table = MapTable{out.from.module.base_ptr(), out.to.module.base_ptr(), std::move(table)};
  out.verdict = cp_linearity_verdict(out.table, out.from.module, out.to.module, cfg);
  return out;
}

InducedMap pushforward(const MapTable& g, const CpModule& ma, const CpModule& nb, const CpModule& lc,
                       const Config& cfg) {
  require_quadratic(g, nb, lc, cfg, "g");
  InducedMap out{hom_module(ma, nb, cfg), hom_module(ma, lc, cfg), {}, {}};
  std::vector<Elem> table;
  for (const MapTable& h : out.from.maps) table.push_back(composite_index(out.to, g, h));
  out.table = MapTable{out.from.module.base_ptr(), out.to.module.base_ptr(), std::move(table)};
  out.verdict = is_cp_quadratic(out.table, out.from.module, out.to.module, cfg).verdict;

  const BhpModule* from = out.from.module.base_ptr().get();
  const BhpModule* to = out.to.module.base_ptr().get();
  const HomModule* to_hom = &out.to;
  const HomModule* from_hom = &out.from;
  const std::vector<Elem>* gs = &out.table.values;
  auto dg = std::make_shared<const DefectBundle>(defects(g));
  const std::vector<Law> laws{
      {"pushforward-scalar-defect", "(g_*)_(r)(h)(m) = g_(r)(h(m))",
       {iota_domain(ma.base().ring().re_order()), iota_domain(from->order()), iota_domain(ma.base().order())},
       [=](Tuple v) {
         const Elem r = v[0], h = v[1], m = v[2];
         const Elem defect = to->sub((*gs)[from->scale(h, r)], to->scale((*gs)[h], r));
         return to_hom->maps[defect](m) == dg->scalar(r, from_hom->maps[h](m));
       }},
  };
  out.verdict.merge(check_laws(laws, CheckOptions::from(cfg)));
  return out;
}

}  // namespace quadrica
