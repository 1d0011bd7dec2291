#include "quadrica/quadratic.hpp"

#include "quadrica/errors.hpp"
#include "quadrica/laws.hpp"

namespace quadrica {

namespace {

void require_commutative_ring(const MapTable& f) {
  if (!f.dom->ring().same_tables(f.cod->ring()))
    throw Error(ErrorKind::dimension_mismatch, "domain and codomain are modules over different square rings");
  if (!is_commutative(f.dom->ring()))
    throw Error(ErrorKind::non_commutative_ring, "quadratic maps need a commutative square ring");
}

/// Debug always runs the second route; release samples maps by hash.
bool run_dual_route(const MapTable& f, const Config& cfg) {
  if (cfg.profile == Profile::debug) return true;
  std::uint64_t h = 1469598103934665603ull;
  for (Elem v : f.values) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return static_cast<double>(h % 1'000'000) / 1'000'000.0 < cfg.dual_route_rate;
}

void require_agreement(const Verdict& main, const Verdict& other, const char* route) {
  if (main.passed() != other.passed())
    throw Error(ErrorKind::internal_inconsistency,
                std::string("quadratic routes disagree (") + route + "): " + main.summary() + " vs " +
                    other.summary());
}

/// Class numbering by smallest representative.
std::vector<Elem> class_index(const BhpModule& m, const Subset& a, std::size_t* count) {
  const Elem none = static_cast<Elem>(-1);
  std::vector<Elem> proj(m.order(), none);
  Elem next = 0;
  for (Elem v = 0; v < m.order(); ++v) {
    if (proj[v] != none) continue;
    for (Elem w : a.members()) proj[m.add(v, w)] = next;
    ++next;
  }
  *count = next;
  return proj;
}

InducedGraded induced_graded(const MapTable& f, const CpModule& src, const CpModule& dst) {
  std::size_t k_src = 0, k_dst = 0;
  const auto p_src = class_index(*f.dom, src.distinguished(), &k_src);
  const auto p_dst = class_index(*f.cod, dst.distinguished(), &k_dst);
  InducedGraded g;
  g.deg1.assign(k_src, 0);
  std::vector<bool> seen(k_src, false);
  for (Elem m = 0; m < f.dom->order(); ++m) {
    const Elem image = p_dst[f(m)];
    if (!seen[p_src[m]]) {
      seen[p_src[m]] = true;
      g.deg1[p_src[m]] = image;
    } else if (g.deg1[p_src[m]] != image) {
      throw Error(ErrorKind::internal_inconsistency, "Gr_1(f) is not well defined", {m});
    }
  }
  for (Elem a : src.distinguished().members())
    g.deg2.push_back(static_cast<Elem>(dst.distinguished().index_of(f(a))));
  return g;
}

}  // namespace

QuadCertificate is_bhp_quadratic(const MapTable& f, const Config& cfg) {
  require_commutative_ring(f);
  QuadCertificate cert{f, QuadKind::bhp, routes::bhp_relations(f, cfg), false, std::nullopt};
  if (run_dual_route(f, cfg)) {
    require_agreement(cert.verdict, routes::bhp_definition(f, cfg), "definition");
    cert.dual_route_checked = true;
  }
  if (cfg.profile == Profile::debug) {
    require_agreement(cert.verdict, routes::bhp_linear_brackets(f, cfg), "linear brackets");
    if (cert.quadratic()) {
      for (Elem r = 0; r < f.dom->ring().re_order(); ++r) {
        const Verdict v = routes::bhp_relations(scalar_defect_map(f, r), cfg, true);
        if (!v.passed())
          throw Error(ErrorKind::internal_inconsistency,
                      "scalar defect f_(" + std::to_string(r) + ") of a quadratic map is not quadratic");
      }
    }
  }
  return cert;
}

QuadCertificate is_cp_quadratic(const MapTable& f, const CpModule& src, const CpModule& dst,
                                const Config& cfg) {
  if (!src.certified() || !dst.certified())
    throw Error(ErrorKind::precondition_unmet, "CP modules must be certified");
  require_commutative_ring(f);
  QuadCertificate cert{f, QuadKind::cp, routes::cp_reduced(f, src, dst, cfg), false, std::nullopt};
  if (run_dual_route(f, cfg)) {
    require_agreement(cert.verdict, routes::cp_definition(f, src, dst, cfg), "definition");
    cert.dual_route_checked = true;
  }
  if (cfg.profile == Profile::debug)
    require_agreement(cert.verdict, routes::cp_factorization(f, src, dst, cfg), "factorization");
  if (cert.quadratic()) cert.graded = induced_graded(f, src, dst);
  return cert;
}

Verdict three_defects_check(const MapTable& f, const Config& cfg) {
  const Verdict pre = routes::bhp_definition(f, cfg);
  for (const Witness& w : pre.failures())
    if (w.law != "scalar-defect-homogeneous")
      throw Error(ErrorKind::precondition_unmet, "three-defects lemma needs central, bilinear defects: " + w.law,
                  w.tuple);
  const BhpModule* M = f.dom.get();
  const BhpModule* N = f.cod.get();
  const SquareRing* R = &M->ring();
  auto d = std::make_shared<const DefectBundle>(defects(f));
  const std::vector<Elem>* fv = &f.values;
  // Additive defect of f_(r), read off the scalar table.
  auto d_scalar = [d, M, N](Elem r, Elem m, Elem mp) {
    return N->sub(N->sub(d->scalar(r, M->add(m, mp)), d->scalar(r, mp)), d->scalar(r, m));
  };
  const auto Md = iota_domain(M->order());
  const Elem two = R->two();
  const std::vector<Law> laws{
      {"three-defects", "d_{f_(r)}(m, m') = f_[H(r)](m, m') + d_f(m, m').(r^2 - r)",
       {iota_domain(R->re_order()), Md, Md},
       [=](Tuple v) {
         const Elem r = v[0], m = v[1], mp = v[2];
         const Elem rhs = N->add(d->bracket(R->hopf(r), m, mp), N->scale(d->additive(m, mp), R->sub(R->mul(r, r), r)));
         return d_scalar(r, m, mp) == rhs;
       }},
      {"two-specialization", "d_{f_(2)}(m, m') = d_f(m, m') + d_f(m', m)", {Md, Md},
       [=](Tuple v) { return d_scalar(two, v[0], v[1]) == N->add(d->additive(v[0], v[1]), d->additive(v[1], v[0])); }},
      {"two-reduction", "d_f(m', m) - d_f(m, m') = f([m', m]) - [f(m'), f(m)]", {Md, Md},
       [=](Tuple v) {
         const Elem m = v[0], mp = v[1];
         const Elem lhs = N->sub(d->additive(mp, m), d->additive(m, mp));
         const Elem rhs = N->sub((*fv)[M->group().commutator(mp, m)], N->group().commutator((*fv)[mp], (*fv)[m]));
         return lhs == rhs;
       }},
  };
  return check_laws(laws, CheckOptions::from(cfg));
}

Verdict factorization_check(const MapTable& f, const CpModule& src, const CpModule& dst, const Config& cfg) {
  if (!is_cp_quadratic(f, src, dst, cfg).quadratic())
    throw Error(ErrorKind::precondition_unmet, "factorization needs a CP-quadratic map");
  return routes::cp_factorization(f, src, dst, cfg);
}

Promotion promote_to_cp(const MapTable& f, const Config& cfg) {
  if (!is_bhp_quadratic(f, cfg).quadratic())
    throw Error(ErrorKind::precondition_unmet, "promotion needs a BHP-quadratic map");
  CpModule source = certify(CpModule(f.dom, derived_module(*f.dom, cfg)), cfg);
  Submodule image = submodule_of(f.cod, generated_submodule(*f.cod, f.values, cfg), cfg);
  CpModule target = certify(CpModule(image.module, r_center(*image.module, cfg)), cfg);
  std::vector<Elem> values(f.values.size());
  for (std::size_t m = 0; m < values.size(); ++m) values[m] = image.index_of[f.values[m]];
  MapTable restricted = make_map(f.dom, image.module, std::move(values));
  QuadCertificate cert = is_cp_quadratic(restricted, source, target, cfg);
  if (!cert.quadratic())
    throw Error(ErrorKind::internal_inconsistency, "promoted map is not CP-quadratic: " + cert.verdict.summary());
  return Promotion{std::move(source), std::move(target), std::move(image), std::move(restricted), std::move(cert)};
}

QuadCertificate cp_implies_bhp(const MapTable& f, const CpModule& src, const CpModule& dst, const Config& cfg) {
  if (!is_cp_quadratic(f, src, dst, cfg).quadratic())
    throw Error(ErrorKind::precondition_unmet, "map is not CP-quadratic");
  QuadCertificate cert = is_bhp_quadratic(f, cfg);
  if (!cert.quadratic())
    throw Error(ErrorKind::internal_inconsistency, "CP-quadratic map fails BHP: " + cert.verdict.summary());
  return cert;
}

}  // namespace quadrica
