#pragma once

#include <optional>
#include <vector>

#include "quadrica/config.hpp"
#include "quadrica/module.hpp"
#include "quadrica/verdict.hpp"

namespace quadrica {

/// The three defect families of a map f : M -> N.
///   additive(m, m')   = f(m + m') - f(m') - f(m)
///   scalar(r, m)      = f(m.r) - f(m).r
///   bracket(x, m, m') = f([m, m'].x) - [f(m), f(m')].x
struct DefectBundle {
  std::size_t m_order = 0, re_order = 0, ree_order = 0;
  std::vector<Elem> additive_table;
  std::vector<Elem> scalar_table;
  std::vector<Elem> bracket_table;

  Elem additive(Elem m, Elem mp) const noexcept { return additive_table[m * m_order + mp]; }
  Elem scalar(Elem r, Elem m) const noexcept { return scalar_table[r * m_order + m]; }
  Elem bracket(Elem x, Elem m, Elem mp) const noexcept {
    return bracket_table[(x * m_order + m) * m_order + mp];
  }
};

DefectBundle defects(const MapTable& f);
/// f_(r) as a map M -> N.
MapTable scalar_defect_map(const MapTable& f, Elem r);

enum class QuadKind { bhp, cp };

/// Induced R-bar-linear maps M/A -> N/B and A -> B of a CP-quadratic map.
/// Classes are numbered by smallest representative, as in gr().
struct InducedGraded {
  std::vector<Elem> deg1;
  std::vector<Elem> deg2;
};

struct QuadCertificate {
  MapTable map;
  QuadKind kind = QuadKind::bhp;
  Verdict verdict;
  bool dual_route_checked = false;
  std::optional<InducedGraded> graded;

  bool quadratic() const noexcept { return verdict.passed(); }
};

/// Independent characterizations. Each returns the laws it evaluated.
namespace routes {

/// Relations (a)-(h) on f alone.
Verdict bhp_relations(const MapTable& f, const Config& cfg = {}, bool stop_early = false);
/// Defect images R-central in im_R f, bilinear defects, homogeneity.
Verdict bhp_definition(const MapTable& f, const Config& cfg = {});
/// Linear brackets against f(M), bilinear d_f, homogeneity, f_(r)([M]_R) = 0.
Verdict bhp_linear_brackets(const MapTable& f, const Config& cfg = {});

/// Literal CP definition with generated-submodule images and f_[x] terms.
Verdict cp_definition(const MapTable& f, const CpModule& src, const CpModule& dst,
                      const Config& cfg = {});
/// The reduced conditions without bracket defects.
Verdict cp_reduced(const MapTable& f, const CpModule& src, const CpModule& dst,
                   const Config& cfg = {}, bool stop_early = false);
/// d_f through (M/A) x (M/A) and f_(r) through the divided square of M/A.
Verdict cp_factorization(const MapTable& f, const CpModule& src, const CpModule& dst,
                         const Config& cfg = {});

}  // namespace routes

/// Decides BHP-quadraticity with the relations route; the definition route
/// runs as a differential check (always in debug, sampled in release).
/// Throws NonCommutativeRing, or InternalInconsistency if routes disagree.
QuadCertificate is_bhp_quadratic(const MapTable& f, const Config& cfg = {});
/// Decides CP-quadraticity with the reduced route, cross-checked against the
/// literal definition. On success the certificate carries Gr_1(f), Gr_2(f).
QuadCertificate is_cp_quadratic(const MapTable& f, const CpModule& src, const CpModule& dst,
                                const Config& cfg = {});

/// Pointwise check of d_{f_(r)} = f_[H(r)] + d_f.(r^2 - r) and its r = 2 forms.
/// Throws PreconditionUnmet if f fails the centrality or bilinearity conditions.
Verdict three_defects_check(const MapTable& f, const Config& cfg = {});

struct Composite {
  MapTable map;
  QuadCertificate certificate;
  Verdict formulas;  ///< defect formulas for g o f, checked pointwise
};

/// g o f for CP-quadratic f : (M,A) -> (N,B) and g : (N,B) -> (L,C).
/// Throws NotComposable or CertificateInvalid.
Composite compose_quadratic(const MapTable& g, const MapTable& f, const CpModule& ma,
                            const CpModule& nb, const CpModule& lc, const Config& cfg = {});

/// Requires a CP-quadratic f; returns the factorization verdict.
Verdict factorization_check(const MapTable& f, const CpModule& src, const CpModule& dst,
                            const Config& cfg = {});

struct Promotion {
  CpModule source;       ///< (M, [M, M]_R)
  CpModule target;       ///< (im_R f, Z_R(im_R f))
  Submodule image;       ///< im_R f inside the original codomain
  MapTable map;          ///< f with codomain restricted
  QuadCertificate certificate;
};

/// A BHP-quadratic f viewed as a CP-quadratic map.
Promotion promote_to_cp(const MapTable& f, const Config& cfg = {});
/// A CP-quadratic f is BHP-quadratic on the underlying modules.
QuadCertificate cp_implies_bhp(const MapTable& f, const CpModule& src, const CpModule& dst,
                               const Config& cfg = {});

}  // namespace quadrica
