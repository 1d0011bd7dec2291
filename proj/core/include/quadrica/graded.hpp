#pragma once

#include <vector>

#include "quadrica/module.hpp"
#include "quadrica/square_ring.hpp"

namespace quadrica {

/// An abelian group with a right action of R-bar.
struct RbarModule {
  FiniteGroup group;
  std::size_t rbar_order = 0;
  std::vector<Elem> action;  ///< action[m * rbar_order + c] = m . c

  Elem act(Elem m, Elem c) const noexcept { return action[m * rbar_order + c]; }
};

/// A graded algebra over the class-two operad, concentrated in degrees one
/// and two: Gr(M, A) = (M/A, A).
struct GradedAlgebra2 {
  OperadTrunc2 operad;
  RbarModule deg1;
  RbarModule deg2;
  /// pairing[(a * |deg1| + b) * |R_ee| + x] in deg2: the class of [m, n].x
  std::vector<Elem> pairing;
  std::vector<Elem> deg1_proj;   ///< M -> M/A
  std::vector<Elem> deg1_lift;   ///< M/A -> smallest representative
  std::vector<Elem> deg2_embed;  ///< A -> M

  Elem pair(Elem a, Elem b, Elem x) const noexcept {
    return pairing[(a * deg1.group.order() + b) * operad.arity2.order() + x];
  }
};

/// Builds Gr(M, A) and checks it exhaustively: both pieces are R-bar
/// modules and the pairing is additive, equivariant and T-symmetric.
/// Throws InternalInconsistency if the checks fail on a certified input.
GradedAlgebra2 gr(const CpModule& ma, const Config& cfg = {});
/// (M / [M, M]_R, [M, M]_R)
GradedAlgebra2 gr_gamma(const ModulePtr& m, const Config& cfg = {});
/// (M / Z_R(M), Z_R(M))
GradedAlgebra2 gr_z(const ModulePtr& m, const Config& cfg = {});

/// The laws gr() enforces, as a verdict.
Verdict graded_verdict(const GradedAlgebra2& g);

}  // namespace quadrica
