#pragma once

// Test oracles. Each one recomputes a library result from raw tables with
// plain loops, sharing no code with the routine it checks.

#include <cstddef>
#include <vector>

#include "quadrica/quadrica.hpp"

namespace quadrica::oracle {

/// Submodule generated by the seeds, by saturation until nothing changes.
std::vector<bool> closure(const BhpModule& m, const std::vector<Elem>& seeds);

/// {m : [m, n].x = [n, m].x = 0 for all n, x}.
std::vector<bool> lie_center(const BhpModule& m);

/// The definition of an R-BHP-quadratic map (centrality in im_R f, bilinear
/// defects, homogeneity), each defect recomputed from f on the fly.
bool bhp_quadratic(const MapTable& f);

/// The definition of an R-CP-quadratic map: images in B, bilinearity,
/// homogeneity and vanishing on A.
bool cp_quadratic(const MapTable& f, const Subset& a, const Subset& b);

/// Commutator subgroup of a group given by its table.
std::vector<bool> commutator_subgroup(const FiniteGroup& g);

/// Ideal of a commutative ring generated by {r^2 - r}.
std::vector<bool> ideal_i2(const CommutativeRing& r);

/// Z/2[t] / (t^2 - c0 - c1 t) with a + b t encoded as 2a + b; (1, 1) is
/// the field of four elements and (0, 0) the dual numbers.
CommutativeRing z2_extension(bool c0, bool c1);

/// Heisenberg Lie algebra over Z/3 on (Z/3)^3: [e1, e2] = e3, e3 central.
AlgebraData heisenberg_z3();

/// span{x, x^2} in Z/2[x]/(x^3), without unit.
AlgebraData truncated_z2();

/// Every module structure over `ring` on the abelian groups of order at most
/// `max_order`, one per isomorphism class.
std::vector<ModulePtr> small_modules(const RingPtr& ring, std::size_t max_order, const Config& cfg = {});

/// Every value table M -> N, in lexicographic order (f(0) unconstrained when
/// `all` is set, else f(0) = 0).
std::vector<std::vector<Elem>> all_tables(std::size_t m, std::size_t n, bool all);

}  // namespace quadrica::oracle
