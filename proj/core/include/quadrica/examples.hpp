#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "quadrica/config.hpp"
#include "quadrica/module.hpp"
#include "quadrica/rings.hpp"
#include "quadrica/square_ring.hpp"

namespace quadrica {

/// The example families of square rings over a commutative ring R.
///  classical: R -> 0 -> R
///  rnil:      R -> I_2 -> R with H(r) = r^2 - r, P = 0
///  lambda:    R -> R -> R with H = P = 0
///  tensor:    R_e -> R + R -> R_e, H(r,s) = (s,s), P(x,y) = (0, x+y)
///  sym:       R_e -> R -> R_e, H(r,s) = 2s, P(x) = (0,x)
///  gamma:     R_e -> R -> R_e, H(r,s) = s, P(x) = (0,2x), addition of R_e
///             deformed by epsilon
/// R_e = R + R has product (r,s)(r',s') = (rr', r^2 s' + s r'); the pair
/// (r, s) is encoded r * |R| + s, and likewise for R_ee = R + R.
enum class ExampleKind { classical, rnil, lambda, tensor, sym, gamma };

const char* to_string(ExampleKind k) noexcept;
std::optional<ExampleKind> parse_example_kind(std::string_view name);

struct ExampleSpec {
  ExampleKind kind = ExampleKind::classical;
  CommutativeRing base;
  Elem epsilon = 0;  ///< gamma only; must annihilate I_2
};

/// "tensor(Z/2)", "gamma[eps=2](Z/4)"; other bases of order n print as "Rn".
std::string example_label(const ExampleSpec& spec);

/// The ideal generated by all r^2 - r.
Subset ideal_i2(const CommutativeRing& r);
/// {2r : r in R}.
Subset doubled(const CommutativeRing& r);
/// Every epsilon with epsilon * I_2 = 0, ascending.
std::vector<Elem> valid_epsilons(const CommutativeRing& r);

/// Builds and certifies the square ring. Throws InvalidEpsilon, CapExceeded,
/// or AxiomViolation if a family fails its axioms.
RingPtr build_example(const ExampleSpec& spec, const Config& cfg = {});

struct CensusRow {
  ExampleSpec spec;
  std::string label;
  bool commutative = false;
  std::optional<bool> i2_is_2r;  ///< gamma family only
  bool agrees = true;            ///< commutative == i2_is_2r when defined
};

std::vector<CensusRow> commutativity_census(std::span<const ExampleSpec> specs, const Config& cfg = {});

/// A group of class <= 2 as a module over R_Nil(Z/n): m.r is the r-fold
/// sum and [m, m'].v is the (v/2)-fold multiple of the commutator [m', m].
/// Throws AxiomViolation when the group admits no such structure.
ModulePtr nil2_group_module(std::size_t n, const FiniteGroup& g, const Config& cfg = {});

/// A finite Z/n-module with a product (and, for gamma, a divided square).
struct AlgebraData {
  CommutativeRing base;
  FiniteGroup additive;
  std::vector<Elem> action;   ///< action[m * |R| + r] = m r
  std::vector<Elem> product;  ///< product[m * |M| + n] = m * n
  std::vector<Elem> gamma;    ///< gamma[m], empty unless kind is gamma

  Elem scale(Elem m, Elem r) const noexcept { return action[m * base.order() + r]; }
  Elem mul(Elem m, Elem n) const noexcept { return product[m * additive.order() + n]; }
  bool operator==(const AlgebraData& o) const {
    return base == o.base && additive == o.additive && action == o.action && product == o.product &&
           gamma == o.gamma;
  }
};

/// Z/d1 x ... x Z/dk over Z/n (each di divides n), mixed radix with the
/// first factor most significant. Product and gamma are zero.
AlgebraData cyclic_factors(const CommutativeRing& base, std::span<const std::size_t> factors);

/// The module attached to an algebra: Lie algebras for lambda, algebras for
/// tensor, commutative algebras for sym, divided-power algebras for gamma,
/// plain modules for classical. Throws NotAnAlgebra with a witness.
ModulePtr module_from_algebra(const ExampleSpec& spec, const AlgebraData& data, const Config& cfg = {});
/// Reads the algebra back from a module over build_example(spec).
AlgebraData algebra_from_module(const ExampleSpec& spec, const BhpModule& m);

}  // namespace quadrica
