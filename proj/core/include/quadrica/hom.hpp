#pragma once

#include <cstdint>
#include <vector>

#include "quadrica/config.hpp"
#include "quadrica/module.hpp"
#include "quadrica/quadratic.hpp"

namespace quadrica {

/// |N|^(|M|-1), saturated at UINT64_MAX.
std::uint64_t enumeration_bound(const CpModule& src, const CpModule& dst);

/// Every CP-quadratic map (M,A) -> (N,B), in lexicographic order of the
/// value table. Partial tables are pruned on f(A) in B, the defect
/// conditions and relation (d). Throws SearchSpaceTooLarge above limit.
std::vector<MapTable> enumerate_cp_quadratic(const CpModule& src, const CpModule& dst,
                                             std::uint64_t limit, const Config& cfg = {});

/// The CP module of CP-quadratic maps with pointwise operations. Its
/// distinguished subgroup holds the maps with values in B killing A.
struct HomModule {
  CpModule module;
  std::vector<MapTable> maps;  ///< element i of the carrier is maps[i]

  /// Carrier index of a value table, or npos.
  Elem index_of(const std::vector<Elem>& values) const;
  static constexpr Elem npos = static_cast<Elem>(-1);
};

/// Throws SearchSpaceTooLarge (via cfg.enum_limit) or HomNotClosed.
HomModule hom_module(const CpModule& src, const CpModule& dst, const Config& cfg = {});

struct InducedMap {
  HomModule from;
  HomModule to;
  MapTable table;   ///< between the carriers of from and to
  Verdict verdict;  ///< CP-linearity for f*, CP-quadraticity plus defect cross-check for g_*
};

/// f* : Quad(N, L) -> Quad(M, L), h |-> h o f, for CP-quadratic f : (M,A) -> (N,B).
InducedMap pullback(const MapTable& f, const CpModule& ma, const CpModule& nb, const CpModule& lc,
                    const Config& cfg = {});
/// g_* : Quad(M, N) -> Quad(M, L), h |-> g o h, for CP-quadratic g : (N,B) -> (L,C).
InducedMap pushforward(const MapTable& g, const CpModule& ma, const CpModule& nb, const CpModule& lc,
                       const Config& cfg = {});

}  // namespace quadrica
