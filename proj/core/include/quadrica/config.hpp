#pragma once

#include <cstddef>
#include <cstdint>

namespace quadrica {

/// Dense element index into a finite carrier. Zero is always index 0.
using Elem = std::uint32_t;

enum class Profile { debug, release };

enum class WitnessMode {
  first,       ///< keep the first counterexample per law
  exhaustive,  ///< keep every counterexample
};

/// Knobs shared by every verifier and decider.
struct Config {
  std::size_t cap_group = 64;         ///< largest group carrier accepted
  std::size_t cap_ring = 16;          ///< largest R_e or R_ee accepted
  std::size_t cap_subgroup_enum = 16; ///< largest module for subgroup lattices
  WitnessMode witnesses = WitnessMode::first;
  Profile profile = Profile::debug;
  /// Fraction of release-mode decisions that also run the second route.
  double dual_route_rate = 0.125;
  unsigned jobs = 1;
  std::uint64_t enum_limit = 1'000'000;
};

}  // namespace quadrica
