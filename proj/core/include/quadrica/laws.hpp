#pragma once

// Exhaustive law checking over finite domains. Every verifier in the library
// is phrased as a list of laws, which keeps witnesses re-checkable.

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "quadrica/config.hpp"
#include "quadrica/verdict.hpp"

namespace quadrica {

using Tuple = std::span<const Elem>;

struct Law {
  std::string id;
  std::string statement;
  /// One candidate list per variable; the law quantifies over the product.
  std::vector<std::vector<Elem>> domains;
  std::function<bool(Tuple)> holds;
};

/// Builds the domain {0, ..., n-1}.
std::vector<Elem> iota_domain(std::size_t n);

struct CheckOptions {
  WitnessMode witnesses = WitnessMode::first;
  /// Stop the whole family after the first failing law.
  bool stop_at_first_failure = false;
  unsigned jobs = 1;

  static CheckOptions from(const Config& cfg, bool stop_early = false) {
    return CheckOptions{cfg.witnesses, stop_early, cfg.jobs};
  }
};

/// Evaluates every law over its full domain. Witnesses are reported in
/// lexicographic order of the tuple, independent of the worker count.
Verdict check_laws(std::span<const Law> laws, const CheckOptions& opts = {});

/// True when the witness tuple really violates the named law.
bool witness_violates(std::span<const Law> laws, const Witness& w);

}  // namespace quadrica
