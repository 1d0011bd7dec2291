#include "quadrica/laws.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

namespace quadrica {

std::vector<Elem> iota_domain(std::size_t n) {
  std::vector<Elem> d(n);
  std::iota(d.begin(), d.end(), Elem{0});
  return d;
}

namespace {

// Odometer scan of tuples whose first coordinate index lies in [lo, hi).
void scan(const Law& law, std::size_t lo, std::size_t hi, bool keep_all,
          std::vector<std::vector<Elem>>& found) {
  const auto& doms = law.domains;
  const std::size_t k = doms.size();
  std::vector<std::size_t> idx(k, 0);
  std::vector<Elem> tuple(k);
  idx[0] = lo;
  for (std::size_t i = 1; i < k; ++i)
    if (doms[i].empty()) return;
  for (std::size_t i = 0; i < k; ++i) tuple[i] = doms[i][idx[i]];
  while (true) {
    if (!law.holds(tuple)) {
      found.push_back(tuple);
      if (!keep_all) return;
    }
    std::size_t pos = k;
    while (pos > 0) {
      --pos;
      const std::size_t limit = pos == 0 ? hi : doms[pos].size();
      if (++idx[pos] < limit) {
        tuple[pos] = doms[pos][idx[pos]];
        break;
      }
      if (pos == 0) return;
      idx[pos] = 0;
      tuple[pos] = doms[pos][0];
    }
  }
}

std::vector<std::vector<Elem>> evaluate(const Law& law, bool keep_all, unsigned jobs) {
  std::vector<std::vector<Elem>> found;
  if (law.domains.empty()) {
    if (!law.holds(Tuple{})) found.emplace_back();
    return found;
  }
  const std::size_t outer = law.domains[0].size();
  if (outer == 0) return found;
  const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(outer)));
  if (workers == 1) {
    scan(law, 0, outer, keep_all, found);
    return found;
  }
  std::vector<std::vector<std::vector<Elem>>> parts(workers);
  std::vector<std::thread> pool;
  const std::size_t chunk = (outer + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t lo = w * chunk;
    const std::size_t hi = std::min(outer, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&, w, lo, hi] { scan(law, lo, hi, keep_all, parts[w]); });
  }
  for (auto& t : pool) t.join();
  for (auto& part : parts) {
    for (auto& tuple : part) {
      found.push_back(std::move(tuple));
      if (!keep_all) return found;
    }
  }
  return found;
}

}  // namespace

Verdict check_laws(std::span<const Law> laws, const CheckOptions& opts) {
  Verdict verdict;
  const bool keep_all = opts.witnesses == WitnessMode::exhaustive;
  for (const auto& law : laws) {
    verdict.note_checked(law.id, law.statement);
    auto found = evaluate(law, keep_all, opts.jobs);
    for (auto& tuple : found) verdict.add_failure({law.id, std::move(tuple)});
    if (!found.empty() && opts.stop_at_first_failure) break;
  }
  return verdict;
}

bool witness_violates(std::span<const Law> laws, const Witness& w) {
  for (const auto& law : laws) {
    if (law.id != w.law) continue;
    if (w.tuple.size() != law.domains.size()) return false;
    for (std::size_t i = 0; i < w.tuple.size(); ++i) {
      const auto& d = law.domains[i];
      if (std::find(d.begin(), d.end(), w.tuple[i]) == d.end()) return false;
    }
    return !law.holds(w.tuple);
  }
  return false;
}

}  // namespace quadrica
