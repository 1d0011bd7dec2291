#include "quadrica/rings.hpp"

#include <string>

#include "quadrica/errors.hpp"
#include "quadrica/laws.hpp"

namespace quadrica {

bool NearRing::multiplicatively_commutative() const noexcept {
  for (Elem a = 0; a < order(); ++a)
    for (Elem b = 0; b < a; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

Verdict near_ring_verdict(const FiniteGroup& add, const std::vector<Elem>& mul, Elem one,
                          Distributivity laws) {
  const std::size_t n = add.order();
  Verdict shape;
  shape.note_checked("table-shape", "multiplication table is |R| x |R| with entries in R");
  bool ok = mul.size() == n * n && one < n;
  for (Elem v : mul) ok = ok && v < n;
  if (!ok) {
    shape.add_failure({"table-shape", {}});
    return shape;
  }
  auto m = [&](Elem a, Elem b) { return mul[a * n + b]; };
  const auto dom = iota_domain(n);
  std::vector<Law> list{
      {"mul-assoc", "(r s) t = r (s t)", {dom, dom, dom},
       [&](Tuple x) { return m(m(x[0], x[1]), x[2]) == m(x[0], m(x[1], x[2])); }},
      {"mul-unit", "1 r = r = r 1", {dom},
       [&](Tuple x) { return m(one, x[0]) == x[0] && m(x[0], one) == x[0]; }},
      {"left-distrib", "r (s + t) = r s + r t", {dom, dom, dom},
       [&](Tuple x) {
         return m(x[0], add.add(x[1], x[2])) == add.add(m(x[0], x[1]), m(x[0], x[2]));
       }},
  };
  if (laws == Distributivity::both)
    list.push_back({"right-distrib", "(r + s) t = r t + s t", {dom, dom, dom},
                    [&](Tuple x) {
                      return m(add.add(x[0], x[1]), x[2]) == add.add(m(x[0], x[2]), m(x[1], x[2]));
                    }});
  return check_laws(list);
}

NearRing build_near_ring(FiniteGroup add, std::vector<Elem> mul, Elem one, Distributivity laws) {
  const Verdict v = near_ring_verdict(add, mul, one, laws);
  if (!v.passed()) {
    const auto& w = v.failures().front();
    throw Error(ErrorKind::not_a_ring, "not a near-ring: " + v.summary(), w.tuple);
  }
  NearRing r;
  r.add_ = std::move(add);
  r.mul_ = std::move(mul);
  r.one_ = one;
  return r;
}

CommutativeRing::CommutativeRing(NearRing ring) : ring_(std::move(ring)) {
  if (!ring_.additive().commutative())
    throw Error(ErrorKind::not_a_ring, "ring addition is not commutative");
  for (Elem a = 0; a < order(); ++a)
    for (Elem b = 0; b < a; ++b)
      if (ring_.mul(a, b) != ring_.mul(b, a))
        throw Error(ErrorKind::not_a_ring, "ring multiplication is not commutative", {a, b});
  for (Elem a = 0; a < order(); ++a)
    for (Elem b = 0; b < order(); ++b)
      for (Elem c = 0; c < order(); ++c)
        if (ring_.mul(ring_.add(a, b), c) != ring_.add(ring_.mul(a, c), ring_.mul(b, c)))
          throw Error(ErrorKind::not_a_ring, "right distributivity fails", {a, b, c});
}

CommutativeRing build_commutative_ring(FiniteGroup add, std::vector<Elem> mul, Elem one) {
  return CommutativeRing(build_near_ring(std::move(add), std::move(mul), one, Distributivity::both));
}

CommutativeRing zmod(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::not_a_ring, "Z/0 is infinite");
  std::vector<Elem> mul(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) mul[a * n + b] = static_cast<Elem>((a * b) % n);
  return build_commutative_ring(cyclic_group(n), std::move(mul), static_cast<Elem>(1 % n));
}

}  // namespace quadrica
