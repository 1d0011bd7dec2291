#include <string>

#include "quadrica/errors.hpp"
#include "quadrica/laws.hpp"
#include "quadrica/square_ring.hpp"

namespace quadrica {

namespace {

void require_certified(const SquareRing& sr, const char* op) {
  if (!sr.certified())
    throw Error(ErrorKind::precondition_unmet, std::string(op) + " needs a certified square ring");
}

}  // namespace

RingBar cokernel_p(const SquareRing& sr) {
  require_certified(sr, "cokernel_p");
  const std::size_t n = sr.re_order();
  std::vector<bool> in_image(n, false);
  for (Elem x = 0; x < sr.ree_order(); ++x) in_image[sr.transfer(x)] = true;
  std::vector<Elem> image;
  for (Elem r = 0; r < n; ++r)
    if (in_image[r]) image.push_back(r);

  const Elem none = static_cast<Elem>(n);
  RingBar bar;
  bar.proj.assign(n, none);
  for (Elem r = 0; r < n; ++r) {
    if (bar.proj[r] != none) continue;
    const Elem cls = static_cast<Elem>(bar.lift.size());
    bar.lift.push_back(r);
    for (Elem p : image) bar.proj[sr.add(r, p)] = cls;
  }
  const std::size_t k = bar.lift.size();
  std::vector<Elem> add(k * k), mul(k * k);
  for (Elem a = 0; a < k; ++a)
    for (Elem b = 0; b < k; ++b) {
      add[a * k + b] = bar.proj[sr.add(bar.lift[a], bar.lift[b])];
      mul[a * k + b] = bar.proj[sr.mul(bar.lift[a], bar.lift[b])];
    }
  // Every representative pair must give the same class.
  for (Elem r = 0; r < n; ++r)
    for (Elem s = 0; s < n; ++s) {
      const Elem a = bar.proj[r], b = bar.proj[s];
      if (bar.proj[sr.add(r, s)] != add[a * k + b] || bar.proj[sr.mul(r, s)] != mul[a * k + b])
        throw Error(ErrorKind::not_a_ring, "R_e / im P operations are not well defined", {r, s});
    }
  bar.ring = build_near_ring(build_group(std::move(add), n), std::move(mul), bar.proj[sr.one()],
                             Distributivity::both);
  bar.commutative = bar.ring.multiplicatively_commutative();
  return bar;
}

OperadTrunc2 operad_of(const SquareRing& sr) {
  OperadTrunc2 op;
  op.arity1 = cokernel_p(sr);
  op.arity2 = sr.ree();
  op.symmetry = sr.parts().twist;
  const auto& bar = op.arity1;
  const std::size_t k = bar.lift.size(), x = sr.ree_order();
  op.action.resize(k * k * x * k);
  for (Elem a = 0; a < k; ++a)
    for (Elem b = 0; b < k; ++b)
      for (Elem v = 0; v < x; ++v)
        for (Elem c = 0; c < k; ++c)
          op.action[((a * k + b) * x + v) * k + c] = sr.act(bar.lift[a], bar.lift[b], v, bar.lift[c]);
  const std::size_t n = sr.re_order();
  for (Elem r = 0; r < n; ++r)
    for (Elem s = 0; s < n; ++s)
      for (Elem v = 0; v < x; ++v)
        for (Elem t = 0; t < n; ++t)
          if (sr.act(r, s, v, t) != op.act(bar.proj[r], bar.proj[s], v, bar.proj[t]))
            throw Error(ErrorKind::internal_inconsistency,
                        "action on R_ee does not factor through R-bar", {r, s, v, t});
  return op;
}

Verdict commutativity_consequences(const SquareRing& sr) {
  const auto E = iota_domain(sr.re_order());
  const auto X = iota_domain(sr.ree_order());
  const SquareRing* R = &sr;
  std::vector<Law> laws{
      {"right-action-commutes", "x.(r s) = x.(s r)", {X, E, E},
       [R](Tuple v) { return R->right(v[0], R->mul(v[1], v[2])) == R->right(v[0], R->mul(v[2], v[1])); }},
      {"Re-abelian", "r + s = s + r", {E, E},
       [R](Tuple v) { return R->add(v[0], v[1]) == R->add(v[1], v[0]); }},
      {"P-scalar-square", "r P(x) = P(x) r^2", {E, X},
       [R](Tuple v) {
         const Elem p = R->transfer(v[1]);
         return R->mul(v[0], p) == R->mul(p, R->mul(v[0], v[0]));
       }},
  };
  return check_laws(laws);
}

bool is_commutative(const SquareRing& sr) {
  // The action test needs no quotient, so it runs first and also settles
  // uncertified inputs whose actions disagree.
  const Elem one = sr.one();
  for (Elem r = 0; r < sr.re_order(); ++r)
    for (Elem x = 0; x < sr.ree_order(); ++x) {
      const Elem a = sr.left(r, one, x);
      if (a != sr.left(one, r, x) || a != sr.right(x, r)) return false;
    }
  if (!cokernel_p(sr).commutative) return false;
  const Verdict v = commutativity_consequences(sr);
  if (!v.passed())
    throw Error(ErrorKind::internal_inconsistency,
                "commutative square ring violates a consequence: " + v.summary());
  return true;
}

}  // namespace quadrica
