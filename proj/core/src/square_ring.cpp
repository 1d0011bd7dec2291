#include "quadrica/square_ring.hpp"

#include <string>

#include "quadrica/errors.hpp"
#include "quadrica/laws.hpp"

namespace quadrica {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::dimension_mismatch, "square ring: " + what);
}

bool all_below(const std::vector<Elem>& v, std::size_t n) {
  for (Elem e : v)
    if (e >= n) return false;
  return true;
}

}  // namespace

SquareRing::SquareRing(SquareRingParts parts) : p_(std::move(parts)) {
  const std::size_t e = p_.re.order(), x = p_.ree.order();
  require(e > 0 && x > 0, "empty carrier");
  require(p_.action.size() == e * e * x * e, "action table has wrong size");
  require(p_.hopf.size() == e, "H table has wrong size");
  require(p_.transfer.size() == x, "P table has wrong size");
  require(p_.twist.size() == x, "T table has wrong size");
  require(all_below(p_.action, x) && all_below(p_.hopf, x) && all_below(p_.twist, x),
          "R_ee value out of range");
  require(all_below(p_.transfer, e), "R_e value out of range");
}

bool SquareRing::same_tables(const SquareRing& o) const {
  return p_.re == o.p_.re && p_.ree == o.p_.ree && p_.action == o.p_.action
         && p_.hopf == o.p_.hopf && p_.transfer == o.p_.transfer && p_.twist == o.p_.twist;
}

namespace {

std::vector<Law> square_ring_laws(const SquareRing& sr) {
  const auto E = iota_domain(sr.re_order());
  const auto X = iota_domain(sr.ree_order());
  const SquareRing* R = &sr;
  const Elem one = sr.one();
  std::vector<Law> laws;
  auto law = [&](std::string id, std::string st, std::vector<std::vector<Elem>> d,
                 std::function<bool(Tuple)> f) {
    laws.push_back({std::move(id), std::move(st), std::move(d), std::move(f)});
  };

  law("Ree-abelian", "x + y = y + x", {X, X},
      [R](Tuple v) { return R->add_ee(v[0], v[1]) == R->add_ee(v[1], v[0]); });
  law("P-additive", "P(x + y) = P(x) + P(y)", {X, X}, [R](Tuple v) {
    return R->transfer(R->add_ee(v[0], v[1])) == R->add(R->transfer(v[0]), R->transfer(v[1]));
  });
  law("T-additive", "T(x + y) = T(x) + T(y)", {X, X}, [R](Tuple v) {
    return R->twist(R->add_ee(v[0], v[1])) == R->add_ee(R->twist(v[0]), R->twist(v[1]));
  });
  law("T-involution", "T(T(x)) = x", {X}, [R](Tuple v) { return R->twist(R->twist(v[0])) == v[0]; });

  law("action-additive-r", "(r + r', s).x.t = (r, s).x.t + (r', s).x.t", {E, E, E, X, E},
      [R](Tuple v) {
        return R->act(R->add(v[0], v[1]), v[2], v[3], v[4])
               == R->add_ee(R->act(v[0], v[2], v[3], v[4]), R->act(v[1], v[2], v[3], v[4]));
      });
  law("action-additive-s", "(r, s + s').x.t = (r, s).x.t + (r, s').x.t", {E, E, E, X, E},
      [R](Tuple v) {
        return R->act(v[0], R->add(v[1], v[2]), v[3], v[4])
               == R->add_ee(R->act(v[0], v[1], v[3], v[4]), R->act(v[0], v[2], v[3], v[4]));
      });
  law("action-additive-x", "(r, s).(x + y).t = (r, s).x.t + (r, s).y.t", {E, E, X, X, E},
      [R](Tuple v) {
        return R->act(v[0], v[1], R->add_ee(v[2], v[3]), v[4])
               == R->add_ee(R->act(v[0], v[1], v[2], v[4]), R->act(v[0], v[1], v[3], v[4]));
      });
  law("action-additive-t", "(r, s).x.(t + t') = (r, s).x.t + (r, s).x.t'", {E, E, X, E, E},
      [R](Tuple v) {
        return R->act(v[0], v[1], v[2], R->add(v[3], v[4]))
               == R->add_ee(R->act(v[0], v[1], v[2], v[3]), R->act(v[0], v[1], v[2], v[4]));
      });
  law("action-unit", "(1, 1).x.1 = x", {X}, [R, one](Tuple v) { return R->act(one, one, v[0], one) == v[0]; });
  law("action-left-monoid", "(r r', s s').x = (r, s).((r', s').x)", {E, E, E, E, X},
      [R](Tuple v) {
        return R->left(R->mul(v[0], v[1]), R->mul(v[2], v[3]), v[4])
               == R->left(v[0], v[2], R->left(v[1], v[3], v[4]));
      });
  law("action-right-monoid", "x.(t t') = (x.t).t'", {X, E, E}, [R](Tuple v) {
    return R->right(v[0], R->mul(v[1], v[2])) == R->right(R->right(v[0], v[1]), v[2]);
  });
  law("action-compatible", "(r, s).x.t = ((r, s).x).t = (r, s).(x.t)", {E, E, X, E},
      [R](Tuple v) {
        const Elem a = R->act(v[0], v[1], v[2], v[3]);
        return a == R->right(R->left(v[0], v[1], v[2]), v[3])
               && a == R->left(v[0], v[1], R->right(v[2], v[3]));
      });

  law("AC0", "P(H(P(x))) = P(x) + P(x)", {X}, [R](Tuple v) {
    const Elem p = R->transfer(v[0]);
    return R->transfer(R->hopf(p)) == R->add(p, p);
  });
  law("AC1", "P((r, r).x.s) = r P(x) s", {E, X, E}, [R](Tuple v) {
    return R->transfer(R->act(v[0], v[0], v[1], v[2]))
           == R->mul(R->mul(v[0], R->transfer(v[1])), v[2]);
  });
  law("AC2", "T(x) = H(P(x)) - x", {X}, [R](Tuple v) {
    return R->twist(v[0]) == R->add_ee(R->hopf(R->transfer(v[0])), R->neg_ee(v[0]));
  });
  law("AC3", "P(T(x)) = P(x)", {X}, [R](Tuple v) { return R->transfer(R->twist(v[0])) == R->transfer(v[0]); });
  law("AC4", "(P(x), r).y = (r, P(x)).y = 0 = y.P(x)", {X, E, X}, [R](Tuple v) {
    const Elem p = R->transfer(v[0]);
    return R->left(p, v[1], v[2]) == 0 && R->left(v[1], p, v[2]) == 0 && R->right(v[2], p) == 0;
  });
  law("AC5", "H(r + s) = H(r) + H(s) + (s, r).H(2)", {E, E}, [R](Tuple v) {
    const Elem rhs = R->add_ee(R->add_ee(R->hopf(v[0]), R->hopf(v[1])),
                               R->left(v[1], v[0], R->hopf(R->two())));
    return R->hopf(R->add(v[0], v[1])) == rhs;
  });
  law("AC6", "H(r s) = (r, r).H(s) + H(r).s", {E, E}, [R](Tuple v) {
    return R->hopf(R->mul(v[0], v[1]))
           == R->add_ee(R->left(v[0], v[0], R->hopf(v[1])), R->right(R->hopf(v[0]), v[1]));
  });
  law("AC7", "(r + s) t = r t + s t + P((r, s).H(t))", {E, E, E}, [R](Tuple v) {
    const Elem rhs = R->add(R->add(R->mul(v[0], v[2]), R->mul(v[1], v[2])),
                            R->transfer(R->left(v[0], v[1], R->hopf(v[2]))));
    return R->mul(R->add(v[0], v[1]), v[2]) == rhs;
  });
  law("AC8", "T((r, s).x.t) = (s, r).T(x).t", {E, E, X, E}, [R](Tuple v) {
    return R->twist(R->act(v[0], v[1], v[2], v[3])) == R->act(v[1], v[0], R->twist(v[2]), v[3]);
  });
  law("H-unit", "H(1) = 0", {}, [R, one](Tuple) { return R->hopf(one) == 0; });
  return laws;
}

}  // namespace

Verdict verify_square_ring(const SquareRing& sr, const Config& cfg) {
  const auto laws = square_ring_laws(sr);
  return check_laws(laws, CheckOptions::from(cfg));
}

bool square_ring_witness_violates(const SquareRing& sr, const Witness& w) {
  return witness_violates(square_ring_laws(sr), w);
}

RingPtr certify(SquareRing sr, const Config& cfg) {
  if (sr.re_order() > cfg.cap_ring || sr.ree_order() > cfg.cap_ring)
    throw Error(ErrorKind::cap_exceeded,
                "square ring components (" + std::to_string(sr.re_order()) + ", "
                    + std::to_string(sr.ree_order()) + ") exceed cap "
                    + std::to_string(cfg.cap_ring));
  Verdict v = verify_square_ring(sr, cfg);
  if (!v.passed()) throw AxiomViolation("square ring " + sr.label(), std::move(v));
  sr.certified_ = true;
  return std::make_shared<const SquareRing>(std::move(sr));
}

}  // namespace quadrica
