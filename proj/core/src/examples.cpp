#include "quadrica/examples.hpp"

#include <algorithm>
#include <functional>

#include "quadrica/errors.hpp"

namespace quadrica {

const char* to_string(ExampleKind k) noexcept {
  switch (k) {
    case ExampleKind::classical: return "classical";
    case ExampleKind::rnil: return "rnil";
    case ExampleKind::lambda: return "lambda";
    case ExampleKind::tensor: return "tensor";
    case ExampleKind::sym: return "sym";
    case ExampleKind::gamma: return "gamma";
  }
  return "?";
}

std::optional<ExampleKind> parse_example_kind(std::string_view name) {
  for (ExampleKind k : {ExampleKind::classical, ExampleKind::rnil, ExampleKind::lambda, ExampleKind::tensor,
                        ExampleKind::sym, ExampleKind::gamma})
    if (name == to_string(k)) return k;
  return std::nullopt;
}

std::string example_label(const ExampleSpec& spec) {
  std::string out = to_string(spec.kind);
  if (spec.kind == ExampleKind::gamma && spec.epsilon != 0) out += "[eps=" + std::to_string(spec.epsilon) + "]";
  const std::string n = std::to_string(spec.base.order());
  // Bases other than Z/n are named by their order only.
  return out + (spec.base == zmod(spec.base.order()) ? "(Z/" + n + ")" : "(R" + n + ")");
}

Subset ideal_i2(const CommutativeRing& r) {
  const std::size_t n = r.order();
  std::vector<char> in(n, false);
  std::vector<Elem> members{0}, work;
  in[0] = true;
  auto push = [&](Elem e) {
    if (!in[e]) {
      in[e] = true;
      members.push_back(e);
      work.push_back(e);
    }
  };
  for (Elem a = 0; a < n; ++a) push(r.sub(r.mul(a, a), a));
  // Close under addition and multiplication by R.
  while (!work.empty()) {
    const Elem e = work.back();
    work.pop_back();
    for (Elem a = 0; a < n; ++a) push(r.mul(a, e));
    const std::vector<Elem> snapshot = members;
    for (Elem f : snapshot) push(r.add(e, f));
  }
  return Subset(n, std::move(members));
}

Subset doubled(const CommutativeRing& r) {
  std::vector<Elem> out;
  for (Elem a = 0; a < r.order(); ++a) out.push_back(r.add(a, a));
  return Subset(r.order(), std::move(out));
}

std::vector<Elem> valid_epsilons(const CommutativeRing& r) {
  const Subset i2 = ideal_i2(r);
  std::vector<Elem> out;
  for (Elem e = 0; e < r.order(); ++e)
    if (std::all_of(i2.members().begin(), i2.members().end(), [&](Elem v) { return r.mul(e, v) == 0; }))
      out.push_back(e);
  return out;
}

namespace {

struct Tables {
  std::size_t re = 0, ree = 0;
  std::vector<Elem> action, hopf, transfer, twist;

  Tables(std::size_t e, std::size_t x) : re(e), ree(x), action(e * e * x * e), hopf(e), transfer(x), twist(x) {}

  void fill_action(const std::function<Elem(Elem, Elem, Elem, Elem)>& f) {
    for (Elem r = 0; r < re; ++r)
      for (Elem s = 0; s < re; ++s)
        for (Elem x = 0; x < ree; ++x)
          for (Elem t = 0; t < re; ++t) action[((r * re + s) * ree + x) * re + t] = f(r, s, x, t);
  }
};

std::vector<Elem> table_of(std::size_t n, const std::function<Elem(Elem, Elem)>& op) {
  std::vector<Elem> t(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) t[a * n + b] = op(a, b);
  return t;
}

SquareRing assemble(const NearRing& re, FiniteGroup ree, Tables t, std::string label) {
  return SquareRing(SquareRingParts{re, std::move(ree), std::move(t.action), std::move(t.hopf),
                                    std::move(t.transfer), std::move(t.twist), std::move(label)});
}

/// R_e = R + R, with the epsilon-deformed addition.
NearRing pair_near_ring(const CommutativeRing& R, Elem eps) {
  const std::size_t n = R.order();
  auto fst = [n](Elem p) { return static_cast<Elem>(p / n); };
  auto snd = [n](Elem p) { return static_cast<Elem>(p % n); };
  auto enc = [n](Elem a, Elem b) { return static_cast<Elem>(a * n + b); };
  auto add = table_of(n * n, [&](Elem p, Elem q) {
    return enc(R.add(fst(p), fst(q)), R.add(R.add(snd(p), snd(q)), R.mul(eps, R.mul(fst(p), fst(q)))));
  });
  auto mul = table_of(n * n, [&](Elem p, Elem q) {
    const Elem r = fst(p), s = snd(p), r2 = fst(q), s2 = snd(q);
    return enc(R.mul(r, r2), R.add(R.mul(R.mul(r, r), s2), R.mul(s, r2)));
  });
  return build_near_ring(build_group(std::move(add), n * n), std::move(mul), enc(R.one(), 0),
                         Distributivity::left_only);
}

SquareRing build_raw(const ExampleSpec& spec) {
  const CommutativeRing& R = spec.base;
  const std::size_t n = R.order();
  const std::string label = example_label(spec);
  auto rsxt = [&R](Elem r, Elem s, Elem x, Elem t) { return R.mul(R.mul(r, s), R.mul(x, t)); };
  switch (spec.kind) {
    case ExampleKind::classical: {
      Tables t(n, 1);
      return assemble(R.near_ring(), cyclic_group(1), std::move(t), label);
    }
    case ExampleKind::rnil: {
      const Subset i2 = ideal_i2(R);
      const auto& v = i2.members();
      auto idx = [&i2](Elem e) { return static_cast<Elem>(i2.index_of(e)); };
      FiniteGroup ree = build_group(table_of(v.size(), [&](Elem a, Elem b) { return idx(R.add(v[a], v[b])); }), n);
      Tables t(n, v.size());
      t.fill_action([&](Elem r, Elem s, Elem x, Elem u) { return idx(rsxt(r, s, v[x], u)); });
      for (Elem r = 0; r < n; ++r) t.hopf[r] = idx(R.sub(R.mul(r, r), r));
      for (Elem x = 0; x < v.size(); ++x) t.twist[x] = idx(R.neg(v[x]));
      return assemble(R.near_ring(), std::move(ree), std::move(t), label);
    }
    case ExampleKind::lambda: {
      Tables t(n, n);
      t.fill_action(rsxt);
      for (Elem x = 0; x < n; ++x) t.twist[x] = R.neg(x);
      return assemble(R.near_ring(), R.near_ring().additive(), std::move(t), label);
    }
    case ExampleKind::tensor: {
      const NearRing re = pair_near_ring(R, 0);
      Tables t(n * n, n * n);
      t.fill_action([&](Elem p, Elem q, Elem x, Elem u) {
        const Elem c = R.mul(R.mul(p / n, q / n), u / n);
        return static_cast<Elem>(R.mul(c, x / n) * n + R.mul(c, x % n));
      });
      for (Elem p = 0; p < n * n; ++p) t.hopf[p] = static_cast<Elem>((p % n) * n + p % n);
      for (Elem x = 0; x < n * n; ++x) {
        t.transfer[x] = R.add(x / n, x % n);
        t.twist[x] = static_cast<Elem>((x % n) * n + x / n);
      }
      FiniteGroup ree = build_group(table_of(n * n, [&](Elem a, Elem b) {
                                      return static_cast<Elem>(R.add(a / n, b / n) * n + R.add(a % n, b % n));
                                    }),
                                    n * n);
      return assemble(re, std::move(ree), std::move(t), label);
    }
    case ExampleKind::sym:
    case ExampleKind::gamma: {
      const bool sym = spec.kind == ExampleKind::sym;
      const NearRing re = pair_near_ring(R, sym ? 0 : spec.epsilon);
      Tables t(n * n, n);
      t.fill_action([&](Elem p, Elem q, Elem x, Elem u) { return R.mul(R.mul(p / n, q / n), R.mul(x, u / n)); });
      for (Elem p = 0; p < n * n; ++p) t.hopf[p] = sym ? R.add(p % n, p % n) : p % n;
      for (Elem x = 0; x < n; ++x) {
        t.transfer[x] = sym ? x : R.add(x, x);
        t.twist[x] = x;
      }
      return assemble(re, R.near_ring().additive(), std::move(t), label);
    }
  }
  throw Error(ErrorKind::internal_inconsistency, "unknown example kind");
}

void assert_fact(bool ok, const std::string& what, const std::string& label) {
  if (!ok) throw Error(ErrorKind::internal_inconsistency, label + ": " + what);
}

}  // namespace

RingPtr build_example(const ExampleSpec& spec, const Config& cfg) {
  const std::size_t n = spec.base.order();
  if (spec.epsilon >= n || (spec.kind != ExampleKind::gamma && spec.epsilon != 0))
    throw Error(ErrorKind::invalid_epsilon, "epsilon is only meaningful for the gamma family", {spec.epsilon});
  if (spec.kind == ExampleKind::gamma) {
    const auto ok = valid_epsilons(spec.base);
    if (!std::binary_search(ok.begin(), ok.end(), spec.epsilon))
      throw Error(ErrorKind::invalid_epsilon, "epsilon does not annihilate I_2", {spec.epsilon});
  }
  const bool pairs = spec.kind == ExampleKind::tensor || spec.kind == ExampleKind::sym ||
                     spec.kind == ExampleKind::gamma;
  const std::size_t re = pairs ? n * n : n;
  if (re > cfg.cap_ring)
    throw Error(ErrorKind::cap_exceeded,
                "R_e of order " + std::to_string(re) + " exceeds the ring cap " + std::to_string(cfg.cap_ring));

  RingPtr sr = certify(build_raw(spec), cfg);
  const std::string label = example_label(spec);
  const SquareRing& R = *sr;
  if (spec.kind == ExampleKind::tensor)
    for (Elem x = 0; x < R.ree_order(); ++x)
      assert_fact(R.twist(x) == (x % n) * n + x / n, "T(x, y) = (y, x)", label);
  if (spec.kind == ExampleKind::sym || spec.kind == ExampleKind::gamma)
    for (Elem x = 0; x < R.ree_order(); ++x) assert_fact(R.twist(x) == x, "T = id", label);
  if (pairs && spec.epsilon == 0) assert_fact(R.hopf(R.two()) == 0, "H(2) = 0", label);
  return sr;
}

std::vector<CensusRow> commutativity_census(std::span<const ExampleSpec> specs, const Config& cfg) {
  std::vector<CensusRow> rows;
  for (const ExampleSpec& spec : specs) {
    CensusRow row{spec, example_label(spec), is_commutative(*build_example(spec, cfg)), std::nullopt, true};
    if (spec.kind == ExampleKind::gamma) {
      row.i2_is_2r = ideal_i2(spec.base) == doubled(spec.base);
      row.agrees = *row.i2_is_2r == row.commutative;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

ModulePtr nil2_group_module(std::size_t n, const FiniteGroup& g, const Config& cfg) {
  const CommutativeRing R = zmod(n);
  RingPtr ring = build_example({ExampleKind::rnil, R, 0}, cfg);
  const Subset i2 = ideal_i2(R);
  const std::size_t e = ring->re_order(), x_count = ring->ree_order(), m = g.order();
  // Multiplicity of the commutator for each v in I_2.
  std::vector<std::size_t> half(x_count);
  for (Elem x = 0; x < x_count; ++x) {
    const Elem v = i2.members()[x];
    if (n % 2 == 1) {
      half[x] = R.mul(v, static_cast<Elem>((n + 1) / 2));
    } else {
      half[x] = v / 2;
    }
  }
  std::vector<Elem> scal(m * e), bracket(m * m * x_count);
  for (Elem a = 0; a < m; ++a)
    for (Elem r = 0; r < e; ++r) scal[a * e + r] = g.multiple(a, r);
  for (Elem a = 0; a < m; ++a)
    for (Elem b = 0; b < m; ++b)
      for (Elem x = 0; x < x_count; ++x) bracket[(a * m + b) * x_count + x] = g.multiple(g.commutator(b, a), half[x]);
  return certify(BhpModule(BhpModuleParts{ring, g, std::move(scal), std::move(bracket),
                                          "nil2(Z/" + std::to_string(n) + ", order " + std::to_string(m) + ")"}),
                 cfg);
}

AlgebraData cyclic_factors(const CommutativeRing& base, std::span<const std::size_t> factors) {
  const std::size_t n = base.order();
  if (!(base == zmod(n)))
    throw Error(ErrorKind::precondition_unmet, "cyclic factors need the base ring Z/n");
  std::size_t total = 1;
  for (std::size_t d : factors) {
    if (d == 0 || n % d != 0)
      throw Error(ErrorKind::dimension_mismatch, "cyclic factor order must divide the ring order",
                  {static_cast<Elem>(d)});
    total *= d;
  }
  auto digits = [&](Elem a) {
    std::vector<std::size_t> out(factors.size());
    for (std::size_t i = factors.size(); i-- > 0;) {
      out[i] = a % factors[i];
      a = static_cast<Elem>(a / factors[i]);
    }
    return out;
  };
  auto encode = [&](const std::vector<std::size_t>& d) {
    std::size_t a = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) a = a * factors[i] + d[i];
    return static_cast<Elem>(a);
  };
  AlgebraData data;
  data.base = base;
  data.additive = build_group(table_of(total, [&](Elem a, Elem b) {
                                auto x = digits(a), y = digits(b);
                                for (std::size_t i = 0; i < x.size(); ++i) x[i] = (x[i] + y[i]) % factors[i];
                                return encode(x);
                              }),
                              total);
  data.action.resize(total * n);
  for (Elem a = 0; a < total; ++a)
    for (Elem r = 0; r < n; ++r) {
      auto x = digits(a);
      for (std::size_t i = 0; i < x.size(); ++i) x[i] = (x[i] * r) % factors[i];
      data.action[a * n + r] = encode(x);
    }
  data.product.assign(total * total, 0);
  return data;
}

namespace {

/// Collects the first failure of each algebra axiom.
class AlgebraCheck {
 public:
  explicit AlgebraCheck(const AlgebraData& d) : d_(d) {}

  template <class F>
  void forall2(const char* law, F ok) {
    const std::size_t m = d_.additive.order();
    for (Elem a = 0; a < m; ++a)
      for (Elem b = 0; b < m; ++b)
        if (!ok(a, b)) return fail(law, {a, b});
  }
  template <class F>
  void forall3(const char* law, F ok) {
    const std::size_t m = d_.additive.order();
    for (Elem a = 0; a < m; ++a)
      for (Elem b = 0; b < m; ++b)
        for (Elem c = 0; c < m; ++c)
          if (!ok(a, b, c)) return fail(law, {a, b, c});
  }
  template <class F>
  void forall_mr(const char* law, F ok) {
    for (Elem a = 0; a < d_.additive.order(); ++a)
      for (Elem r = 0; r < d_.base.order(); ++r)
        if (!ok(a, r)) return fail(law, {a, r});
  }
  void fail(const char* law, std::vector<Elem> w) {
    throw Error(ErrorKind::not_an_algebra, std::string("algebra axiom fails: ") + law, std::move(w));
  }

 private:
  const AlgebraData& d_;
};

void check_algebra(ExampleKind kind, const AlgebraData& d, Elem eps) {
  const std::size_t m = d.additive.order(), n = d.base.order();
  if (d.action.size() != m * n || d.product.size() != m * m ||
      d.gamma.size() != (kind == ExampleKind::gamma ? m : 0))
    throw Error(ErrorKind::dimension_mismatch, "algebra tables have the wrong size");
  const FiniteGroup& G = d.additive;
  const CommutativeRing& R = d.base;
  AlgebraCheck c(d);
  c.forall2("abelian", [&](Elem a, Elem b) { return G.add(a, b) == G.add(b, a); });
  c.forall_mr("unit", [&](Elem a, Elem) { return d.scale(a, R.one()) == a; });
  c.forall2("additive-module", [&](Elem a, Elem b) {
    for (Elem r = 0; r < n; ++r)
      if (d.scale(G.add(a, b), r) != G.add(d.scale(a, r), d.scale(b, r))) return false;
    return true;
  });
  c.forall_mr("additive-ring", [&](Elem a, Elem r) {
    for (Elem s = 0; s < n; ++s)
      if (d.scale(a, R.add(r, s)) != G.add(d.scale(a, r), d.scale(a, s)) ||
          d.scale(a, R.mul(r, s)) != d.scale(d.scale(a, r), s))
        return false;
    return true;
  });
  c.forall3("product-biadditive", [&](Elem a, Elem b, Elem e) {
    return d.mul(G.add(a, b), e) == G.add(d.mul(a, e), d.mul(b, e)) &&
           d.mul(e, G.add(a, b)) == G.add(d.mul(e, a), d.mul(e, b));
  });
  c.forall_mr("product-bilinear", [&](Elem a, Elem r) {
    for (Elem b = 0; b < m; ++b)
      if (d.mul(d.scale(a, r), b) != d.scale(d.mul(a, b), r) || d.mul(b, d.scale(a, r)) != d.scale(d.mul(b, a), r))
        return false;
    return true;
  });
  c.forall3("nilpotent-left", [&](Elem a, Elem b, Elem e) { return d.mul(d.mul(a, b), e) == 0; });
  switch (kind) {
    case ExampleKind::classical:
      c.forall2("zero-product", [&](Elem a, Elem b) { return d.mul(a, b) == 0; });
      break;
    case ExampleKind::lambda:
      c.forall2("alternating", [&](Elem a, Elem) { return d.mul(a, a) == 0; });
      break;
    case ExampleKind::tensor:
      c.forall3("nilpotent-right", [&](Elem a, Elem b, Elem e) { return d.mul(e, d.mul(a, b)) == 0; });
      break;
    case ExampleKind::sym:
      c.forall2("commutative", [&](Elem a, Elem b) { return d.mul(a, b) == d.mul(b, a); });
      break;
    case ExampleKind::gamma: {
      auto gm = [&](Elem a) { return d.gamma[a]; };
      c.forall2("polarization", [&](Elem a, Elem b) {
        return d.mul(a, b) == G.sub(G.sub(gm(G.add(a, b)), gm(a)), gm(b));
      });
      c.forall_mr("gamma-homogeneous", [&](Elem a, Elem r) { return gm(d.scale(a, r)) == d.scale(gm(a), R.mul(r, r)); });
      c.forall2("gamma-nilpotent", [&](Elem a, Elem b) {
        return d.mul(gm(a), b) == 0 && gm(gm(a)) == 0 && gm(d.mul(a, b)) == 0;
      });
      c.forall_mr("gamma-epsilon", [&](Elem a, Elem) { return d.scale(gm(a), eps) == 0; });
      break;
    }
    case ExampleKind::rnil:
      throw Error(ErrorKind::precondition_unmet, "rnil modules are groups; use nil2_group_module");
  }
}

}  // namespace

ModulePtr module_from_algebra(const ExampleSpec& spec, const AlgebraData& data, const Config& cfg) {
  if (!(spec.base == data.base)) throw Error(ErrorKind::dimension_mismatch, "algebra and spec use different rings");
  check_algebra(spec.kind, data, spec.epsilon);
  RingPtr ring = build_example(spec, cfg);
  const std::size_t n = data.base.order(), m = data.additive.order();
  const std::size_t e = ring->re_order(), x_count = ring->ree_order();
  const FiniteGroup& G = data.additive;
  std::vector<Elem> scal(m * e), bracket(m * m * x_count, 0);
  for (Elem a = 0; a < m; ++a)
    for (Elem r = 0; r < e; ++r) {
      switch (spec.kind) {
        case ExampleKind::classical:
        case ExampleKind::lambda:
          scal[a * e + r] = data.scale(a, r);
          break;
        case ExampleKind::tensor:
        case ExampleKind::sym:
          scal[a * e + r] = G.add(data.scale(a, r / n), data.scale(data.mul(a, a), r % n));
          break;
        case ExampleKind::gamma:
          scal[a * e + r] = G.add(data.scale(a, r / n), data.scale(data.gamma[a], r % n));
          break;
        case ExampleKind::rnil:
          break;
      }
    }
  for (Elem a = 0; a < m; ++a)
    for (Elem b = 0; b < m; ++b)
      for (Elem x = 0; x < x_count; ++x) {
        Elem v = 0;
        if (spec.kind == ExampleKind::tensor)
          v = G.add(data.scale(data.mul(a, b), x / n), data.scale(data.mul(b, a), x % n));
        else if (spec.kind != ExampleKind::classical)
          v = data.scale(data.mul(a, b), x);
        bracket[(a * m + b) * x_count + x] = v;
      }
  return certify(BhpModule(BhpModuleParts{ring, G, std::move(scal), std::move(bracket),
                                          "algebra over " + example_label(spec)}),
                 cfg);
}

AlgebraData algebra_from_module(const ExampleSpec& spec, const BhpModule& mod) {
  const std::size_t n = spec.base.order(), m = mod.order();
  const bool pairs = spec.kind == ExampleKind::tensor || spec.kind == ExampleKind::sym ||
                     spec.kind == ExampleKind::gamma;
  if (spec.kind == ExampleKind::rnil)
    throw Error(ErrorKind::precondition_unmet, "rnil modules are groups, not algebras");
  AlgebraData d;
  d.base = spec.base;
  d.additive = mod.group();
  d.action.resize(m * n);
  for (Elem a = 0; a < m; ++a)
    for (Elem r = 0; r < n; ++r) d.action[a * n + r] = mod.scale(a, pairs ? static_cast<Elem>(r * n) : r);
  // The unit of R_ee: 1 for R, (1, 0) for R + R.
  const Elem unit = spec.kind == ExampleKind::tensor ? static_cast<Elem>(n) : 1;
  d.product.assign(m * m, 0);
  if (spec.kind != ExampleKind::classical)
    for (Elem a = 0; a < m; ++a)
      for (Elem b = 0; b < m; ++b) d.product[a * m + b] = mod.bracket(a, b, unit);
  if (spec.kind == ExampleKind::gamma) {
    d.gamma.resize(m);
    for (Elem a = 0; a < m; ++a) d.gamma[a] = mod.scale(a, 1);
  }
  return d;
}

}  // namespace quadrica
