#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "quadrica/errors.hpp"
#include "quadrica/module.hpp"

namespace quadrica {

namespace {

// Closure of `seeds` under +, the scalar action and (optionally) brackets.
// Negatives come for free: the carrier is finite.
Subset close_under(const BhpModule& m, std::span<const Elem> seeds, bool brackets) {
  const std::size_t n = m.order(), e = m.ring().re_order(), x = m.ring().ree_order();
  std::vector<bool> in(n, false);
  std::vector<Elem> members{0};
  in[0] = true;
  std::deque<Elem> queue;
  auto push = [&](Elem v) {
    if (!in[v]) {
      in[v] = true;
      members.push_back(v);
      queue.push_back(v);
    }
  };
  for (Elem s : seeds) push(s);
  while (!queue.empty()) {
    const Elem a = queue.front();
    queue.pop_front();
    for (Elem r = 0; r < e; ++r) push(m.scale(a, r));
    const std::size_t count = members.size();
    for (std::size_t i = 0; i < count; ++i) {
      const Elem b = members[i];
      push(m.add(a, b));
      push(m.add(b, a));
      if (brackets)
        for (Elem v = 0; v < x; ++v) {
          push(m.bracket(a, b, v));
          push(m.bracket(b, a, v));
        }
    }
  }
  return Subset(n, std::move(members));
}

}  // namespace

Subset generated_submodule(const BhpModule& m, std::span<const Elem> seeds, const Config& cfg) {
  Subset s = close_under(m, seeds, true);
  if (cfg.profile == Profile::debug && m.order() <= 16 && !(s == normal_form_span(m, seeds)))
    throw Error(ErrorKind::internal_inconsistency,
                "generated submodule differs from the span of e.r and [e, e'].x");
  return s;
}

Subset normal_form_span(const BhpModule& m, std::span<const Elem> seeds) {
  std::vector<Elem> gens;
  for (Elem a : seeds) {
    for (Elem r = 0; r < m.ring().re_order(); ++r) gens.push_back(m.scale(a, r));
    for (Elem b : seeds)
      for (Elem v = 0; v < m.ring().ree_order(); ++v) gens.push_back(m.bracket(a, b, v));
  }
  return subgroup_closure(m.group(), gens);
}

Subset r_centralizer(const BhpModule& m, const Subset& s) {
  std::vector<Elem> out;
  for (Elem y = 0; y < m.order(); ++y) {
    bool central = true;
    for (Elem z : s.members())
      for (Elem v = 0; v < m.ring().ree_order() && central; ++v)
        central = m.bracket(y, z, v) == 0;
    if (central) out.push_back(y);
  }
  return Subset(m.order(), std::move(out));
}

namespace {

Subset all_brackets_submodule(const BhpModule& m) {
  std::vector<Elem> seeds;
  for (Elem a = 0; a < m.order(); ++a)
    for (Elem b = 0; b < m.order(); ++b)
      for (Elem v = 0; v < m.ring().ree_order(); ++v) seeds.push_back(m.bracket(a, b, v));
  return close_under(m, seeds, true);
}

void check_center_chain(const BhpModule& m, const Subset& derived, const Subset& center) {
  const Subset commutators = derived_subgroup(m.group());
  const Subset zgroup = group_center(m.group());
  if (!commutators.is_subset_of(derived) || !derived.is_subset_of(center)
      || !center.is_subset_of(zgroup))
    throw Error(ErrorKind::internal_inconsistency,
                "expected [M,M] <= [M,M]_R <= Z_R(M) <= Z(M)");
}

}  // namespace

Subset r_center(const BhpModule& m, const Config& cfg) {
  Subset z = r_centralizer(m, Subset::full(m.order()));
  if (cfg.profile == Profile::debug) check_center_chain(m, all_brackets_submodule(m), z);
  return z;
}

Subset derived_module(const BhpModule& m, const Config& cfg) {
  Subset d = all_brackets_submodule(m);
  if (cfg.profile == Profile::debug)
    check_center_chain(m, d, r_centralizer(m, Subset::full(m.order())));
  return d;
}

bool is_submodule(const BhpModule& m, const Subset& s) {
  if (!is_subgroup(m.group(), s)) return false;
  for (Elem a : s.members()) {
    for (Elem r = 0; r < m.ring().re_order(); ++r)
      if (!s.contains(m.scale(a, r))) return false;
    for (Elem b : s.members())
      for (Elem v = 0; v < m.ring().ree_order(); ++v)
        if (!s.contains(m.bracket(a, b, v))) return false;
  }
  return true;
}

bool is_normal_submodule(const BhpModule& m, const Subset& s) {
  if (!is_submodule(m, s) || !is_normal_subgroup(m.group(), s)) return false;
  for (Elem a = 0; a < m.order(); ++a)
    for (Elem b : s.members())
      for (Elem v = 0; v < m.ring().ree_order(); ++v)
        if (!s.contains(m.bracket(a, b, v))) return false;
  return true;
}

Submodule submodule_of(const ModulePtr& m, const Subset& s, const Config& cfg) {
  if (!is_submodule(*m, s))
    throw Error(ErrorKind::precondition_unmet, "subset is not a submodule");
  const std::size_t k = s.size(), e = m->ring().re_order(), x = m->ring().ree_order();
  Submodule out;
  out.embed = s.members();
  out.index_of.assign(m->order(), Submodule::npos);
  for (Elem i = 0; i < k; ++i) out.index_of[out.embed[i]] = i;
  std::vector<Elem> add(k * k);
  BhpModuleParts p{m->ring_ptr(), {}, std::vector<Elem>(k * e), std::vector<Elem>(k * k * x),
                   "sub(" + m->label() + ")"};
  for (Elem i = 0; i < k; ++i) {
    for (Elem j = 0; j < k; ++j) {
      add[i * k + j] = out.index_of[m->add(out.embed[i], out.embed[j])];
      for (Elem v = 0; v < x; ++v)
        p.bracket[(i * k + j) * x + v] = out.index_of[m->bracket(out.embed[i], out.embed[j], v)];
    }
    for (Elem r = 0; r < e; ++r) p.scal[i * e + r] = out.index_of[m->scale(out.embed[i], r)];
  }
  p.group = build_group(std::move(add), cfg.cap_group);
  out.module = certify(BhpModule(std::move(p)), cfg);
  return out;
}

namespace {

struct Cosets {
  std::vector<Elem> proj, lift;
};

Cosets left_cosets(const FiniteGroup& g, const Subset& n) {
  const Elem none = static_cast<Elem>(g.order());
  Cosets c;
  c.proj.assign(g.order(), none);
  for (Elem a = 0; a < g.order(); ++a) {
    if (c.proj[a] != none) continue;
    const Elem cls = static_cast<Elem>(c.lift.size());
    c.lift.push_back(a);
    for (Elem b : n.members()) c.proj[g.add(a, b)] = cls;
  }
  return c;
}

[[noreturn]] void not_normal(const std::string& what, std::vector<Elem> w) {
  throw Error(ErrorKind::not_normal, "quotient: " + what, std::move(w));
}

}  // namespace

Quotient quotient_bhp(const BhpModule& m, const Subset& n, const Config& cfg) {
  if (n.parent_order() != m.order() || !is_subgroup(m.group(), n))
    not_normal("not a subgroup", {});
  for (Elem a : n.members())
    for (Elem g = 0; g < m.order(); ++g)
      if (!n.contains(m.sub(m.add(g, a), g))) not_normal("subgroup is not normal", {g, a});
  for (Elem a : n.members())
    for (Elem r = 0; r < m.ring().re_order(); ++r)
      if (!n.contains(m.scale(a, r))) not_normal("not stable under R_e", {a, r});
  for (Elem g = 0; g < m.order(); ++g)
    for (Elem a : n.members())
      for (Elem v = 0; v < m.ring().ree_order(); ++v)
        if (!n.contains(m.bracket(g, a, v)) || !n.contains(m.bracket(a, g, v)))
          not_normal("brackets with N leave N", {g, a, v});

  const Cosets c = left_cosets(m.group(), n);
  const std::size_t k = c.lift.size(), e = m.ring().re_order(), x = m.ring().ree_order();
  std::vector<Elem> add(k * k);
  BhpModuleParts p{m.ring_ptr(), {}, std::vector<Elem>(k * e), std::vector<Elem>(k * k * x),
                   "quot(" + m.label() + ")"};
  for (Elem i = 0; i < k; ++i) {
    for (Elem j = 0; j < k; ++j) {
      add[i * k + j] = c.proj[m.add(c.lift[i], c.lift[j])];
      for (Elem v = 0; v < x; ++v)
        p.bracket[(i * k + j) * x + v] = c.proj[m.bracket(c.lift[i], c.lift[j], v)];
    }
    for (Elem r = 0; r < e; ++r) p.scal[i * e + r] = c.proj[m.scale(c.lift[i], r)];
  }
  // Re-check every representative, not just the chosen lifts.
  for (Elem a = 0; a < m.order(); ++a) {
    for (Elem b = 0; b < m.order(); ++b) {
      if (c.proj[m.add(a, b)] != add[c.proj[a] * k + c.proj[b]])
        not_normal("addition not well defined", {a, b});
      for (Elem v = 0; v < x; ++v)
        if (c.proj[m.bracket(a, b, v)] != p.bracket[(c.proj[a] * k + c.proj[b]) * x + v])
          not_normal("bracket not well defined", {a, b, v});
    }
    for (Elem r = 0; r < e; ++r)
      if (c.proj[m.scale(a, r)] != p.scal[c.proj[a] * e + r])
        not_normal("scalar action not well defined", {a, r});
  }
  p.group = build_group(std::move(add), cfg.cap_group);
  return Quotient{certify(BhpModule(std::move(p)), cfg), c.proj, c.lift};
}

CpQuotient quotient_cp(const CpModule& ma, const Subset& n, const Subset& b, const Config& cfg) {
  const Subset& a = ma.distinguished();
  std::vector<Elem> meet;
  for (Elem v : n.members())
    if (a.contains(v)) meet.push_back(v);
  if (!(Subset(ma.base().order(), meet) == b))
    throw Error(ErrorKind::precondition_unmet, "quotient_cp: B must equal N and A");
  Quotient q = quotient_bhp(ma.base(), n, cfg);
  std::vector<Elem> image;
  for (Elem v : a.members()) image.push_back(q.proj[v]);
  CpModule out(q.module, Subset(q.module->order(), std::move(image)));
  return CpQuotient{certify(std::move(out), cfg), std::move(q.proj), std::move(q.lift)};
}

std::vector<Subset> admissible_intermediates(const BhpModule& m, const Config& cfg) {
  if (m.order() > cfg.cap_subgroup_enum)
    throw Error(ErrorKind::cap_exceeded, "subgroup lattice of a module of order "
                                             + std::to_string(m.order()) + " exceeds cap "
                                             + std::to_string(cfg.cap_subgroup_enum));
  const Subset low = derived_module(m, cfg);
  const Subset high = r_center(m, cfg);
  std::set<Subset> found{close_under(m, low.members(), false)};
  std::deque<Subset> frontier(found.begin(), found.end());
  while (!frontier.empty()) {
    const Subset s = frontier.front();
    frontier.pop_front();
    for (Elem z : high.members()) {
      if (s.contains(z)) continue;
      std::vector<Elem> seeds = s.members();
      seeds.push_back(z);
      Subset t = close_under(m, seeds, false);
      if (found.insert(t).second) frontier.push_back(std::move(t));
    }
  }
  std::vector<Subset> out(found.begin(), found.end());
  // Each admissible A is a CP structure on M.
  ModulePtr base = std::make_shared<const BhpModule>(m);
  for (const Subset& a : out) {
    const Verdict v = verify_cp_module(CpModule(base, a), cfg);
    if (!v.passed())
      throw Error(ErrorKind::internal_inconsistency,
                  "admissible subgroup fails the CP axioms: " + v.summary());
  }
  return out;
}

}  // namespace quadrica
