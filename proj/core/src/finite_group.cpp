#include "quadrica/finite_group.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "quadrica/errors.hpp"

namespace quadrica {

Elem FiniteGroup::multiple(Elem a, std::size_t k) const noexcept {
  Elem acc = 0;
  for (std::size_t i = 0; i < k; ++i) acc = add(acc, a);
  return acc;
}

Elem FiniteGroup::sum(std::initializer_list<Elem> terms) const noexcept {
  Elem acc = 0;
  for (Elem t : terms) acc = add(acc, t);
  return acc;
}

std::size_t FiniteGroup::element_order(Elem a) const noexcept {
  std::size_t k = 1;
  for (Elem x = a; x != 0; x = add(x, a)) ++k;
  return k;
}

namespace {

void fail_group(const std::string& what, std::vector<Elem> witness) {
  throw Error(ErrorKind::not_a_group, "not a group: " + what, std::move(witness));
}

}  // namespace

FiniteGroup build_group(std::vector<Elem> table, std::size_t cap, std::vector<Elem>* relabel) {
  std::size_t n = 0;
  while (n * n < table.size()) ++n;
  if (n == 0 || n * n != table.size()) fail_group("table is not square", {});
  if (n > cap)
    throw Error(ErrorKind::cap_exceeded,
                "group of order " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  for (std::size_t i = 0; i < table.size(); ++i)
    if (table[i] >= n)
      fail_group("entry out of range", {static_cast<Elem>(i / n), static_cast<Elem>(i % n)});

  auto at = [&](Elem a, Elem b) { return table[a * n + b]; };
  Elem e = static_cast<Elem>(n);
  for (Elem c = 0; c < n && e == n; ++c) {
    bool neutral = true;
    for (Elem a = 0; a < n && neutral; ++a) neutral = at(c, a) == a && at(a, c) == a;
    if (neutral) e = c;
  }
  if (e == n) fail_group("no neutral element", {});

  std::vector<Elem> perm(n);
  for (Elem i = 0; i < n; ++i) perm[i] = i;
  if (e != 0) {
    std::swap(perm[0], perm[e]);
    std::vector<Elem> moved(n * n);
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) moved[perm[a] * n + perm[b]] = perm[at(a, b)];
    table = std::move(moved);
  }
  if (relabel) *relabel = perm;

  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (at(at(a, b), c) != at(a, at(b, c))) fail_group("associativity", {a, b, c});

  FiniteGroup g;
  g.n_ = n;
  g.neg_.assign(n, static_cast<Elem>(n));
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b)
      if (at(a, b) == 0 && at(b, a) == 0) {
        g.neg_[a] = b;
        break;
      }
    if (g.neg_[a] == n) fail_group("missing inverse", {a});
  }
  g.add_ = std::move(table);

  g.commutative_ = true;
  for (Elem a = 0; a < n && g.commutative_; ++a)
    for (Elem b = 0; b < n; ++b)
      if (g.add(a, b) != g.add(b, a)) {
        g.commutative_ = false;
        break;
      }
  if (g.commutative_) {
    g.class_ = 1;
  } else {
    g.class_ = 2;
    for (Elem a = 0; a < n && g.class_ == 2; ++a)
      for (Elem b = 0; b < n && g.class_ == 2; ++b) {
        const Elem c = g.commutator(a, b);
        for (Elem z = 0; z < n; ++z)
          if (g.add(c, z) != g.add(z, c)) {
            g.class_ = kClassAboveTwo;
            break;
          }
      }
  }
  return g;
}

FiniteGroup cyclic_group(std::size_t n) {
  std::vector<Elem> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = static_cast<Elem>((a + b) % n);
  return build_group(std::move(t), n);
}

FiniteGroup dihedral_group(std::size_t k) {
  // r^i s^j with s r = r^{-1} s; index i + k*j.
  const std::size_t n = 2 * k;
  std::vector<Elem> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t i = a % k, j = a / k, p = b % k, q = b / k;
      const std::size_t rot = j == 0 ? (i + p) % k : (i + k - p) % k;
      t[a * n + b] = static_cast<Elem>(rot + k * ((j + q) % 2));
    }
  return build_group(std::move(t), n);
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, std::size_t cap) {
  const std::size_t m = g.order(), k = h.order(), n = m * k;
  if (n > cap)
    throw Error(ErrorKind::cap_exceeded,
                "product of order " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  std::vector<Elem> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      t[a * n + b] = static_cast<Elem>(
          g.add(static_cast<Elem>(a / k), static_cast<Elem>(b / k)) * k
          + h.add(static_cast<Elem>(a % k), static_cast<Elem>(b % k)));
  return build_group(std::move(t), cap);
}

Subset::Subset(std::size_t parent_order, std::vector<Elem> members)
    : members_(std::move(members)), mask_(parent_order, false) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (Elem e : members_) {
    if (e >= parent_order)
      throw Error(ErrorKind::dimension_mismatch, "subset member out of range", {e});
    mask_[e] = true;
  }
}

Subset Subset::full(std::size_t n) {
  std::vector<Elem> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = static_cast<Elem>(i);
  return Subset(n, std::move(m));
}

Subset Subset::zero(std::size_t n) { return Subset(n, {0}); }

bool Subset::is_subset_of(const Subset& other) const noexcept {
  return std::all_of(members_.begin(), members_.end(),
                     [&](Elem e) { return other.contains(e); });
}

std::size_t Subset::index_of(Elem e) const noexcept {
  auto it = std::lower_bound(members_.begin(), members_.end(), e);
  if (it == members_.end() || *it != e) return members_.size();
  return static_cast<std::size_t>(it - members_.begin());
}

bool Subset::operator<(const Subset& o) const {
  if (members_.size() != o.members_.size()) return members_.size() < o.members_.size();
  return members_ < o.members_;
}

Subset subgroup_closure(const FiniteGroup& g, std::span<const Elem> seeds) {
  const std::size_t n = g.order();
  std::vector<bool> in(n, false);
  std::vector<Elem> members{0};
  in[0] = true;
  std::deque<Elem> queue;
  auto push = [&](Elem e) {
    if (!in[e]) {
      in[e] = true;
      members.push_back(e);
      queue.push_back(e);
    }
  };
  for (Elem s : seeds) push(s);
  // In a finite group, closure under addition already gives a subgroup.
  while (!queue.empty()) {
    const Elem e = queue.front();
    queue.pop_front();
    const std::size_t count = members.size();
    for (std::size_t i = 0; i < count; ++i) {
      push(g.add(e, members[i]));
      push(g.add(members[i], e));
    }
  }
  return Subset(n, std::move(members));
}

bool is_subgroup(const FiniteGroup& g, const Subset& s) {
  if (s.parent_order() != g.order() || !s.contains(0)) return false;
  for (Elem a : s.members())
    for (Elem b : s.members())
      if (!s.contains(g.sub(a, b))) return false;
  return true;
}

bool is_normal_subgroup(const FiniteGroup& g, const Subset& s) {
  if (!is_subgroup(g, s)) return false;
  for (Elem a : s.members())
    for (Elem x = 0; x < g.order(); ++x)
      if (!s.contains(g.sub(g.add(x, a), x))) return false;
  return true;
}

Subset group_center(const FiniteGroup& g) {
  std::vector<Elem> z;
  for (Elem a = 0; a < g.order(); ++a) {
    bool central = true;
    for (Elem b = 0; b < g.order() && central; ++b) central = g.add(a, b) == g.add(b, a);
    if (central) z.push_back(a);
  }
  return Subset(g.order(), std::move(z));
}

Subset derived_subgroup(const FiniteGroup& g) {
  std::vector<Elem> comms;
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b) comms.push_back(g.commutator(a, b));
  return subgroup_closure(g, comms);
}

}  // namespace quadrica
