#include "gnorm/group.hpp"

#include <algorithm>
#include <unordered_map>

namespace gnorm {

// ---------------------------------------------------------------- perm utils

bool is_permutation(const Perm& p, int degree) {
  if (int(p.size()) != degree) return false;
  std::vector<char> seen(degree, 0);
  for (auto v : p) {
    if (v < 0 || v >= degree || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

std::string cycle_string(const Perm& p) {
  std::string out;
  std::vector<char> done(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (done[i] || p[i] == std::int32_t(i)) continue;
    out += '(';
    std::size_t j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = 1;
      if (!first) out += ' ';
      out += std::to_string(j);
      first = false;
      j = std::size_t(p[j]);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

// -------------------------------------------------------------- construction

void FiniteGroup::build_storage(int order, const std::vector<element_t>& flat) {
  order_ = order;
  narrow_ = order <= 256;
  t8_.clear();
  t16_.clear();
  if (narrow_) {
    t8_.resize(flat.size());
    for (std::size_t i = 0; i < flat.size(); ++i) t8_[i] = std::uint8_t(flat[i]);
  } else {
    t16_.resize(flat.size());
    for (std::size_t i = 0; i < flat.size(); ++i) t16_[i] = std::uint16_t(flat[i]);
  }
}

void FiniteGroup::locate_identity_and_inverses() {
  const int n = order_;
  element_t e = -1;
  for (element_t c = 0; c < n && e < 0; ++c) {
    bool ok = true;
    for (element_t j = 0; j < n && ok; ++j)
      ok = mul(c, j) == j && mul(j, c) == j;
    if (ok) e = c;
  }
  if (e < 0)
    throw group_error(errc::no_identity, "no two-sided identity element");
  identity_ = e;

  inverse_.assign(n, -1);
  for (element_t a = 0; a < n; ++a) {
    for (element_t b = 0; b < n; ++b) {
      if (mul(a, b) == e && mul(b, a) == e) {
        inverse_[a] = b;
        break;
      }
    }
    if (inverse_[a] < 0)
      throw group_error(errc::no_inverse,
                        "element " + std::to_string(a) + " has no two-sided inverse",
                        {int(a)});
  }
}

FiniteGroup FiniteGroup::unchecked(int order, std::vector<element_t> flat,
                                   std::vector<std::string> labels) {
  if (order < 1)
    throw group_error(errc::bad_parameter, "order must be positive");
  if (order > kHardOrderLimit)
    throw group_error(errc::order_cap_exceeded,
                      "order " + std::to_string(order) + " exceeds the representable limit");
  if (flat.size() != std::size_t(order) * order)
    throw group_error(errc::bad_parameter, "table size does not match order");
  FiniteGroup g;
  g.build_storage(order, flat);
  g.locate_identity_and_inverses();
  if (!labels.empty() && labels.size() != std::size_t(order))
    throw group_error(errc::bad_parameter, "label count does not match order");
  g.labels_ = std::move(labels);
  return g;
}

FiniteGroup FiniteGroup::from_flat_table(int order, std::vector<element_t> flat) {
  if (order < 1)
    throw group_error(errc::bad_parameter, "order must be positive");
  if (order > kHardOrderLimit)
    throw group_error(errc::order_cap_exceeded,
                      "order " + std::to_string(order) + " exceeds the representable limit");
  if (flat.size() != std::size_t(order) * order)
    throw group_error(errc::bad_parameter, "table size does not match order");

  // Latin square check first; it also rejects out-of-range entries.
  std::vector<char> seen(order);
  for (int i = 0; i < order; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int j = 0; j < order; ++j) {
      const element_t v = flat[std::size_t(i) * order + j];
      if (v < 0 || v >= order)
        throw group_error(errc::not_latin_square,
                          "row " + std::to_string(i) + " has out-of-range entry " +
                              std::to_string(v) + " at column " + std::to_string(j),
                          {i, j, int(v)});
      if (seen[v])
        throw group_error(errc::not_latin_square,
                          "row " + std::to_string(i) + " repeats value " + std::to_string(v),
                          {i, int(v)});
      seen[v] = 1;
    }
  }
  for (int j = 0; j < order; ++j) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int i = 0; i < order; ++i) {
      const element_t v = flat[std::size_t(i) * order + j];
      if (seen[v])
        throw group_error(errc::not_latin_square,
                          "column " + std::to_string(j) + " repeats value " + std::to_string(v),
                          {j, int(v)});
      seen[v] = 1;
    }
  }

  FiniteGroup g;
  g.build_storage(order, flat);
  g.locate_identity_and_inverses();

  for (element_t i = 0; i < order; ++i)
    for (element_t j = 0; j < order; ++j) {
      const element_t ij = g.mul(i, j);
      for (element_t k = 0; k < order; ++k)
        if (g.mul(ij, k) != g.mul(i, g.mul(j, k)))
          throw group_error(errc::not_associative,
                            "(" + std::to_string(i) + "*" + std::to_string(j) + ")*" +
                                std::to_string(k) + " != " + std::to_string(i) + "*(" +
                                std::to_string(j) + "*" + std::to_string(k) + ")",
                            {int(i), int(j), int(k)});
    }
  return g;
}

FiniteGroup FiniteGroup::from_cayley_table(int order,
                                           const std::vector<std::vector<element_t>>& table) {
  if (int(table.size()) != order)
    throw group_error(errc::bad_parameter, "row count does not match order");
  std::vector<element_t> flat;
  flat.reserve(std::size_t(order) * order);
  for (const auto& row : table) {
    if (int(row.size()) != order)
      throw group_error(errc::bad_parameter, "row length does not match order");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return from_flat_table(order, std::move(flat));
}

FiniteGroup FiniteGroup::from_permutation_generators(int degree,
                                                     const std::vector<Perm>& generators,
                                                     int order_cap) {
  if (degree < 1)
    throw group_error(errc::bad_parameter, "degree must be positive");
  if (order_cap < 1 || order_cap > kHardOrderLimit)
    throw group_error(errc::bad_parameter, "order cap out of range");
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (!is_permutation(generators[i], degree))
      throw group_error(errc::not_a_permutation,
                        "generator " + std::to_string(i) + " is not a permutation of degree " +
                            std::to_string(degree),
                        {int(i)});

  // Breadth-first closure under right multiplication by the generators.
  // In a finite group the positive words already form the subgroup, so no
  // explicit inverses are needed.
  std::vector<Perm> elems;
  std::unordered_map<Perm, element_t, PermHash> index;
  elems.push_back(identity_perm(degree));
  index.emplace(elems[0], 0);
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const Perm& s : generators) {
      Perm w = compose(elems[head], s);
      if (index.count(w)) continue;
      if (int(elems.size()) >= order_cap)
        throw group_error(errc::order_cap_exceeded,
                          "closure exceeds the order cap of " + std::to_string(order_cap));
      index.emplace(w, element_t(elems.size()));
      elems.push_back(std::move(w));
    }
  }

  const int n = int(elems.size());
  std::vector<element_t> flat(std::size_t(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      flat[std::size_t(i) * n + j] = index.at(compose(elems[i], elems[j]));

  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = cycle_string(elems[i]);
  return unchecked(n, std::move(flat), std::move(labels));
}

// ------------------------------------------------------------------- queries

element_t FiniteGroup::power(element_t x, long long k) const {
  if (k < 0) {
    x = inv(x);
    k = -k;
  }
  element_t acc = identity_;
  element_t base = x;
  while (k > 0) {
    if (k & 1) acc = mul(acc, base);
    base = mul(base, base);
    k >>= 1;
  }
  return acc;
}

std::string FiniteGroup::label(element_t x) const {
  return labels_.empty() ? std::to_string(x) : labels_[x];
}

void FiniteGroup::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != std::size_t(order_))
    throw group_error(errc::bad_parameter, "label count does not match order");
  labels_ = std::move(labels);
}

std::vector<std::vector<element_t>> FiniteGroup::table() const {
  std::vector<std::vector<element_t>> t(order_, std::vector<element_t>(order_));
  for (element_t i = 0; i < order_; ++i)
    for (element_t j = 0; j < order_; ++j) t[i][j] = mul(i, j);
  return t;
}

bool FiniteGroup::same_table(const FiniteGroup& o) const {
  if (order_ != o.order_ || identity_ != o.identity_) return false;
  for (element_t i = 0; i < order_; ++i) {
    if (inverse_[i] != o.inverse_[i]) return false;
    for (element_t j = 0; j < order_; ++j)
      if (mul(i, j) != o.mul(i, j)) return false;
  }
  return true;
}

int element_order(const FiniteGroup& g, element_t x) {
  int k = 1;
  element_t cur = x;
  while (cur != g.identity()) {
    cur = g.mul(cur, x);
    ++k;
  }
  return k;
}

SubgroupSet trivial_subgroup(const FiniteGroup& g) {
  Bitset b(g.order());
  b.set(g.identity());
  return SubgroupSet(std::move(b));
}

SubgroupSet whole_group(const FiniteGroup& g) {
  return SubgroupSet(Bitset::full(g.order()));
}

bool is_subgroup(const FiniteGroup& g, const Bitset& members) {
  if (members.universe() != g.order()) return false;
  if (!members.test(g.identity())) return false;
  const auto elems = members.to_vector();
  for (auto a : elems)
    for (auto b : elems)
      if (!members.test(g.mul(a, b))) return false;
  return true;
}

bool is_subgroup(const FiniteGroup& g, const SubgroupSet& h) {
  return is_subgroup(g, h.members());
}

bool is_normal(const FiniteGroup& g, const SubgroupSet& h) {
  const auto elems = h.elements();
  for (auto x : elems)
    for (element_t t = 0; t < g.order(); ++t)
      if (!h.contains(g.conjugate(x, t))) return false;
  return true;
}

ConjugacyClasses conjugacy_classes(const FiniteGroup& g) {
  const int n = g.order();
  ConjugacyClasses cc;
  cc.class_of.assign(n, -1);
  cc.conjugating_witness.assign(n, -1);
  for (element_t x = 0; x < n; ++x) {
    if (cc.class_of[x] >= 0) continue;
    // x is the least element of a fresh class: anything smaller in the class
    // would already have claimed it.
    const int cid = int(cc.representative.size());
    cc.representative.push_back(x);
    cc.class_of[x] = cid;
    cc.conjugating_witness[x] = g.identity();
    std::vector<element_t> members{x};
    for (element_t t = 0; t < n; ++t) {
      const element_t y = g.conjugate(x, t);
      if (cc.class_of[y] >= 0) continue;
      cc.class_of[y] = cid;
      cc.conjugating_witness[y] = t;
      members.push_back(y);
    }
    std::sort(members.begin(), members.end());
    cc.classes.push_back(std::move(members));
  }
  return cc;
}

QuotientMap quotient(const FiniteGroup& g, const SubgroupSet& kernel) {
  const int n = g.order();
  if (kernel.parent_order() != n)
    throw group_error(errc::parent_mismatch, "kernel belongs to a different group");
  if (!is_subgroup(g, kernel))
    throw group_error(errc::not_a_subgroup, "kernel is not a subgroup");

  const auto kelems = kernel.elements();
  for (auto h : kelems)
    for (element_t t = 0; t < n; ++t)
      if (!kernel.contains(g.conjugate(h, t)))
        throw group_error(errc::not_normal,
                          "conjugate of " + std::to_string(h) + " by " + std::to_string(t) +
                              " leaves the kernel",
                          {int(h), int(t)});

  QuotientMap q;
  q.kernel = kernel;
  q.coset_of.assign(n, -1);
  for (element_t x = 0; x < n; ++x) {
    if (q.coset_of[x] >= 0) continue;
    const element_t cid = element_t(q.coset_rep.size());
    q.coset_rep.push_back(x);
    for (auto h : kelems) q.coset_of[g.mul(x, h)] = cid;
  }

  const int m = int(q.coset_rep.size());
  std::vector<element_t> flat(std::size_t(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      flat[std::size_t(a) * m + b] = q.coset_of[g.mul(q.coset_rep[a], q.coset_rep[b])];

  std::vector<std::string> labels(m);
  for (int a = 0; a < m; ++a) labels[a] = "[" + g.label(q.coset_rep[a]) + "]";
  q.quotient = FiniteGroup::unchecked(m, std::move(flat), std::move(labels));
  return q;
}

SubgroupSet preimage(const QuotientMap& q, const SubgroupSet& in_quotient) {
  if (in_quotient.parent_order() != q.quotient.order())
    throw group_error(errc::parent_mismatch, "set does not belong to the quotient group");
  Bitset b(int(q.coset_of.size()));
  for (int x = 0; x < int(q.coset_of.size()); ++x)
    if (in_quotient.contains(q.coset_of[x])) b.set(x);
  return SubgroupSet(std::move(b));
}

Bitset image_set(const QuotientMap& q, const Bitset& parent_set) {
  if (parent_set.universe() != int(q.coset_of.size()))
    throw group_error(errc::parent_mismatch, "set does not belong to the parent group");
  Bitset b(q.quotient.order());
  parent_set.for_each([&](int x) { b.set(q.coset_of[x]); });
  return b;
}

Restriction restrict_to(const FiniteGroup& g, const SubgroupSet& h) {
  if (h.parent_order() != g.order())
    throw group_error(errc::parent_mismatch, "subgroup belongs to a different group");
  if (!is_subgroup(g, h))
    throw group_error(errc::not_a_subgroup, "set is not closed under the product");

  Restriction r;
  r.to_parent = h.elements();
  r.from_parent.assign(g.order(), -1);
  for (int i = 0; i < int(r.to_parent.size()); ++i) r.from_parent[r.to_parent[i]] = i;

  const int m = int(r.to_parent.size());
  std::vector<element_t> flat(std::size_t(m) * m);
  std::vector<std::string> labels(m);
  for (int a = 0; a < m; ++a) {
    labels[a] = g.label(r.to_parent[a]);
    for (int b = 0; b < m; ++b)
      flat[std::size_t(a) * m + b] = r.from_parent[g.mul(r.to_parent[a], r.to_parent[b])];
  }
  r.group = FiniteGroup::unchecked(m, std::move(flat), std::move(labels));
  return r;
}

}  // namespace gnorm
