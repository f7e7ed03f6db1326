#include "gnorm/subgroup.hpp"

#include <algorithm>
#include <unordered_set>

namespace gnorm {

namespace detail {

Bitset conjugate_set(const FiniteGroup& g, const Bitset& s, element_t t) {
  Bitset out(s.universe());
  s.for_each([&](int x) { out.set(g.conjugate(x, t)); });
  return out;
}

Bitset normalizer_members(const FiniteGroup& g, const std::vector<element_t>& h_elems,
                          const Bitset& h) {
  // Conjugation by t is injective, so t^-1 H t subset of H already means
  // equality for finite H.
  Bitset out(g.order());
  for (element_t t = 0; t < g.order(); ++t) {
    bool ok = true;
    for (auto x : h_elems)
      if (!h.test(g.conjugate(x, t))) {
        ok = false;
        break;
      }
    if (ok) out.set(t);
  }
  return out;
}

}  // namespace detail

SubgroupSet centralizer(const FiniteGroup& g, element_t x) {
  if (x < 0 || x >= g.order())
    throw group_error(errc::bad_parameter, "element index out of range");
  Bitset b(g.order());
  for (element_t y = 0; y < g.order(); ++y)
    if (g.mul(x, y) == g.mul(y, x)) b.set(y);
  return SubgroupSet(std::move(b));
}

SubgroupSet center(const FiniteGroup& g) {
  Bitset b(g.order());
  for (element_t x = 0; x < g.order(); ++x) {
    bool central = true;
    for (element_t y = 0; y < g.order() && central; ++y)
      central = g.mul(x, y) == g.mul(y, x);
    if (central) b.set(x);
  }
  return SubgroupSet(std::move(b));
}

SubgroupSet normalizer(const FiniteGroup& g, const SubgroupSet& h) {
  if (h.parent_order() != g.order())
    throw group_error(errc::parent_mismatch, "subgroup belongs to a different group");
  if (!is_subgroup(g, h))
    throw group_error(errc::not_a_subgroup, "normalizer argument is not a subgroup");
  return SubgroupSet(detail::normalizer_members(g, h.elements(), h.members()));
}

SubgroupSet generated(const FiniteGroup& g, const std::vector<element_t>& seeds) {
  for (auto s : seeds)
    if (s < 0 || s >= g.order())
      throw group_error(errc::bad_parameter, "seed element out of range");
  Bitset in(g.order());
  std::vector<element_t> worklist;
  auto add = [&](element_t x) {
    if (!in.test(x)) {
      in.set(x);
      worklist.push_back(x);
    }
  };
  add(g.identity());
  for (auto s : seeds) add(s);
  // Right multiplication by the seeds reaches every positive word, and in a
  // finite group the positive words already include all inverses.
  for (std::size_t head = 0; head < worklist.size(); ++head)
    for (auto s : seeds) add(g.mul(worklist[head], s));
  return SubgroupSet(std::move(in));
}

SubgroupSet generated(const FiniteGroup& g, const Bitset& seeds) {
  return generated(g, seeds.to_vector());
}

SubgroupSet intersect(const SubgroupSet& a, const SubgroupSet& b) {
  if (a.parent_order() != b.parent_order())
    throw group_error(errc::parent_mismatch, "operands belong to different groups");
  return SubgroupSet(a.members() & b.members());
}

SubgroupSet normal_closure(const FiniteGroup& g, const SubgroupSet& h,
                           const SubgroupSet& ambient) {
  if (h.parent_order() != g.order() || ambient.parent_order() != g.order())
    throw group_error(errc::parent_mismatch, "operands belong to a different group");
  if (!is_subgroup(g, h))
    throw group_error(errc::not_a_subgroup, "h is not a subgroup");
  if (!is_subgroup(g, ambient))
    throw group_error(errc::not_a_subgroup, "ambient is not a subgroup");
  if (!h.subset_of(ambient))
    throw group_error(errc::not_contained, "h is not contained in ambient");

  const auto amb = ambient.elements();
  SubgroupSet k = h;
  for (;;) {
    Bitset extra(g.order());
    bool grew = false;
    for (auto x : k.elements())
      for (auto t : amb) {
        const element_t y = g.conjugate(x, t);
        if (!k.contains(y) && !extra.test(y)) {
          extra.set(y);
          grew = true;
        }
      }
    if (!grew) return k;
    Bitset seeds = k.members();
    seeds |= extra;
    k = generated(g, seeds);
  }
}

SubnormalVerdict is_subnormal(const FiniteGroup& g, const SubgroupSet& h) {
  if (h.parent_order() != g.order())
    throw group_error(errc::parent_mismatch, "subgroup belongs to a different group");
  if (!is_subgroup(g, h))
    throw group_error(errc::not_a_subgroup, "argument is not a subgroup");

  SubnormalVerdict v;
  std::vector<SubgroupSet> chain{whole_group(g)};
  for (;;) {
    const SubgroupSet& cur = chain.back();
    if (cur == h) {
      v.is_subnormal = true;
      v.defect = int(chain.size()) - 1;
      v.chain = std::move(chain);
      return v;
    }
    SubgroupSet next = normal_closure(g, h, cur);
    if (next == cur) return v;  // descent stalled strictly above h
    chain.push_back(std::move(next));
  }
}

int distinct_centralizer_count(const FiniteGroup& g) {
  std::unordered_set<Bitset, BitsetHash> seen;
  for (element_t x = 0; x < g.order(); ++x)
    seen.insert(centralizer(g, x).members());
  return int(seen.size());
}

std::vector<SubgroupSet> all_subgroups(const FiniteGroup& g) {
  std::vector<SubgroupSet> found{trivial_subgroup(g)};
  std::unordered_set<Bitset, BitsetHash> seen{found[0].members()};
  for (std::size_t head = 0; head < found.size(); ++head) {
    const SubgroupSet base = found[head];  // copy: found may reallocate
    for (element_t x = 0; x < g.order(); ++x) {
      if (base.contains(x)) continue;
      Bitset seeds = base.members();
      seeds.set(x);
      SubgroupSet ext = generated(g, seeds);
      if (seen.insert(ext.members()).second) found.push_back(std::move(ext));
    }
  }
  std::sort(found.begin(), found.end(), [](const SubgroupSet& a, const SubgroupSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.elements() < b.elements();
  });
  return found;
}

}  // namespace gnorm
