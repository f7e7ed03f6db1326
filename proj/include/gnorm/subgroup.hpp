#pragma once

#include <optional>
#include <vector>

#include "gnorm/group.hpp"

namespace gnorm {

// Elements commuting with x. Always contains <x> and the center.
SubgroupSet centralizer(const FiniteGroup& g, element_t x);

SubgroupSet center(const FiniteGroup& g);

// Setwise stabilizer { t : t^-1 H t = H }. Validates that h is a subgroup
// (not_a_subgroup otherwise); h is always contained in its normalizer.
SubgroupSet normalizer(const FiniteGroup& g, const SubgroupSet& h);

// <seeds>: breadth-first closure under right multiplication by the seeds,
// which suffices in a finite group. Empty seed set yields the trivial
// subgroup.
SubgroupSet generated(const FiniteGroup& g, const std::vector<element_t>& seeds);
SubgroupSet generated(const FiniteGroup& g, const Bitset& seeds);

// Throws parent_mismatch when the operands live in different groups.
SubgroupSet intersect(const SubgroupSet& a, const SubgroupSet& b);

// Smallest subgroup of `ambient` containing h and closed under conjugation
// by ambient. Throws not_contained when h is not inside ambient.
SubgroupSet normal_closure(const FiniteGroup& g, const SubgroupSet& h,
                           const SubgroupSet& ambient);

// Normal-closure descent: K_0 = G, K_{i+1} = <h^{K_i}>. The descent is the
// fastest subnormal chain, so it reaches h exactly when h is subnormal;
// defect = number of strict steps. chain is populated on success
// (whole group first, h last).
struct SubnormalVerdict {
  bool is_subnormal = false;
  std::optional<int> defect;
  std::vector<SubgroupSet> chain;
};
SubnormalVerdict is_subnormal(const FiniteGroup& g, const SubgroupSet& h);

// Number of distinct centralizer subgroups over all elements (the whole
// group, from central elements, always counts).
int distinct_centralizer_count(const FiniteGroup& g);

// Every subgroup, found by closing each known subgroup with one extra
// element until no new subgroup appears. Exponential in spirit; intended
// for small orders (the verifier's exhaustive mode guards at 24).
std::vector<SubgroupSet> all_subgroups(const FiniteGroup& g);

namespace detail {
// Hot-path normalizer without the subgroup re-validation; h must be a
// subgroup.
Bitset normalizer_members(const FiniteGroup& g, const std::vector<element_t>& h_elems,
                          const Bitset& h);
// { t^-1 s t : s in S }.
Bitset conjugate_set(const FiniteGroup& g, const Bitset& s, element_t t);
}  // namespace detail

}  // namespace gnorm
