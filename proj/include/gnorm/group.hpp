#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gnorm/bitset.hpp"
#include "gnorm/error.hpp"
#include "gnorm/perm.hpp"

namespace gnorm {

using element_t = std::int32_t;

// Configurable ceiling for group construction (tables are dense; a full
// table at the default cap is 32 MiB). Storage is 16-bit, so no group may
// exceed kHardOrderLimit regardless of the cap a caller passes.
inline constexpr int kDefaultOrderCap = 4096;
inline constexpr int kHardOrderLimit = 65535;

// Membership set for a subgroup of a fixed parent group. Producers guarantee
// the subgroup property; is_subgroup() re-validates at API boundaries.
class SubgroupSet {
 public:
  SubgroupSet() = default;
  explicit SubgroupSet(Bitset members)
      : members_(std::move(members)), size_(members_.count()) {}

  int parent_order() const { return members_.universe(); }
  int size() const { return size_; }
  bool contains(element_t x) const { return members_.test(x); }
  const Bitset& members() const { return members_; }
  std::vector<element_t> elements() const { return members_.to_vector(); }

  bool operator==(const SubgroupSet& o) const { return members_ == o.members_; }
  bool subset_of(const SubgroupSet& o) const { return members_.is_subset_of(o.members_); }

 private:
  Bitset members_;
  int size_ = 0;
};

// A finite group as a dense Cayley table. Elements are indices 0..order-1;
// the identity is located by the validator and need not be index 0 for
// file-loaded tables (the family constructors always place it at 0).
class FiniteGroup {
 public:
  // Default-constructed value is the trivial group.
  FiniteGroup() = default;

  // Full validation in this order: Latin-square rows/columns (covers range
  // errors), identity, two-sided inverses, associativity (witness triple).
  // Throws not_latin_square / no_identity / no_inverse / not_associative,
  // bad_parameter on shape errors, order_cap_exceeded past the hard limit.
  static FiniteGroup from_cayley_table(int order,
                                       const std::vector<std::vector<element_t>>& table);
  static FiniteGroup from_flat_table(int order, std::vector<element_t> flat);

  // Closure of the generators under composition (apply-left-first), breadth
  // first, identity at index 0, elements in discovery order. Throws
  // not_a_permutation (witness: generator index) and order_cap_exceeded.
  static FiniteGroup from_permutation_generators(int degree,
                                                 const std::vector<Perm>& generators,
                                                 int order_cap = kDefaultOrderCap);

  // Trusted path for tables that are groups by construction (families,
  // quotients, restrictions): locates identity and inverses but skips the
  // O(n^3) associativity sweep.
  static FiniteGroup unchecked(int order, std::vector<element_t> flat,
                               std::vector<std::string> labels = {});

  int order() const noexcept { return order_; }
  element_t identity() const noexcept { return identity_; }

  element_t mul(element_t a, element_t b) const {
    const std::size_t k = std::size_t(a) * order_ + b;
    return narrow_ ? element_t(t8_[k]) : element_t(t16_[k]);
  }
  element_t inv(element_t a) const { return inverse_[a]; }
  // t^-1 x t
  element_t conjugate(element_t x, element_t t) const {
    return mul(mul(inv(t), x), t);
  }
  element_t power(element_t x, long long k) const;

  bool has_labels() const { return !labels_.empty(); }
  std::string label(element_t x) const;
  void set_labels(std::vector<std::string> labels);

  std::vector<std::vector<element_t>> table() const;

  // Structural identity: same order, identity, table and inverses
  // (labels are not compared).
  bool same_table(const FiniteGroup& o) const;

 private:
  void build_storage(int order, const std::vector<element_t>& flat);
  void locate_identity_and_inverses();

  int order_ = 1;
  bool narrow_ = true;
  std::vector<std::uint8_t> t8_ = {0};
  std::vector<std::uint16_t> t16_;
  element_t identity_ = 0;
  std::vector<element_t> inverse_ = {0};
  std::vector<std::string> labels_;
};

int element_order(const FiniteGroup& g, element_t x);

SubgroupSet trivial_subgroup(const FiniteGroup& g);
SubgroupSet whole_group(const FiniteGroup& g);

// Nonempty and closed under the product (which suffices for finite groups).
bool is_subgroup(const FiniteGroup& g, const Bitset& members);
bool is_subgroup(const FiniteGroup& g, const SubgroupSet& h);
// Closed under conjugation by every group element.
bool is_normal(const FiniteGroup& g, const SubgroupSet& h);

// Partition into conjugacy classes. Classes are ordered by their least
// element; the representative is that least element. conjugating_witness[y]
// is some t with conjugate(rep, t) == y, used to push normalizer sets around
// an orbit without recomputing them.
struct ConjugacyClasses {
  std::vector<int> class_of;
  std::vector<element_t> representative;
  std::vector<std::vector<element_t>> classes;
  std::vector<element_t> conjugating_witness;
};
ConjugacyClasses conjugacy_classes(const FiniteGroup& g);

// Quotient by a normal subgroup. Cosets are indexed by least member, so the
// construction is deterministic. Throws not_a_subgroup, parent_mismatch, and
// not_normal with witness pair (h, t) such that t^-1 h t lies outside.
struct QuotientMap {
  SubgroupSet kernel;
  std::vector<element_t> coset_of;   // parent element -> coset index
  std::vector<element_t> coset_rep;  // coset index -> least parent member
  FiniteGroup quotient;
};
QuotientMap quotient(const FiniteGroup& g, const SubgroupSet& kernel);

SubgroupSet preimage(const QuotientMap& q, const SubgroupSet& in_quotient);
Bitset image_set(const QuotientMap& q, const Bitset& parent_set);

// Re-index a subgroup as a standalone group, with maps in both directions
// (from_parent is -1 outside the subgroup). Labels are inherited.
struct Restriction {
  FiniteGroup group;
  std::vector<element_t> to_parent;
  std::vector<element_t> from_parent;
};
Restriction restrict_to(const FiniteGroup& g, const SubgroupSet& h);

}  // namespace gnorm
