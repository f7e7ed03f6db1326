#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "gnorm/group.hpp"

namespace gnorm {

// [x, y] = x^-1 y^-1 x y.
element_t commutator(const FiniteGroup& g, element_t x, element_t y);

// [x, y, y, ..., y] with m >= 1 copies of y, left-normed:
// [x,_1 y] = [x, y], [x,_{m+1} y] = [[x,_m y], y].
element_t iterated_commutator(const FiniteGroup& g, element_t x, element_t y, int m);

// x is right n-Engel when [x,_n y] = 1 for every y.
bool is_right_n_engel(const FiniteGroup& g, element_t x, int n);
// First y violating the right n-Engel condition for x, if any.
std::optional<element_t> right_engel_violation(const FiniteGroup& g, element_t x, int n);

// R_n(G) as a raw element set. Not asserted (and in general not true) to be
// a subgroup.
Bitset right_engel_set(const FiniteGroup& g, int n);

bool is_n_engel_group(const FiniteGroup& g, int n);

// Intersection of the normalizers of all element centralizers. Computed two
// ways — the literal all-element intersection and the conjugacy-class-
// representative route — and the results are asserted equal
// (internal_invariant_violated on mismatch).
SubgroupSet centralizer_norm(const FiniteGroup& g);
SubgroupSet centralizer_norm_naive(const FiniteGroup& g);
SubgroupSet centralizer_norm_by_classes(const FiniteGroup& g);

// Intersection of the normalizers of all cyclic subgroups (equivalently, of
// all subgroups; the cyclic ones suffice since every subgroup is generated
// by cyclic ones).
SubgroupSet baer_norm(const FiniteGroup& g);

enum class SeriesKind { centralizer_norm, upper_central, lower_central, derived };
std::string_view series_kind_name(SeriesKind kind);

// terms[0] is the trivial subgroup for ascending series and the whole group
// for descending ones (for the lower central series terms[i] is the (i+1)-th
// classical term). A series stops as soon as a term hits its absorbing end
// (whole group / trivial subgroup); otherwise it runs until two consecutive
// terms agree and keeps the duplicate. stabilized_at is therefore the least
// i with term i = term i+1.
struct SeriesReport {
  SeriesKind kind = SeriesKind::upper_central;
  std::vector<SubgroupSet> terms;
  int stabilized_at = 0;
  bool reaches_whole_group = false;
  bool reaches_trivial = false;

  // Term at index i with the terminal term repeated forever.
  const SubgroupSet& term_at(int i) const {
    return terms[std::size_t(i) < terms.size() ? std::size_t(i) : terms.size() - 1];
  }
  std::vector<int> term_orders() const {
    std::vector<int> out;
    out.reserve(terms.size());
    for (const auto& t : terms) out.push_back(t.size());
    return out;
  }
};

// Ascending series with steps C_{i+1}/C_i = centralizer_norm(G/C_i). Term
// normality is re-checked on every step; a failure is an engine bug and
// raises internal_invariant_violated.
SeriesReport centralizer_norm_series(const FiniteGroup& g);

// Z_{i+1} = preimage of the center of G/Z_i.
SeriesReport upper_central_series(const FiniteGroup& g);

// terms[i+1] = <[terms[i], G]>.
SeriesReport lower_central_series(const FiniteGroup& g);

// terms[i+1] = <[terms[i], terms[i]]>.
SeriesReport derived_series(const FiniteGroup& g);

struct GroupProfile {
  bool is_nilpotent = false;
  std::optional<int> nilpotency_class;
  bool is_soluble = false;
  std::optional<int> derived_length;
  // Least positive n with C_n(G) = G, when the series reaches the whole
  // group (for the trivial group this is 1 by convention).
  std::optional<int> c_length;
  bool is_baer = false;  // every cyclic subgroup subnormal
};

GroupProfile profile(const FiniteGroup& g);
// Same, reusing series the caller already computed.
GroupProfile profile_from_series(const FiniteGroup& g, const SeriesReport& upper_central,
                                 const SeriesReport& derived,
                                 const SeriesReport& centralizer_norm);

bool is_nilpotent_group(const FiniteGroup& g);

// Distinct cyclic subgroups <x>, deduplicated, ordered by least generator.
std::vector<SubgroupSet> cyclic_subgroups(const FiniteGroup& g);

}  // namespace gnorm
