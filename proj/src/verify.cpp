#include "gnorm/verify.hpp"

#include <algorithm>
#include <chrono>
#include <unordered_set>

#include "gnorm/error.hpp"
#include "gnorm/families.hpp"
#include "gnorm/subgroup.hpp"

namespace gnorm {

namespace {

using nlohmann::json;

// <[h, h]> as a subgroup of the ambient group.
SubgroupSet derived_subgroup_of(const FiniteGroup& g, const SubgroupSet& h) {
  std::vector<element_t> gens;
  std::unordered_set<element_t> seen;
  const std::vector<element_t> elems = h.elements();
  for (element_t x : elems) {
    for (element_t y : elems) {
      const element_t c = commutator(g, x, y);
      if (seen.insert(c).second) gens.push_back(c);
    }
  }
  return generated(g, gens);
}

ClaimResult failing(ClaimResult r, json witness) {
  r.status = ClaimStatus::fails;
  r.witness = std::move(witness);
  return r;
}

}  // namespace

std::string_view claim_status_name(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::holds: return "holds";
    case ClaimStatus::holds_vacuously: return "holds-vacuously";
    case ClaimStatus::fails: return "fails";
  }
  return "unknown";
}

bool GroupAnalysis::subgroup_is_nilpotent(const SubgroupSet& h) const {
  auto it = subgroup_nilpotent_cache.find(h.members());
  if (it != subgroup_nilpotent_cache.end()) return it->second;
  const bool value = is_nilpotent_group(restrict_to(*g, h).group);
  subgroup_nilpotent_cache.emplace(h.members(), value);
  return value;
}

bool GroupAnalysis::quotient_is_nilpotent(const SubgroupSet& normal_kernel) const {
  auto it = quotient_nilpotent_cache.find(normal_kernel.members());
  if (it != quotient_nilpotent_cache.end()) return it->second;
  const bool value = is_nilpotent_group(quotient(*g, normal_kernel).quotient);
  quotient_nilpotent_cache.emplace(normal_kernel.members(), value);
  return value;
}

std::vector<SubgroupSet> sample_subgroups(const FiniteGroup& g, const ConjugacyClasses& classes,
                                          const SeriesReport& c_series,
                                          const SeriesReport& upper_central,
                                          const SeriesReport& derived) {
  std::vector<SubgroupSet> out;
  std::unordered_set<Bitset, BitsetHash> seen;
  const auto add = [&](SubgroupSet h) {
    if (seen.insert(h.members()).second) out.push_back(std::move(h));
  };
  for (SubgroupSet& h : cyclic_subgroups(g)) add(std::move(h));
  const std::size_t k = classes.classes.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      add(generated(
          g, std::vector<element_t>{classes.classes[i].front(), classes.classes[j].front()}));
    }
  }
  add(center(g));
  add(derived.term_at(1));
  for (const SubgroupSet& t : c_series.terms) add(t);
  for (const SubgroupSet& t : upper_central.terms) add(t);
  return out;
}

std::optional<DihedralShape> detect_dihedral(const FiniteGroup& g) {
  if (g.order() % 2 != 0) return std::nullopt;
  const int n = g.order() / 2;
  const element_t e = g.identity();
  for (element_t r = 0; r < g.order(); ++r) {
    if (element_order(g, r) != n) continue;
    const SubgroupSet rot = generated(g, std::vector<element_t>{r});
    for (element_t s = 0; s < g.order(); ++s) {
      if (rot.contains(s)) continue;
      if (g.mul(s, s) != e) continue;
      if (g.mul(g.mul(s, r), s) != g.inv(r)) continue;
      return DihedralShape{n, r, s};
    }
  }
  return std::nullopt;
}

int expected_dihedral_c1_order(int n) {
  if (n < 1) throw group_error(errc::bad_parameter, "dihedral parameter must be positive");
  if (n <= 2) return 2 * n;   // abelian: C(G) = G
  if (n % 2 == 1) return 1;   // order 2n with 2n = 2 * odd
  if (n % 4 == 2) return 2;   // order divisible by 4, not by 8
  if (n == 4) return 8;       // order 8 has class 2: C(G) = G
  return 4;                   // order divisible by 8, above 8
}

ClaimResult check_c_nilpotent_class3(const GroupAnalysis& a) {
  ClaimResult r;
  r.claim_id = "lemma-c-class3";
  const Restriction res = restrict_to(a.group(), a.cnorm);
  const FiniteGroup& c = res.group;
  for (element_t x = 0; x < c.order(); ++x) {
    for (element_t y = 0; y < c.order(); ++y) {
      if (iterated_commutator(c, x, y, 2) != c.identity()) {
        return failing(std::move(r), json{{"law", "2-engel"},
                                          {"x", res.to_parent[std::size_t(x)]},
                                          {"y", res.to_parent[std::size_t(y)]}});
      }
    }
  }
  const SeriesReport ucs = upper_central_series(c);
  if (!ucs.reaches_whole_group || ucs.stabilized_at > 3) {
    return failing(std::move(r),
                   json{{"law", "nilpotent-class<=3"},
                        {"nilpotent", ucs.reaches_whole_group},
                        {"class", ucs.reaches_whole_group ? json(ucs.stabilized_at) : json()}});
  }
  const SeriesReport ds = derived_series(c);
  if (!ds.reaches_trivial || ds.stabilized_at > 2) {
    return failing(std::move(r),
                   json{{"law", "derived-length<=2"},
                        {"soluble", ds.reaches_trivial},
                        {"derived_length", ds.reaches_trivial ? json(ds.stabilized_at) : json()}});
  }
  return r;
}

ClaimResult check_remark_soluble_2n(const GroupAnalysis& a) {
  ClaimResult r;
  r.claim_id = "remark-soluble-2n";
  if (!a.prof.c_length) {
    r.status = ClaimStatus::holds_vacuously;
    r.note = "C-series never reaches the whole group";
    return r;
  }
  const int n = *a.prof.c_length;
  if (!a.prof.is_soluble || *a.prof.derived_length > 2 * n) {
    return failing(std::move(r), json{{"c_length", n},
                                      {"soluble", a.prof.is_soluble},
                                      {"derived_length", a.prof.derived_length
                                                             ? json(*a.prof.derived_length)
                                                             : json()}});
  }
  return r;
}

ClaimResult check_subgroup_monotonicity(const GroupAnalysis& a) {
  ClaimResult r;
  r.claim_id = "lemma-subgroup-monotonicity";
  r.mode = a.exhaustive ? "exhaustive" : "sampled";
  const FiniteGroup& g = a.group();
  for (const SubgroupSet& h : a.samples) {
    const SubgroupSet meet = intersect(h, a.cnorm);
    if (meet.size() == 1) continue;  // only the identity, always in C(H)
    const Restriction res = restrict_to(g, h);
    const SubgroupSet ch = centralizer_norm(res.group);
    for (element_t x : meet.elements()) {
      if (!ch.contains(res.from_parent[std::size_t(x)])) {
        return failing(std::move(r), json{{"subgroup", h.elements()}, {"element", x}});
      }
    }
  }
  return r;
}

ClaimResult check_sandwich(const GroupAnalysis& a) {
  ClaimResult r;
  r.claim_id = "lemma-sandwich";
  const FiniteGroup& g = a.group();
  const int max_i =
      std::max({1, a.c_series.stabilized_at, a.upper_central.stabilized_at});
  for (int i = 1; i <= max_i; ++i) {
    const SubgroupSet& zi1 = a.upper_central.term_at(i + 1);
    const SubgroupSet& ci = a.c_series.term_at(i);
    if (!zi1.subset_of(ci)) {
      element_t bad = -1;
      for (element_t x : zi1.elements()) {
        if (!ci.contains(x)) {
          bad = x;
          break;
        }
      }
      return failing(std::move(r),
                     json{{"i", i}, {"relation", "Z_{i+1} <= C_i"}, {"element", bad}});
    }
    for (element_t x : ci.elements()) {
      if (auto y = right_engel_violation(g, x, 2 * i)) {
        return failing(std::move(r),
                       json{{"i", i}, {"relation", "C_i <= R_{2i}"}, {"x", x}, {"y", *y}});
      }
    }
  }
  return r;
}

ClaimResult check_dihedral_series(const GroupAnalysis& a) {
  ClaimResult r;
  r.claim_id = "lemma-dihedral-series";
  const auto shape = detect_dihedral(a.group());
  if (!shape) {
    r.status = ClaimStatus::holds_vacuously;
    r.note = "not a dihedral group";
    return r;
  }
  const int n = shape->n;
  r.note = "dihedral, n = " + std::to_string(n);
  const int expected = expected_dihedral_c1_order(n);
  const int actual = a.c_series.term_at(1).size();
  if (actual != expected) {
    return failing(std::move(r),
                   json{{"n", n}, {"law", "|C_1| case table"}, {"expected", expected},
                        {"actual", actual}});
  }
  const int max_i =
      std::max(a.c_series.stabilized_at, (a.upper_central.stabilized_at + 1) / 2);
  for (int i = 0; i <= max_i; ++i) {
    if (!(a.c_series.term_at(i) == a.upper_central.term_at(2 * i))) {
      return failing(std::move(r), json{{"n", n},
                                        {"law", "C_i = Z_{2i}"},
                                        {"i", i},
                                        {"c_i_order", a.c_series.term_at(i).size()},
                                        {"z_2i_order", a.upper_central.term_at(2 * i).size()}});
    }
  }
  return r;
}

ClaimResult check_hall_criterion(const GroupAnalysis& a) {
  ClaimResult r;
  r.claim_id = "thm-hall-criterion";
  r.mode = a.exhaustive ? "exhaustive" : "sampled";
  const FiniteGroup& g = a.group();
  bool any_antecedent = false;
  for (const SubgroupSet& n : a.samples) {
    if (!is_normal(g, n)) continue;
    const SubgroupSet np = derived_subgroup_of(g, n);
    if (!a.subgroup_is_nilpotent(n)) continue;
    if (!a.quotient_is_nilpotent(np)) continue;
    any_antecedent = true;
    if (!a.prof.is_nilpotent) {
      return failing(std::move(r), json{{"normal_subgroup", n.elements()},
                                        {"its_derived_subgroup", np.elements()}});
    }
  }
  if (!any_antecedent) {
    r.status = ClaimStatus::holds_vacuously;
    r.note = "no sampled normal subgroup satisfies the hypotheses";
  }
  return r;
}

ClaimResult check_quotient_equivalences(const GroupAnalysis& a) {
  ClaimResult r;
  r.claim_id = "lemma-quotient-equivalences";
  r.mode = a.exhaustive ? "exhaustive" : "sampled";
  const FiniteGroup& g = a.group();

  const bool p_nilpotent = a.prof.is_nilpotent;
  const bool p_c_reaches = a.prof.c_length.has_value();
  bool p_quotient = false;
  for (int m = 0; m <= a.c_series.stabilized_at && !p_quotient; ++m) {
    p_quotient = a.quotient_is_nilpotent(a.c_series.term_at(m));
  }
  if (p_nilpotent != p_c_reaches || p_nilpotent != p_quotient) {
    return failing(std::move(r), json{{"nilpotent", p_nilpotent},
                                      {"c_series_reaches_group", p_c_reaches},
                                      {"some_quotient_nilpotent", p_quotient}});
  }

  // H/C_i nilpotent <=> H nilpotent, for sampled H containing C_i.
  for (int i = 1; i <= a.c_series.stabilized_at; ++i) {
    const SubgroupSet& ci = a.c_series.term_at(i);
    for (const SubgroupSet& h : a.samples) {
      if (!ci.subset_of(h)) continue;
      const bool h_nilpotent = a.subgroup_is_nilpotent(h);
      const Restriction res = restrict_to(g, h);
      Bitset inner(res.group.order());
      for (element_t x : ci.elements()) inner.set(res.from_parent[std::size_t(x)]);
      const bool q_nilpotent =
          is_nilpotent_group(quotient(res.group, SubgroupSet(std::move(inner))).quotient);
      if (h_nilpotent != q_nilpotent) {
        return failing(std::move(r), json{{"i", i},
                                          {"subgroup", h.elements()},
                                          {"subgroup_nilpotent", h_nilpotent},
                                          {"quotient_nilpotent", q_nilpotent}});
      }
    }
  }

  // Proof device: G/C(G) nilpotent forces every cyclic subgroup subnormal.
  if (a.quotient_is_nilpotent(a.cnorm) && !a.prof.is_baer) {
    return failing(std::move(r),
                   json{{"relation", "G/C(G) nilpotent but some cyclic subgroup not subnormal"}});
  }
  return r;
}

ClaimResult check_centralizer_count_bound(const GroupAnalysis& a) {
  ClaimResult r;
  r.claim_id = "bound-centralizer-count";
  const FiniteGroup& g = a.group();
  const int n = distinct_centralizer_count(g);
  const int index = g.order() / a.cnorm.size();
  // (n-1)! with early exit once the bound is already met (avoids overflow).
  unsigned long long fact = 1;
  for (int k = 1; k < n && fact < static_cast<unsigned long long>(index); ++k) {
    fact *= static_cast<unsigned long long>(k);
  }
  if (fact < static_cast<unsigned long long>(index)) {
    return failing(std::move(r),
                   json{{"distinct_centralizers", n}, {"index_of_c", index}});
  }
  return r;
}

ClaimResult check_norm_sandwich(const GroupAnalysis& a) {
  ClaimResult r;
  r.claim_id = "norm-sandwich";
  const SubgroupSet& z = a.upper_central.term_at(1);
  const SubgroupSet& z2 = a.upper_central.term_at(2);
  const auto first_outside = [](const SubgroupSet& small, const SubgroupSet& big) {
    for (element_t x : small.elements()) {
      if (!big.contains(x)) return x;
    }
    return element_t(-1);
  };
  if (!z.subset_of(a.bnorm)) {
    return failing(std::move(r),
                   json{{"relation", "Z <= B_1"}, {"element", first_outside(z, a.bnorm)}});
  }
  if (!a.bnorm.subset_of(z2)) {
    return failing(std::move(r),
                   json{{"relation", "B_1 <= Z_2"}, {"element", first_outside(a.bnorm, z2)}});
  }
  if (!a.bnorm.subset_of(a.cnorm)) {
    return failing(std::move(r),
                   json{{"relation", "B_1 <= C"}, {"element", first_outside(a.bnorm, a.cnorm)}});
  }
  return r;
}

ClaimResult check_series_class_agreement(const GroupAnalysis& a) {
  ClaimResult r;
  r.claim_id = "series-class-agreement";
  const bool up = a.upper_central.reaches_whole_group;
  const bool down = a.lower_central.reaches_trivial;
  if (up != down) {
    return failing(std::move(r),
                   json{{"upper_reaches_group", up}, {"lower_reaches_trivial", down}});
  }
  if (up && a.upper_central.stabilized_at != a.lower_central.stabilized_at) {
    return failing(std::move(r), json{{"upper_class", a.upper_central.stabilized_at},
                                      {"lower_class", a.lower_central.stabilized_at}});
  }
  return r;
}

ClaimResult check_quotient_central_series(const GroupAnalysis& a) {
  ClaimResult r;
  r.claim_id = "quotient-central-series";
  const FiniteGroup& g = a.group();
  for (int i = 0; i <= a.upper_central.stabilized_at; ++i) {
    const QuotientMap qm = quotient(g, a.upper_central.term_at(i));
    const SeriesReport qu = upper_central_series(qm.quotient);
    const int max_j = std::max(qu.stabilized_at, a.upper_central.stabilized_at - i);
    for (int j = 0; j <= max_j; ++j) {
      const Bitset image = image_set(qm, a.upper_central.term_at(i + j).members());
      if (!(image == qu.term_at(j).members())) {
        return failing(std::move(r),
                       json{{"i", i},
                            {"j", j},
                            {"image_of_Z_i+j_order", image.count()},
                            {"Z_j_of_quotient_order", qu.term_at(j).size()}});
      }
    }
  }
  return r;
}

ClaimResult check_remark_class_bound(const GroupAnalysis& a) {
  ClaimResult r;
  r.claim_id = "remark-class-n1-cbar";
  if (!a.prof.is_nilpotent) {
    r.status = ClaimStatus::holds_vacuously;
    r.note = "not nilpotent";
    return r;
  }
  const int cls = *a.prof.nilpotency_class;
  const int bound = std::max(1, cls - 1);
  if (!a.prof.c_length || *a.prof.c_length > bound) {
    return failing(std::move(r), json{{"class", cls},
                                      {"c_length", a.prof.c_length ? json(*a.prof.c_length)
                                                                   : json()},
                                      {"bound", bound}});
  }
  return r;
}

GroupAnalysis analyze(const FiniteGroup& g, const VerifyOptions& options) {
  if (options.exhaustive_subgroups && g.order() > 24) {
    throw group_error(errc::bad_parameter,
                      "exhaustive subgroup verification is limited to order <= 24, got order " +
                          std::to_string(g.order()));
  }
  GroupAnalysis a;
  a.g = &g;
  a.c_series = centralizer_norm_series(g);
  a.upper_central = upper_central_series(g);
  a.lower_central = lower_central_series(g);
  a.derived = derived_series(g);
  a.cnorm = centralizer_norm(g);
  if (!(a.cnorm == a.c_series.term_at(1))) {
    throw group_error(errc::internal_invariant_violated,
                      "C(G) disagrees with the first C-series term");
  }
  a.bnorm = baer_norm(g);
  a.classes = conjugacy_classes(g);
  a.prof = profile_from_series(g, a.upper_central, a.derived, a.c_series);
  a.exhaustive = options.exhaustive_subgroups;
  a.samples = a.exhaustive ? all_subgroups(g)
                           : sample_subgroups(g, a.classes, a.c_series, a.upper_central,
                                              a.derived);
  return a;
}

ClaimResult check_dihedral_lemma(int n) {
  // Partial analysis: the dihedral claim needs only the two series.
  const FiniteGroup d = make_dihedral(n);
  GroupAnalysis a;
  a.g = &d;
  a.c_series = centralizer_norm_series(d);
  a.upper_central = upper_central_series(d);
  return check_dihedral_series(a);
}

VerificationReport run_all(const FiniteGroup& g, const std::string& name,
                           const VerifyOptions& options) {
  const GroupAnalysis a = analyze(g, options);
  VerificationReport rep;
  rep.group_name = name;
  rep.group_order = g.order();
  rep.profile = a.prof;
  rep.c_orders = a.c_series.term_orders();
  rep.upper_central_orders = a.upper_central.term_orders();
  rep.lower_central_orders = a.lower_central.term_orders();
  rep.derived_orders = a.derived.term_orders();
  using CheckFn = ClaimResult (*)(const GroupAnalysis&);
  static constexpr CheckFn kChecks[] = {
      check_c_nilpotent_class3,   check_remark_soluble_2n,
      check_subgroup_monotonicity, check_sandwich,
      check_dihedral_series,      check_hall_criterion,
      check_quotient_equivalences, check_centralizer_count_bound,
      check_norm_sandwich,        check_series_class_agreement,
      check_quotient_central_series, check_remark_class_bound,
  };
  rep.results.reserve(std::size(kChecks));
  for (CheckFn fn : kChecks) {
    const auto start = std::chrono::steady_clock::now();
    ClaimResult result = fn(a);
    result.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    rep.results.push_back(std::move(result));
  }
  return rep;
}

}  // namespace gnorm
