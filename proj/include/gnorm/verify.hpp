#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "gnorm/group.hpp"
#include "gnorm/series.hpp"

namespace gnorm {

enum class ClaimStatus { holds, holds_vacuously, fails };
std::string_view claim_status_name(ClaimStatus s);  // holds / holds-vacuously / fails

struct ClaimResult {
  std::string claim_id;
  ClaimStatus status = ClaimStatus::holds;
  nlohmann::json witness;  // null unless the claim fails
  std::string mode;        // "", "sampled" or "exhaustive" for subgroup-quantified claims
  std::string note;        // optional human-readable remark (vacuity reason etc.)
  double elapsed_seconds = 0.0;
  bool ok() const { return status != ClaimStatus::fails; }
};

struct VerifyOptions {
  // Quantify subgroup claims over the full subgroup lattice instead of the
  // sampling family. Only permitted for groups of order <= 24.
  bool exhaustive_subgroups = false;
};

struct VerificationReport {
  std::string group_name;
  int group_order = 0;
  GroupProfile profile;
  // Term orders of the four series, for reporting.
  std::vector<int> c_orders;
  std::vector<int> upper_central_orders;
  std::vector<int> lower_central_orders;
  std::vector<int> derived_orders;
  std::vector<ClaimResult> results;
  bool all_hold() const {
    for (const auto& r : results)
      if (!r.ok()) return false;
    return true;
  }
};

// Shared per-group computation, done once and handed to every claim checker.
// The nilpotency caches are filled lazily by the checkers.
struct GroupAnalysis {
  const FiniteGroup* g = nullptr;
  SeriesReport c_series;
  SeriesReport upper_central;
  SeriesReport lower_central;
  SeriesReport derived;
  SubgroupSet cnorm;  // C(G), equals c_series term 1
  SubgroupSet bnorm;  // B_1(G)
  ConjugacyClasses classes;
  GroupProfile prof;
  std::vector<SubgroupSet> samples;
  bool exhaustive = false;

  mutable std::unordered_map<Bitset, bool, BitsetHash> subgroup_nilpotent_cache;
  mutable std::unordered_map<Bitset, bool, BitsetHash> quotient_nilpotent_cache;

  const FiniteGroup& group() const { return *g; }
  bool subgroup_is_nilpotent(const SubgroupSet& h) const;
  bool quotient_is_nilpotent(const SubgroupSet& normal_kernel) const;
};

GroupAnalysis analyze(const FiniteGroup& g, const VerifyOptions& options = {});

// Subgroup sampling family for universally-quantified claims: all cyclic
// subgroups, every subgroup generated by a pair of conjugacy-class
// representatives, the center, the derived subgroup, and every C_i and Z_i
// term; deduplicated, deterministic order.
std::vector<SubgroupSet> sample_subgroups(const FiniteGroup& g, const ConjugacyClasses& classes,
                                          const SeriesReport& c_series,
                                          const SeriesReport& upper_central,
                                          const SeriesReport& derived);

// Recognizes groups isomorphic to a dihedral group of order 2n (n >= 1):
// returns n together with realizing elements r (order n) and s (s^2 = e,
// s r s = r^-1, s outside <r>).
struct DihedralShape {
  int n = 0;
  element_t r = 0;
  element_t s = 0;
};
std::optional<DihedralShape> detect_dihedral(const FiniteGroup& g);

// Expected |C_1| for a dihedral group of order 2n. Case split keyed on the
// group order 2n = 2^a * m (m odd): a = 1 gives 1, a = 2 gives 2, a >= 3
// gives 4 — except order 8, which has class 2 and C_1 = G of order 8 —
// and the degenerate abelian cases n <= 2 where C_1 = G of order 2n.
int expected_dihedral_c1_order(int n);

// The twelve claims, in fixed report order.
ClaimResult check_c_nilpotent_class3(const GroupAnalysis& a);
ClaimResult check_remark_soluble_2n(const GroupAnalysis& a);
ClaimResult check_subgroup_monotonicity(const GroupAnalysis& a);
ClaimResult check_sandwich(const GroupAnalysis& a);
ClaimResult check_dihedral_series(const GroupAnalysis& a);
ClaimResult check_hall_criterion(const GroupAnalysis& a);
ClaimResult check_quotient_equivalences(const GroupAnalysis& a);
ClaimResult check_centralizer_count_bound(const GroupAnalysis& a);
ClaimResult check_norm_sandwich(const GroupAnalysis& a);
ClaimResult check_series_class_agreement(const GroupAnalysis& a);
ClaimResult check_quotient_central_series(const GroupAnalysis& a);
ClaimResult check_remark_class_bound(const GroupAnalysis& a);

// Builds the dihedral group of order 2n and runs the dihedral-series claim
// on it (convenience for tests and batch checks).
ClaimResult check_dihedral_lemma(int n);

// Runs every claim in fixed order. Throws bad_parameter when
// exhaustive_subgroups is requested for a group of order > 24.
VerificationReport run_all(const FiniteGroup& g, const std::string& name,
                           const VerifyOptions& options = {});

}  // namespace gnorm
