#include <doctest.h>

#include <vector>

#include "gnorm/families.hpp"
#include "gnorm/group.hpp"
#include "gnorm/series.hpp"
#include "gnorm/subgroup.hpp"

using namespace gnorm;

namespace {

SubgroupSet from_elements(int parent_order, const std::vector<element_t>& elems) {
  Bitset b(parent_order);
  for (element_t x : elems) b.set(x);
  return SubgroupSet(b);
}

void check_series_shape(const SeriesReport& s, bool ascending) {
  REQUIRE(!s.terms.empty());
  for (std::size_t i = 1; i < s.terms.size(); ++i) {
    if (ascending)
      CHECK(s.terms[i - 1].subset_of(s.terms[i]));
    else
      CHECK(s.terms[i].subset_of(s.terms[i - 1]));
  }
  REQUIRE(s.stabilized_at >= 0);
  CHECK(s.term_at(s.stabilized_at) == s.term_at(s.stabilized_at + 1));
  CHECK(s.term_at(s.stabilized_at) == s.term_at(1000));  // clamped
}

}  // namespace

TEST_CASE("commutator identities") {
  const FiniteGroup g = make_symmetric(4);
  for (element_t x = 0; x < g.order(); x += 5) {
    CHECK(commutator(g, x, x) == g.identity());
    CHECK(commutator(g, x, g.identity()) == g.identity());
    CHECK(commutator(g, g.identity(), x) == g.identity());
    for (element_t y = 0; y < g.order(); y += 7) {
      // [x,y]^-1 = [y,x]
      CHECK(g.inv(commutator(g, x, y)) == commutator(g, y, x));
      // recursion defining the iterated commutator
      CHECK(iterated_commutator(g, x, y, 1) == commutator(g, x, y));
      for (int m = 1; m <= 3; ++m)
        CHECK(iterated_commutator(g, x, y, m + 1) ==
              commutator(g, iterated_commutator(g, x, y, m), y));
    }
  }
}

TEST_CASE("Engel elements and sets") {
  const FiniteGroup d4 = make_dihedral(4);
  // R_1(G) is exactly the center
  CHECK(right_engel_set(d4, 1) == center(d4).members());
  // D_4 has class 2, hence is a 2-Engel group
  CHECK(is_n_engel_group(d4, 2));
  CHECK(right_engel_set(d4, 2).count() == 8);

  const FiniteGroup s3 = make_symmetric(3);
  CHECK_FALSE(is_n_engel_group(s3, 2));
  // R_2(S_3) is the identity alone
  const Bitset r2 = right_engel_set(s3, 2);
  CHECK(r2.count() == 1);
  CHECK(r2.test(s3.identity()));
  // violation witnesses really violate
  for (element_t x = 0; x < s3.order(); ++x) {
    const auto bad = right_engel_violation(s3, x, 2);
    CHECK(bad.has_value() == !is_right_n_engel(s3, x, 2));
    if (bad) CHECK(iterated_commutator(s3, x, *bad, 2) != s3.identity());
  }
  // every element of an abelian group is 1-Engel
  CHECK(is_n_engel_group(make_cyclic(12), 1));
}

TEST_CASE("centralizer norms of the small benchmark groups") {
  // C(D_6) = {e, r^3}
  CHECK(centralizer_norm(make_dihedral(6)) == from_elements(12, {0, 3}));
  // C(D_4) is all of D_4 (the class-2 exception)
  CHECK(centralizer_norm(make_dihedral(4)) == whole_group(make_dihedral(4)));
  // C(S_3) is trivial
  CHECK(centralizer_norm(make_symmetric(3)) == trivial_subgroup(make_symmetric(3)));
  // C(Q_8) = Q_8
  CHECK(centralizer_norm(make_generalized_quaternion(8)) ==
        whole_group(make_generalized_quaternion(8)));
  // abelian: C(G) = G
  CHECK(centralizer_norm(make_cyclic(15)).size() == 15);
}

TEST_CASE("the two centralizer-norm routes agree") {
  for (int n : {3, 4, 6, 8}) {
    const FiniteGroup g = make_dihedral(n);
    CHECK(centralizer_norm_naive(g) == centralizer_norm_by_classes(g));
  }
  const FiniteGroup s4 = make_symmetric(4);
  CHECK(centralizer_norm_naive(s4) == centralizer_norm_by_classes(s4));
}

TEST_CASE("baer norm") {
  CHECK(baer_norm(make_cyclic(10)).size() == 10);
  CHECK(baer_norm(make_symmetric(3)).size() == 1);
  // all subgroups of Q_8 are normal, so the norm is everything
  CHECK(baer_norm(make_generalized_quaternion(8)).size() == 8);
  // B_1(D_4) = Z(D_4) = {e, r^2}
  CHECK(baer_norm(make_dihedral(4)) == from_elements(8, {0, 2}));
}

TEST_CASE("series of D_16 (order 32)") {
  const FiniteGroup g = make_dihedral(16);
  const SeriesReport cs = centralizer_norm_series(g);
  CHECK(cs.term_orders() == std::vector<int>{1, 4, 32});
  CHECK(cs.stabilized_at == 2);
  CHECK(cs.reaches_whole_group);
  check_series_shape(cs, true);

  const SeriesReport ucs = upper_central_series(g);
  CHECK(ucs.term_orders() == std::vector<int>{1, 2, 4, 8, 32});
  CHECK(ucs.stabilized_at == 4);
  check_series_shape(ucs, true);

  const SeriesReport lcs = lower_central_series(g);
  CHECK(lcs.term_orders() == std::vector<int>{32, 8, 4, 2, 1});
  CHECK(lcs.reaches_trivial);
  check_series_shape(lcs, false);

  const SeriesReport ds = derived_series(g);
  CHECK(ds.term_orders() == std::vector<int>{32, 8, 1});
  CHECK(ds.stabilized_at == 2);
  check_series_shape(ds, false);
}

TEST_CASE("series of S_3 stall where they should") {
  const FiniteGroup g = make_symmetric(3);
  const SeriesReport cs = centralizer_norm_series(g);
  CHECK(cs.term_orders() == std::vector<int>{1, 1});
  CHECK(cs.stabilized_at == 0);
  CHECK_FALSE(cs.reaches_whole_group);

  const SeriesReport ucs = upper_central_series(g);
  CHECK(ucs.term_orders() == std::vector<int>{1, 1});

  const SeriesReport lcs = lower_central_series(g);
  CHECK(lcs.term_orders() == std::vector<int>{6, 3, 3});
  CHECK(lcs.stabilized_at == 1);
  CHECK_FALSE(lcs.reaches_trivial);

  const SeriesReport ds = derived_series(g);
  CHECK(ds.term_orders() == std::vector<int>{6, 3, 1});
  CHECK(ds.reaches_trivial);
}

TEST_CASE("derived series of S_5 stalls at A_5") {
  const SeriesReport ds = derived_series(make_symmetric(5));
  CHECK(ds.term_orders() == std::vector<int>{120, 60, 60});
  CHECK(ds.stabilized_at == 1);
  CHECK_FALSE(ds.reaches_trivial);
}

TEST_CASE("lower central series of D_4") {
  const SeriesReport lcs = lower_central_series(make_dihedral(4));
  CHECK(lcs.term_orders() == std::vector<int>{8, 2, 1});
}

TEST_CASE("trivial group series") {
  const FiniteGroup g = make_cyclic(1);
  for (const SeriesReport& s : {centralizer_norm_series(g), upper_central_series(g),
                                lower_central_series(g), derived_series(g)}) {
    CHECK(s.terms.size() == 1);
    CHECK(s.stabilized_at == 0);
    CHECK(s.reaches_whole_group);
    CHECK(s.reaches_trivial);
  }
}

TEST_CASE("profiles of benchmark groups") {
  const GroupProfile d8 = profile(make_dihedral(8));  // order 16
  CHECK(d8.is_nilpotent);
  CHECK(d8.nilpotency_class == 3);
  CHECK(d8.c_length == 2);
  CHECK(d8.derived_length == 2);
  CHECK(d8.is_baer);

  const GroupProfile d32 = profile(make_dihedral(32));  // order 64
  CHECK(d32.nilpotency_class == 5);
  CHECK(d32.c_length == 3);

  const GroupProfile s3 = profile(make_symmetric(3));
  CHECK_FALSE(s3.is_nilpotent);
  CHECK_FALSE(s3.nilpotency_class.has_value());
  CHECK(s3.is_soluble);
  CHECK(s3.derived_length == 2);
  CHECK_FALSE(s3.c_length.has_value());
  CHECK_FALSE(s3.is_baer);

  const GroupProfile s5 = profile(make_symmetric(5));
  CHECK_FALSE(s5.is_soluble);
  CHECK_FALSE(s5.derived_length.has_value());

  const GroupProfile q8 = profile(make_generalized_quaternion(8));
  CHECK(q8.is_nilpotent);
  CHECK(q8.nilpotency_class == 2);
  CHECK(q8.c_length == 1);
  CHECK(q8.is_baer);

  // trivial group: class 0, derived length 0, c-length 1 by convention
  const GroupProfile z1 = profile(make_cyclic(1));
  CHECK(z1.nilpotency_class == 0);
  CHECK(z1.derived_length == 0);
  CHECK(z1.c_length == 1);
  CHECK(z1.is_baer);

  // abelian: class 1, c-length 1
  const GroupProfile z6 = profile(make_cyclic(6));
  CHECK(z6.nilpotency_class == 1);
  CHECK(z6.c_length == 1);
}

TEST_CASE("is_nilpotent_group") {
  CHECK(is_nilpotent_group(make_dihedral(8)));
  CHECK(is_nilpotent_group(make_cyclic(12)));
  CHECK_FALSE(is_nilpotent_group(make_symmetric(3)));
  CHECK_FALSE(is_nilpotent_group(make_dihedral(6)));
}

TEST_CASE("cyclic subgroup enumeration") {
  // Z_6 has one cyclic subgroup per divisor of 6
  CHECK(cyclic_subgroups(make_cyclic(6)).size() == 4);
  // D_4: trivial, <r>, <r^2>, and four reflection subgroups
  const auto subs = cyclic_subgroups(make_dihedral(4));
  CHECK(subs.size() == 7);
  const FiniteGroup d4 = make_dihedral(4);
  for (const SubgroupSet& h : subs) CHECK(is_subgroup(d4, h));
}

TEST_CASE("series kind names") {
  CHECK(series_kind_name(SeriesKind::centralizer_norm) == "centralizer-norm");
  CHECK(series_kind_name(SeriesKind::upper_central) == "upper-central");
  CHECK(series_kind_name(SeriesKind::lower_central) == "lower-central");
  CHECK(series_kind_name(SeriesKind::derived) == "derived");
}
