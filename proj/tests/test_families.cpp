#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>

#include "gnorm/error.hpp"
#include "gnorm/families.hpp"
#include "gnorm/group.hpp"
#include "gnorm/subgroup.hpp"

using namespace gnorm;

namespace {

bool is_abelian(const FiniteGroup& g) {
  for (element_t a = 0; a < g.order(); ++a)
    for (element_t b = 0; b < a; ++b)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

}  // namespace

TEST_CASE("cyclic groups") {
  for (int n : {1, 2, 7, 12}) {
    const FiniteGroup g = make_cyclic(n);
    CHECK(g.order() == n);
    CHECK(g.identity() == 0);
    CHECK(is_abelian(g));
    if (n > 1) CHECK(element_order(g, 1) == n);
  }
  CHECK(make_cyclic(6).label(0) == "e");
  CHECK(make_cyclic(6).label(2) == "g^2");
  CHECK_THROWS_AS(make_cyclic(0), group_error);
}

TEST_CASE("dihedral groups satisfy the defining relations") {
  for (int n : {1, 2, 3, 4, 8, 15}) {
    const FiniteGroup g = make_dihedral(n);
    REQUIRE(g.order() == 2 * n);
    const element_t r = n >= 2 ? 1 : 0;  // rotation generator (trivial for n = 1)
    const element_t s = element_t(n);    // first reflection
    CHECK(element_order(g, r) == (n >= 2 ? n : 1));
    CHECK(element_order(g, s) == 2);
    // s r s = r^-1
    CHECK(g.mul(g.mul(s, r), s) == g.inv(r));
    CHECK(is_abelian(g) == (n <= 2));
  }
  CHECK(make_dihedral(4).label(5) == "s·r");
  CHECK_THROWS_AS(make_dihedral(0), group_error);
}

TEST_CASE("symmetric groups") {
  CHECK(make_symmetric(1).order() == 1);
  CHECK(make_symmetric(2).order() == 2);
  CHECK(make_symmetric(3).order() == 6);
  CHECK(make_symmetric(4).order() == 24);
  const FiniteGroup s3 = make_symmetric(3);
  CHECK(s3.identity() == 0);
  CHECK(s3.label(0) == "()");
  // some label is a transposition written in cycle notation
  bool saw_transposition = false;
  for (element_t x = 0; x < s3.order(); ++x)
    if (s3.label(x) == "(1 2)") saw_transposition = true;
  CHECK(saw_transposition);
  CHECK_FALSE(is_abelian(s3));
  CHECK_THROWS_AS(make_symmetric(0), group_error);
  // 8! = 40320 fits under the hard limit but most callers cap far lower;
  // the constructor itself must refuse only past the representable limit
  try {
    make_symmetric(9);  // 362880 > 65535
    FAIL("expected order_cap_exceeded");
  } catch (const group_error& e) {
    CHECK(e.code() == errc::order_cap_exceeded);
  }
}

TEST_CASE("generalized quaternion groups") {
  const FiniteGroup q8 = make_generalized_quaternion(8);
  CHECK(q8.order() == 8);
  // exactly one element of order 2 (the central involution)
  int involutions = 0;
  for (element_t x = 0; x < 8; ++x)
    if (element_order(q8, x) == 2) ++involutions;
  CHECK(involutions == 1);
  // every subgroup of Q_8 is normal
  CHECK_FALSE(is_abelian(q8));

  for (int n : {16, 32}) {
    const FiniteGroup q = make_generalized_quaternion(n);
    CHECK(q.order() == n);
    CHECK(element_order(q, 1) == n / 2);   // a
    const element_t b = element_t(n / 2);  // first element outside <a>
    CHECK(element_order(q, b) == 4);
    // b^-1 a b = a^-1
    CHECK(q.conjugate(1, b) == q.inv(1));
    int invs = 0;
    for (element_t x = 0; x < n; ++x)
      if (element_order(q, x) == 2) ++invs;
    CHECK(invs == 1);
  }
  CHECK_THROWS_AS(make_generalized_quaternion(4), group_error);
  CHECK_THROWS_AS(make_generalized_quaternion(12), group_error);
}

TEST_CASE("elementary abelian groups") {
  const FiniteGroup e8 = make_elementary_abelian(2, 3);
  CHECK(e8.order() == 8);
  CHECK(is_abelian(e8));
  for (element_t x = 1; x < 8; ++x) CHECK(element_order(e8, x) == 2);
  const FiniteGroup e9 = make_elementary_abelian(3, 2);
  CHECK(e9.order() == 9);
  for (element_t x = 1; x < 9; ++x) CHECK(element_order(e9, x) == 3);
  CHECK_THROWS_AS(make_elementary_abelian(4, 2), group_error);  // 4 is not prime
  CHECK_THROWS_AS(make_elementary_abelian(2, 0), group_error);
}

TEST_CASE("direct products multiply componentwise") {
  const FiniteGroup g = direct_product(make_symmetric(3), make_cyclic(2));
  CHECK(g.order() == 12);
  CHECK_FALSE(is_abelian(g));
  CHECK(direct_product(make_cyclic(3), make_cyclic(5)).order() == 15);
  CHECK(is_abelian(direct_product(make_cyclic(3), make_cyclic(5))));
  // label format pairs the factor labels
  CHECK(g.label(g.identity()) == "((),e)");
}

TEST_CASE("make_family dispatch") {
  CHECK(make_family("cyclic", {6}).order() == 6);
  CHECK(make_family("dihedral", {5}).order() == 10);
  CHECK(make_family("symmetric", {4}).order() == 24);
  CHECK(make_family("quaternion", {16}).order() == 16);
  CHECK(make_family("elemabelian", {3, 3}).order() == 27);
  try {
    make_family("frobnicate", {3});
    FAIL("expected bad_family");
  } catch (const group_error& e) {
    CHECK(e.code() == errc::bad_family);
  }
  try {
    make_family("cyclic", {3, 4});
    FAIL("expected bad_parameter");
  } catch (const group_error& e) {
    CHECK(e.code() == errc::bad_parameter);
  }
}

TEST_CASE("standard corpus contents") {
  const auto corpus = standard_corpus(256);
  CHECK(corpus.size() == 216);
  std::set<std::string> names;
  for (const auto& [name, g] : corpus) {
    CHECK(g.order() <= 256);
    CHECK(names.insert(name).second);  // names are unique
  }
  for (const char* expect : {"Z_1", "Z_64", "D_1", "D_128", "S_3", "S_5", "Q_8", "Q_256",
                             "E_2^2", "E_2^8", "E_3^5", "S3xZ2", "D4xZ2", "Q8xZ3", "S3xS3"}) {
    CAPTURE(expect);
    CHECK(names.count(expect) == 1);
  }
  // S_5 has order 120 <= 256; S_6 (720) must be absent
  CHECK(names.count("S_6") == 0);

  // a small cap shrinks the corpus accordingly
  const auto tiny = standard_corpus(8);
  for (const auto& [name, g] : tiny) CHECK(g.order() <= 8);
  std::set<std::string> tiny_names;
  for (const auto& [name, g] : tiny) tiny_names.insert(name);
  CHECK(tiny_names.count("Z_8") == 1);
  CHECK(tiny_names.count("Q_8") == 1);
  CHECK(tiny_names.count("S_4") == 0);
}

TEST_CASE("corpus construction is deterministic") {
  const auto a = standard_corpus(256);
  const auto b = standard_corpus(256);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CAPTURE(a[i].first);
    CHECK(a[i].first == b[i].first);
    CHECK(a[i].second.same_table(b[i].second));
  }
}

TEST_CASE("dihedral presentation relations hold for every n up to 128") {
  for (int n = 2; n <= 128; ++n) {
    CAPTURE(n);
    const FiniteGroup g = make_dihedral(n);
    REQUIRE(g.order() == 2 * n);
    const element_t r = 1;
    const element_t s = element_t(n);
    CHECK(element_order(g, r) == n);
    CHECK(element_order(g, s) == 2);
    CHECK(g.mul(g.mul(s, r), s) == g.inv(r));
  }
}

TEST_CASE("direct product center is the product of the centers") {
  const std::vector<std::pair<FiniteGroup, FiniteGroup>> pairs = {
      {make_symmetric(3), make_cyclic(2)},
      {make_dihedral(4), make_cyclic(2)},
      {make_generalized_quaternion(8), make_cyclic(3)},
      {make_symmetric(3), make_symmetric(3)},
  };
  for (const auto& [a, b] : pairs) {
    const FiniteGroup p = direct_product(a, b);
    const SubgroupSet za = center(a);
    const SubgroupSet zb = center(b);
    const SubgroupSet zp = center(p);
    int mismatches = 0;
    for (element_t i = 0; i < a.order(); ++i)
      for (element_t j = 0; j < b.order(); ++j)
        if (zp.contains(i * b.order() + j) != (za.contains(i) && zb.contains(j)))
          ++mismatches;
    CHECK(mismatches == 0);
  }
}

TEST_CASE("is_prime") {
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK(is_prime(31));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(4));
  CHECK_FALSE(is_prime(91));  // 7 * 13
}
