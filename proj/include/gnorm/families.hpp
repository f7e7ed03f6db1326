#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gnorm/group.hpp"

namespace gnorm {

// Cyclic group of order n, generator g, labels e, g, g^2, ...
FiniteGroup make_cyclic(int n);

// Dihedral group of order 2n on relations r^n = s^2 = 1, s r s = r^-1.
// Labels e, r, ..., r^{n-1}, s, s·r, ..., s·r^{n-1}.
FiniteGroup make_dihedral(int n);

// Symmetric group on {0, ..., k-1}; elements enumerated in lexicographic
// one-line order (identity first), labels in cycle notation.
FiniteGroup make_symmetric(int k);

// Generalized quaternion group of order n = 2^k, k >= 3, on relations
// a^{n/2} = 1, b^2 = a^{n/4}, b a b^-1 = a^-1.
FiniteGroup make_generalized_quaternion(int n);

// Direct power (Z_p)^k of a cyclic group of prime order p.
FiniteGroup make_elementary_abelian(int p, int k);

// Direct product; element (x, y) gets index x * |h| + y and the label
// (label_g(x),label_h(y)).
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

// Dispatch for the family names used on the command line:
//   cyclic n | dihedral n | symmetric n | quaternion n | elemabelian p k
// (quaternion's n is the group order). Unknown names raise bad_family;
// wrong argument counts or values raise bad_parameter.
FiniteGroup make_family(const std::string& family, const std::vector<int>& args);

// Fixed catalogue of test groups with order <= max_order, in a stable
// documented order: cyclic Z_1..Z_64, dihedral D_1..D_{max/2}, symmetric
// S_3..S_5, generalized quaternion Q_8.., elementary abelian 2^k and 3^k
// (k >= 2), then four mixed direct products.
std::vector<std::pair<std::string, FiniteGroup>> standard_corpus(int max_order);

bool is_prime(int n);

}  // namespace gnorm
