#pragma once

#include <iosfwd>
#include <string>

#include "gnorm/group.hpp"
#include "gnorm/perm.hpp"

namespace gnorm {

// Cayley-table format:
//
//   cayley <order>
//   <order * order integers, row-major, whitespace separated>
//   label <index> <text to end of line>     (optional, repeatable)
//
// '#' starts a comment running to end of line. Entry row i, column j is
// the product (element i) * (element j). Labels may not contain '#'.
FiniteGroup read_cayley(std::istream& in, int order_cap = kDefaultOrderCap);

// Permutation-generator format:
//
//   perm <degree>
//   <one generator per line, product of cycles, e.g. (0 1 2)(3 4)>
//
// Points are 0-based; "()" denotes the identity. The group is the closure
// of the generators, with an order cap guarding the enumeration.
FiniteGroup read_permutation_group(std::istream& in, int order_cap = kDefaultOrderCap);

// Dispatches on the first token ("cayley" or "perm").
FiniteGroup read_group(std::istream& in, int order_cap = kDefaultOrderCap);
FiniteGroup read_group_file(const std::string& path, int order_cap = kDefaultOrderCap);

// Writes the Cayley-table format; emits label lines only when the group
// carries labels.
void write_cayley(std::ostream& out, const FiniteGroup& g);

// Parses a product of cycles over {0, ..., degree-1}; cycles are applied
// left to right. Exposed for direct testing.
Perm parse_cycles(const std::string& text, int degree, int line_for_errors = 0);

}  // namespace gnorm
