#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gnorm {

// Permutations on [0, degree) as image vectors: p[i] is where i goes.
// The product convention everywhere in this project is left-to-right:
// compose(p, q) applies p first, then q.
using Perm = std::vector<std::int32_t>;

inline Perm identity_perm(int degree) {
  Perm p(degree);
  for (int i = 0; i < degree; ++i) p[i] = i;
  return p;
}

inline Perm compose(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
  return r;
}

bool is_permutation(const Perm& p, int degree);

// Disjoint-cycle display, cycles keyed by least moved point: "(0 1 2)(3 4)",
// identity rendered "()".
std::string cycle_string(const Perm& p);

struct PermHash {
  std::size_t operator()(const Perm& p) const {
    std::size_t h = 1469598103934665603ull;
    for (auto v : p) {
      h ^= std::size_t(v) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace gnorm
