#include "gnorm/families.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "gnorm/error.hpp"
#include "gnorm/perm.hpp"

namespace gnorm {

namespace {

void check_order_representable(long long order, const char* family) {
  if (order > kHardOrderLimit) {
    throw group_error(errc::order_cap_exceeded,
                      std::string(family) + " group of order " + std::to_string(order) +
                          " exceeds the representable limit");
  }
}

}  // namespace

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; 1LL * d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FiniteGroup make_cyclic(int n) {
  if (n < 1) throw group_error(errc::bad_parameter, "cyclic order must be positive");
  check_order_representable(n, "cyclic");
  std::vector<element_t> flat(std::size_t(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) flat[std::size_t(i) * n + j] = element_t((i + j) % n);
  std::vector<std::string> labels(static_cast<std::size_t>(n));
  labels[0] = "e";
  for (int i = 1; i < n; ++i) labels[std::size_t(i)] = i == 1 ? "g" : "g^" + std::to_string(i);
  return FiniteGroup::unchecked(n, std::move(flat), std::move(labels));
}

FiniteGroup make_dihedral(int n) {
  if (n < 1) throw group_error(errc::bad_parameter, "dihedral parameter must be positive");
  check_order_representable(2LL * n, "dihedral");
  const int order = 2 * n;
  // 0..n-1 are r^i; n..2n-1 are s·r^{i-n}. With s r s = r^-1:
  //   r^a (s r^b)   = s r^{b-a}
  //   (s r^a) r^b   = s r^{a+b}
  //   (s r^a)(s r^b) = r^{b-a}
  std::vector<element_t> flat(std::size_t(order) * order);
  const auto rot = [&](int k) { return element_t(((k % n) + n) % n); };
  const auto ref = [&](int k) { return element_t(n + ((k % n) + n) % n); };
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      flat[std::size_t(a) * order + b] = rot(a + b);
      flat[std::size_t(a) * order + (n + b)] = ref(b - a);
      flat[std::size_t(n + a) * order + b] = ref(a + b);
      flat[std::size_t(n + a) * order + (n + b)] = rot(b - a);
    }
  }
  std::vector<std::string> labels(static_cast<std::size_t>(order));
  for (int i = 0; i < n; ++i) {
    labels[std::size_t(i)] = i == 0 ? "e" : (i == 1 ? "r" : "r^" + std::to_string(i));
    labels[std::size_t(n + i)] =
        i == 0 ? "s" : (i == 1 ? "s·r" : "s·r^" + std::to_string(i));
  }
  return FiniteGroup::unchecked(order, std::move(flat), std::move(labels));
}

FiniteGroup make_symmetric(int k) {
  if (k < 1) throw group_error(errc::bad_parameter, "symmetric degree must be positive");
  long long order = 1;
  for (int i = 2; i <= k; ++i) {
    order *= i;
    if (order > kHardOrderLimit) check_order_representable(order, "symmetric");
  }
  std::vector<Perm> elems;
  elems.reserve(std::size_t(order));
  Perm p = identity_perm(k);
  do {
    elems.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::unordered_map<Perm, element_t, PermHash> index;
  index.reserve(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], element_t(i));
  const int n = int(elems.size());
  std::vector<element_t> flat(std::size_t(n) * n);
  std::vector<std::string> labels(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    labels[std::size_t(i)] = cycle_string(elems[std::size_t(i)]);
    for (int j = 0; j < n; ++j) {
      flat[std::size_t(i) * n + j] =
          index.at(compose(elems[std::size_t(i)], elems[std::size_t(j)]));
    }
  }
  return FiniteGroup::unchecked(n, std::move(flat), std::move(labels));
}

FiniteGroup make_generalized_quaternion(int n) {
  if (n < 8 || (n & (n - 1)) != 0) {
    throw group_error(errc::bad_parameter,
                      "generalized quaternion order must be a power of two >= 8, got " +
                          std::to_string(n));
  }
  check_order_representable(n, "generalized quaternion");
  const int m = n / 2;  // order of a
  // 0..m-1 are a^i; m..n-1 are a^{i-m}·b. With b^2 = a^{m/2}, b a = a^-1 b:
  //   a^i (a^j b)    = a^{i+j} b
  //   (a^i b) a^j    = a^{i-j} b
  //   (a^i b)(a^j b) = a^{i-j+m/2}
  std::vector<element_t> flat(std::size_t(n) * n);
  const auto amod = [&](int k) { return ((k % m) + m) % m; };
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      flat[std::size_t(i) * n + j] = element_t(amod(i + j));
      flat[std::size_t(i) * n + (m + j)] = element_t(m + amod(i + j));
      flat[std::size_t(m + i) * n + j] = element_t(m + amod(i - j));
      flat[std::size_t(m + i) * n + (m + j)] = element_t(amod(i - j + m / 2));
    }
  }
  std::vector<std::string> labels(static_cast<std::size_t>(n));
  for (int i = 0; i < m; ++i) {
    labels[std::size_t(i)] = i == 0 ? "e" : (i == 1 ? "a" : "a^" + std::to_string(i));
    labels[std::size_t(m + i)] =
        i == 0 ? "b" : (i == 1 ? "a·b" : "a^" + std::to_string(i) + "·b");
  }
  return FiniteGroup::unchecked(n, std::move(flat), std::move(labels));
}

FiniteGroup make_elementary_abelian(int p, int k) {
  if (!is_prime(p)) {
    throw group_error(errc::bad_parameter,
                      "elementary abelian base must be prime, got " + std::to_string(p));
  }
  if (k < 1) throw group_error(errc::bad_parameter, "elementary abelian rank must be positive");
  long long order = 1;
  for (int i = 0; i < k; ++i) {
    order *= p;
    check_order_representable(order, "elementary abelian");
  }
  const int n = int(order);
  std::vector<element_t> flat(std::size_t(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      // Add base-p digit vectors componentwise.
      int x = i, y = j, out = 0, place = 1;
      for (int t = 0; t < k; ++t) {
        out += ((x % p + y % p) % p) * place;
        x /= p;
        y /= p;
        place *= p;
      }
      flat[std::size_t(i) * n + j] = element_t(out);
    }
  }
  std::vector<std::string> labels(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::string s = "(";
    int x = i;
    for (int t = 0; t < k; ++t) {
      if (t) s += ',';
      s += std::to_string(x % p);
      x /= p;
    }
    s += ')';
    labels[std::size_t(i)] = std::move(s);
  }
  return FiniteGroup::unchecked(n, std::move(flat), std::move(labels));
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const long long order = 1LL * g.order() * h.order();
  check_order_representable(order, "product");
  const int n = int(order);
  const int hn = h.order();
  std::vector<element_t> flat(std::size_t(n) * n);
  for (int i1 = 0; i1 < g.order(); ++i1)
    for (int j1 = 0; j1 < hn; ++j1)
      for (int i2 = 0; i2 < g.order(); ++i2)
        for (int j2 = 0; j2 < hn; ++j2)
          flat[std::size_t(i1 * hn + j1) * n + (i2 * hn + j2)] =
              element_t(g.mul(i1, i2) * hn + h.mul(j1, j2));
  std::vector<std::string> labels(static_cast<std::size_t>(n));
  for (int i = 0; i < g.order(); ++i)
    for (int j = 0; j < hn; ++j)
      labels[std::size_t(i * hn + j)] = "(" + g.label(i) + "," + h.label(j) + ")";
  return FiniteGroup::unchecked(n, std::move(flat), std::move(labels));
}

FiniteGroup make_family(const std::string& family, const std::vector<int>& args) {
  const auto want = [&](std::size_t n) {
    if (args.size() != n) {
      throw group_error(errc::bad_parameter, "family '" + family + "' takes " +
                                                 std::to_string(n) + " parameter(s), got " +
                                                 std::to_string(args.size()));
    }
  };
  if (family == "cyclic") {
    want(1);
    return make_cyclic(args[0]);
  }
  if (family == "dihedral") {
    want(1);
    return make_dihedral(args[0]);
  }
  if (family == "symmetric") {
    want(1);
    return make_symmetric(args[0]);
  }
  if (family == "quaternion") {
    want(1);
    return make_generalized_quaternion(args[0]);
  }
  if (family == "elemabelian") {
    want(2);
    return make_elementary_abelian(args[0], args[1]);
  }
  throw group_error(errc::bad_family, "unknown family '" + family + "'");
}

std::vector<std::pair<std::string, FiniteGroup>> standard_corpus(int max_order) {
  if (max_order < 1) throw group_error(errc::bad_parameter, "max order must be positive");
  std::vector<std::pair<std::string, FiniteGroup>> out;
  for (int n = 1; n <= std::min(64, max_order); ++n)
    out.emplace_back("Z_" + std::to_string(n), make_cyclic(n));
  for (int n = 1; 2 * n <= max_order; ++n)
    out.emplace_back("D_" + std::to_string(n), make_dihedral(n));
  for (int k = 3; k <= 5; ++k) {
    long long order = 1;
    for (int i = 2; i <= k; ++i) order *= i;
    if (order <= max_order) out.emplace_back("S_" + std::to_string(k), make_symmetric(k));
  }
  for (int n = 8; n <= max_order; n *= 2)
    out.emplace_back("Q_" + std::to_string(n), make_generalized_quaternion(n));
  for (int p : {2, 3}) {
    for (int k = 2; ; ++k) {
      long long order = 1;
      for (int i = 0; i < k; ++i) order *= p;
      if (order > max_order) break;
      out.emplace_back("E_" + std::to_string(p) + "^" + std::to_string(k),
                       make_elementary_abelian(p, k));
    }
  }
  struct ProductSpec {
    const char* name;
    int order;
    FiniteGroup (*build)();
  };
  const ProductSpec products[] = {
      {"S3xZ2", 12, [] { return direct_product(make_symmetric(3), make_cyclic(2)); }},
      {"D4xZ2", 16, [] { return direct_product(make_dihedral(4), make_cyclic(2)); }},
      {"Q8xZ3", 24, [] { return direct_product(make_generalized_quaternion(8), make_cyclic(3)); }},
      {"S3xS3", 36, [] { return direct_product(make_symmetric(3), make_symmetric(3)); }},
  };
  for (const auto& spec : products) {
    if (spec.order <= max_order) out.emplace_back(spec.name, spec.build());
  }
  return out;
}

}  // namespace gnorm
