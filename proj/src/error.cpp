#include "gnorm/error.hpp"

namespace gnorm {

std::string_view errc_name(errc code) {
  switch (code) {
    case errc::not_latin_square: return "not-latin-square";
    case errc::not_associative: return "not-associative";
    case errc::no_identity: return "no-identity";
    case errc::no_inverse: return "no-inverse";
    case errc::order_cap_exceeded: return "order-cap-exceeded";
    case errc::not_a_permutation: return "not-a-permutation";
    case errc::not_normal: return "not-normal";
    case errc::bad_parameter: return "bad-parameter";
    case errc::not_a_subgroup: return "not-a-subgroup";
    case errc::parent_mismatch: return "parent-mismatch";
    case errc::not_contained: return "not-contained";
    case errc::parse_error: return "parse-error";
    case errc::validation_error: return "validation-error";
    case errc::internal_invariant_violated: return "internal-invariant-violated";
    case errc::bad_family: return "bad-family";
    case errc::io_failure: return "io-failure";
  }
  return "unknown-error";
}

}  // namespace gnorm
