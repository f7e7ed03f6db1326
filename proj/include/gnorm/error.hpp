#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gnorm {

// Error categories raised by group construction, subgroup algebra, series
// computation and file I/O. Every throwing operation documents which of these
// it can raise.
enum class errc {
  not_latin_square,
  not_associative,
  no_identity,
  no_inverse,
  order_cap_exceeded,
  not_a_permutation,
  not_normal,
  bad_parameter,
  not_a_subgroup,
  parent_mismatch,
  not_contained,
  parse_error,
  validation_error,
  internal_invariant_violated,
  bad_family,
  io_failure,
};

std::string_view errc_name(errc code);

// Carries the category plus an optional integer witness (element indices,
// a failing triple, ...) so callers can re-check the reported defect.
class group_error : public std::runtime_error {
 public:
  group_error(errc code, const std::string& message, std::vector<int> witness = {})
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code),
        witness_(std::move(witness)) {}

  errc code() const noexcept { return code_; }
  const std::vector<int>& witness() const noexcept { return witness_; }

 private:
  errc code_;
  std::vector<int> witness_;
};

// Parse failure with a source position, thrown by the .cay/.perm readers.
class parse_error : public group_error {
 public:
  parse_error(const std::string& message, int line, int column)
      : group_error(errc::parse_error,
                    message + " (line " + std::to_string(line) + ", column " +
                        std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace gnorm
