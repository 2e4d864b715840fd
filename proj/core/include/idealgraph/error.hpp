#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace idealgraph {

/// Diagnostic categories. Each rejection path in the library maps to exactly one.
enum class Errc {
  unknown_vertex,
  unknown_edge,
  malformed_document,
  dangling_endpoint,
  duplicate_name,
  invalid_name,
  invalid_multiplicity,
  not_composable,
  non_admissible,
  bound_exceeded,
  name_collision,
  infinite_path_set,
  field_mismatch,
  algebra_mismatch,
  division_by_zero,
  not_prime,
  parse_error,
  ill_formed,
  degree_overflow,
  outside_window,
  not_in_ideal,
  unknown_generator,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace idealgraph
