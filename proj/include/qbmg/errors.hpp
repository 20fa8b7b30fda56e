#pragma once

#include <stdexcept>
#include <string>

namespace qbmg {

// Every failure mode raised by the library. Rejection verdicts are *not*
// errors; they travel as return values.
enum class Errc {
  out_of_range,
  monochromatic_edge,
  duplicate_vertex,
  empty_graph,
  unknown_vertex,
  mixed_color_declaration,
  syntax_error,
  duplicate_leaf_name,
  unary_internal_node,
  single_leaf_root_trunc,
  not_a_leaf,
  not_internal_arc,
  name_mismatch,
  not_explaining,
  monochromatic_component,
  size_cap_exceeded,
  internal_inconsistency,
  invalid_config,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace qbmg
