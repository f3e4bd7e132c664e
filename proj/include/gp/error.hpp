#ifndef GP_ERROR_HPP_
#define GP_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace gp {

enum class error_code {
  duplicate_vertex,
  self_loop,
  unknown_endpoint,
  not_a_group,
  trivial_group,
  generators_do_not_generate,
  foreign_element,
  unsupported_kind,
  syntax_error,
  unknown_vertex,
  unknown_element,
  not_cyclically_reduced,
  bfs_limit_exceeded,
  bad_face_size,
  bad_triangle_relator,
  bad_square_relator,
  identity_edge_label,
  not_planar,
  wrong_boundary_count,
  bad_map_structure,
  pattern_mismatch,
  illegal_swap,
  cap_exceeded,
  bad_spec_file,
};

inline std::string_view to_string(error_code c) noexcept {
  switch (c) {
    case error_code::duplicate_vertex: return "DuplicateVertex";
    case error_code::self_loop: return "SelfLoop";
    case error_code::unknown_endpoint: return "UnknownEndpoint";
    case error_code::not_a_group: return "NotAGroup";
    case error_code::trivial_group: return "TrivialGroup";
    case error_code::generators_do_not_generate:
      return "GeneratorsDoNotGenerate";
    case error_code::foreign_element: return "ForeignElement";
    case error_code::unsupported_kind: return "UnsupportedKind";
    case error_code::syntax_error: return "SyntaxError";
    case error_code::unknown_vertex: return "UnknownVertex";
    case error_code::unknown_element: return "UnknownElement";
    case error_code::not_cyclically_reduced: return "NotCyclicallyReduced";
    case error_code::bfs_limit_exceeded: return "BfsLimitExceeded";
    case error_code::bad_face_size: return "BadFaceSize";
    case error_code::bad_triangle_relator: return "BadTriangleRelator";
    case error_code::bad_square_relator: return "BadSquareRelator";
    case error_code::identity_edge_label: return "IdentityEdgeLabel";
    case error_code::not_planar: return "NotPlanar";
    case error_code::wrong_boundary_count: return "WrongBoundaryCount";
    case error_code::bad_map_structure: return "BadMapStructure";
    case error_code::pattern_mismatch: return "PatternMismatch";
    case error_code::illegal_swap: return "IllegalSwap";
    case error_code::cap_exceeded: return "CapExceeded";
    case error_code::bad_spec_file: return "BadSpecFile";
  }
  return "Unknown";
}

// Resource errors map to CLI exit code 3, everything else to 2.
inline bool is_resource_error(error_code c) noexcept {
  return c == error_code::bfs_limit_exceeded || c == error_code::cap_exceeded;
}

class error : public std::runtime_error {
 public:
  error(error_code c, std::string const& detail)
      : std::runtime_error(std::string(to_string(c)) + ": " + detail),
        _code(c) {}

  error_code code() const noexcept { return _code; }

 private:
  error_code _code;
};

}  // namespace gp

#endif  // GP_ERROR_HPP_
