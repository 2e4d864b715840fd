#include "idealgraph/error.hpp"

namespace idealgraph {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::unknown_vertex: return "unknown vertex";
    case Errc::unknown_edge: return "unknown edge";
    case Errc::malformed_document: return "malformed document";
    case Errc::dangling_endpoint: return "dangling endpoint";
    case Errc::duplicate_name: return "duplicate name";
    case Errc::invalid_name: return "invalid name";
    case Errc::invalid_multiplicity: return "invalid multiplicity";
    case Errc::not_composable: return "edges do not compose";
    case Errc::non_admissible: return "pair is not admissible";
    case Errc::bound_exceeded: return "bound exceeded";
    case Errc::name_collision: return "name collision";
    case Errc::infinite_path_set: return "infinite path set";
    case Errc::field_mismatch: return "scalar field mismatch";
    case Errc::algebra_mismatch: return "elements of different algebras";
    case Errc::division_by_zero: return "division by zero";
    case Errc::not_prime: return "modulus is not prime";
    case Errc::parse_error: return "parse error";
    case Errc::ill_formed: return "ill-formed input";
    case Errc::degree_overflow: return "degree overflow";
    case Errc::outside_window: return "outside truncation window";
    case Errc::not_in_ideal: return "element not in ideal window";
    case Errc::unknown_generator: return "unknown generator";
  }
  return "error";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace idealgraph
