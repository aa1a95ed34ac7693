#pragma once

#include <string>
#include <vector>

#include "ast.hpp"

namespace cdalloy {

// Stable machine-readable diagnostic codes.
namespace diag {
inline constexpr const char* kDuplicateTypeName = "DUPLICATE_TYPE_NAME";
inline constexpr const char* kReservedTypeName = "RESERVED_TYPE_NAME";
inline constexpr const char* kDuplicateAttribute = "DUPLICATE_ATTRIBUTE";
inline constexpr const char* kDuplicateEnumLiteral = "DUPLICATE_ENUM_LITERAL";
inline constexpr const char* kEmptyEnum = "EMPTY_ENUM";
inline constexpr const char* kSelfInheritance = "SELF_INHERITANCE";
inline constexpr const char* kCycleInInheritance = "CYCLE_IN_INHERITANCE";
inline constexpr const char* kUnresolvedType = "UNRESOLVED_TYPE";
inline constexpr const char* kInvalidSupertype = "INVALID_SUPERTYPE";
inline constexpr const char* kInvalidInterface = "INVALID_INTERFACE";
inline constexpr const char* kInvalidAssocEnd = "INVALID_ASSOC_END";
inline constexpr const char* kInvalidMultiplicity = "INVALID_MULTIPLICITY";
inline constexpr const char* kMissingRoleName = "MISSING_ROLE_NAME";
inline constexpr const char* kInvalidComposition = "INVALID_COMPOSITION";
inline constexpr const char* kDuplicateField = "DUPLICATE_FIELD";
inline constexpr const char* kConflictingInheritedField = "CONFLICTING_INHERITED_FIELD";
}  // namespace diag

struct Diagnostic {
  std::string code;     // one of the diag:: constants
  std::string element;  // offending declaration, e.g. "Car" or "Driver.drives"
  std::string message;

  bool operator==(const Diagnostic&) const = default;
};

// Checks every well-formedness condition of a diagram. Returns an empty list
// iff the diagram is well-formed; diagnostics come in declaration order and
// the function is pure. Flattening conflicts are only reported once naming
// and inheritance are clean, since they cannot be decided otherwise.
std::vector<Diagnostic> validate(const ClassDiagram& cd);

}  // namespace cdalloy
