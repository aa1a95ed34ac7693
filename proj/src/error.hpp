#pragma once

#include <stdexcept>
#include <string>

namespace cdalloy {

enum class ErrorCode {
  InvalidArgument,   // bad scope, empty diagram list, ...
  NotValidated,      // diagram with validation diagnostics passed to an op
  DuplicateCdName,   // two input diagrams share a name
  UnknownName,       // lookup of an undeclared class/interface/enum
  UnknownExprLeaf,   // analysis expression references an unknown diagram
  ExprSyntax,        // malformed analysis expression
  NameClash,         // input name collides with the generated module's namespace
  EvalUniverse,      // object model not expressible in the module's universe
  XmlMalformed,      // broken Alloy instance XML
  UniverseMismatch,  // instance sig/field outside the diagrams' universe
  Io,
  Internal,
};

class CdError : public std::runtime_error {
 public:
  CdError(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cdalloy
