#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ast.hpp"
#include "lexer.hpp"

namespace cdalloy {

struct ParseError {
  SourceSpan span;
  std::string message;
  std::vector<std::string> expected;  // token/keyword descriptions, sorted
};

using ParseOutcome = std::variant<ClassDiagram, ParseError>;

// Parses the textual class-diagram language:
//
//   classdiagram Name {
//     enum Color { red, green }
//     interface I extends J;
//     [abstract] class C [extends A, B] [implements I] { int size; }
//     [composition] association A [1] (roleA) <-> (roleB) [0..3] B;
//   }
//
// Class bodies may be omitted by terminating with ';'. A multiplicity is
// [n..m], [n..*] or [n] (meaning n..n) and defaults to [0..*] when omitted.
// Comments run from // to end of line. Parsing is total: every input yields
// either a diagram or a ParseError, and validation is a separate pass.
ParseOutcome parse_cd(std::string_view text, std::string_view file = "<input>");

inline bool parse_ok(const ParseOutcome& r) { return std::holds_alternative<ClassDiagram>(r); }

// Canonical textual form; reparsing yields a structurally equal diagram.
std::string print_cd(const ClassDiagram& cd);

std::string format_parse_error(const ParseError& e);

}  // namespace cdalloy
