#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace cdalloy {

struct SourceSpan {
  std::string file;
  int line = 1;    // 1-based
  int column = 1;  // 1-based

  bool operator==(const SourceSpan&) const = default;
};

enum class TokKind {
  Ident,
  Number,
  LBrace, RBrace,
  LParen, RParen,
  LBracket, RBracket,
  Semi, Comma, Colon, Dot, DotDot,
  Star, Equals, Hash,
  ArrowRight,  // ->
  ArrowLeft,   // <-
  ArrowBoth,   // <->
  End,
  Bad,  // unrecognizable input; text holds the offending character
};

struct Token {
  TokKind kind;
  std::string text;
  SourceSpan span;
};

// Splits UTF-8 input into tokens. Never throws: unknown bytes become Bad
// tokens for the parser to report. Comments run from "//" to end of line,
// CRLF is accepted, identifiers are ASCII [A-Za-z_][A-Za-z0-9_]*.
std::vector<Token> lex(std::string_view text, std::string_view file);

const char* token_name(TokKind k);

}  // namespace cdalloy
