#include "lexer.hpp"

#include <cctype>

namespace cdalloy {

const char* token_name(TokKind k) {
  switch (k) {
    case TokKind::Ident: return "identifier";
    case TokKind::Number: return "number";
    case TokKind::LBrace: return "'{'";
    case TokKind::RBrace: return "'}'";
    case TokKind::LParen: return "'('";
    case TokKind::RParen: return "')'";
    case TokKind::LBracket: return "'['";
    case TokKind::RBracket: return "']'";
    case TokKind::Semi: return "';'";
    case TokKind::Comma: return "','";
    case TokKind::Colon: return "':'";
    case TokKind::Dot: return "'.'";
    case TokKind::DotDot: return "'..'";
    case TokKind::Star: return "'*'";
    case TokKind::Equals: return "'='";
    case TokKind::Hash: return "'#'";
    case TokKind::ArrowRight: return "'->'";
    case TokKind::ArrowLeft: return "'<-'";
    case TokKind::ArrowBoth: return "'<->'";
    case TokKind::End: return "end of input";
    case TokKind::Bad: return "invalid character";
  }
  return "?";
}

std::vector<Token> lex(std::string_view text, std::string_view file) {
  std::vector<Token> out;
  int line = 1, col = 1;
  size_t i = 0;
  auto span = [&]() { return SourceSpan{std::string(file), line, col}; };
  auto advance = [&](size_t n) {
    for (size_t k = 0; k < n; ++k) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  auto push = [&](TokKind kind, size_t len) {
    out.push_back({kind, std::string(text.substr(i, len)), span()});
    advance(len);
  };

  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    if (c == '/' && i + 1 < text.size() && text[i + 1] == '/') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t len = 1;
      while (i + len < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i + len])) || text[i + len] == '_'))
        ++len;
      push(TokKind::Ident, len);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t len = 1;
      while (i + len < text.size() && std::isdigit(static_cast<unsigned char>(text[i + len])))
        ++len;
      push(TokKind::Number, len);
      continue;
    }
    switch (c) {
      case '{': push(TokKind::LBrace, 1); continue;
      case '}': push(TokKind::RBrace, 1); continue;
      case '(': push(TokKind::LParen, 1); continue;
      case ')': push(TokKind::RParen, 1); continue;
      case '[': push(TokKind::LBracket, 1); continue;
      case ']': push(TokKind::RBracket, 1); continue;
      case ';': push(TokKind::Semi, 1); continue;
      case ',': push(TokKind::Comma, 1); continue;
      case ':': push(TokKind::Colon, 1); continue;
      case '*': push(TokKind::Star, 1); continue;
      case '=': push(TokKind::Equals, 1); continue;
      case '#': push(TokKind::Hash, 1); continue;
      case '.':
        if (i + 1 < text.size() && text[i + 1] == '.') {
          push(TokKind::DotDot, 2);
        } else {
          push(TokKind::Dot, 1);
        }
        continue;
      case '-':
        if (i + 1 < text.size() && text[i + 1] == '>') {
          push(TokKind::ArrowRight, 2);
          continue;
        }
        break;
      case '<':
        if (i + 2 < text.size() && text[i + 1] == '-' && text[i + 2] == '>') {
          push(TokKind::ArrowBoth, 3);
          continue;
        }
        if (i + 1 < text.size() && text[i + 1] == '-') {
          push(TokKind::ArrowLeft, 2);
          continue;
        }
        break;
      default:
        break;
    }
    push(TokKind::Bad, 1);
  }
  out.push_back({TokKind::End, "", span()});
  return out;
}

}  // namespace cdalloy
