#pragma once

#include <string>
#include <vector>

#include "flowgraph/diagnostics.hpp"

namespace flowgraph {

enum class TokenKind {
  Keyword,
  Identifier,
  IntLiteral,
  Operator,
  Punct,
};

struct Token {
  TokenKind kind;
  std::string lexeme;
  SourcePos pos;  // first character of the lexeme

  bool is(TokenKind k, std::string_view text) const {
    return kind == k && lexeme == text;
  }
};

const char* to_string(TokenKind kind);

}  // namespace flowgraph
