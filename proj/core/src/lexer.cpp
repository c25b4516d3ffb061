#include "flowgraph/lexer.hpp"

#include <array>
#include <cctype>

namespace flowgraph {

namespace {

bool is_keyword(std::string_view word) {
  static constexpr std::array<std::string_view, 15> kKeywords = {
      "public", "private", "static", "class",    "int",
      "boolean", "void",   "if",     "else",     "while",
      "return", "break",  "continue", "true",    "false",
  };
  for (auto k : kKeywords) {
    if (k == word) return true;
  }
  return false;
}

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

}  // namespace

const char* to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::Keyword: return "keyword";
    case TokenKind::Identifier: return "identifier";
    case TokenKind::IntLiteral: return "integer literal";
    case TokenKind::Operator: return "operator";
    case TokenKind::Punct: return "punctuation";
  }
  return "token";
}

std::vector<Token> tokenize(std::string_view source) {
  std::vector<Token> tokens;
  size_t i = 0;
  int line = 1;
  int col = 1;

  auto bump = [&](size_t n = 1) {
    for (size_t k = 0; k < n; ++k) {
      if (i < source.size() && source[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };

  while (i < source.size()) {
    char c = source[i];

    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      bump();
      continue;
    }
    if (c == '/' && i + 1 < source.size() && source[i + 1] == '/') {
      while (i < source.size() && source[i] != '\n') bump();
      continue;
    }
    if (c == '/' && i + 1 < source.size() && source[i + 1] == '*') {
      SourcePos start{line, col};
      bump(2);
      bool closed = false;
      while (i < source.size()) {
        if (source[i] == '*' && i + 1 < source.size() && source[i + 1] == '/') {
          bump(2);
          closed = true;
          break;
        }
        bump();
      }
      if (!closed) throw LexError("unterminated block comment", start);
      continue;
    }

    SourcePos pos{line, col};

    if (is_ident_start(c)) {
      size_t start = i;
      while (i < source.size() && is_ident_char(source[i])) bump();
      std::string word(source.substr(start, i - start));
      tokens.push_back({is_keyword(word) ? TokenKind::Keyword : TokenKind::Identifier,
                        std::move(word), pos});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = i;
      while (i < source.size() && std::isdigit(static_cast<unsigned char>(source[i]))) bump();
      tokens.push_back({TokenKind::IntLiteral, std::string(source.substr(start, i - start)), pos});
      continue;
    }

    // Two-character operators take precedence over their one-character prefixes.
    auto two = i + 1 < source.size() ? source.substr(i, 2) : std::string_view{};
    static constexpr std::array<std::string_view, 8> kTwoCharOps = {
        "==", "!=", "<=", ">=", "+=", "-=", "++", "--"};
    bool matched = false;
    for (auto op : kTwoCharOps) {
      if (two == op) {
        tokens.push_back({TokenKind::Operator, std::string(op), pos});
        bump(2);
        matched = true;
        break;
      }
    }
    if (matched) continue;

    if (std::string_view("=<>+-*/%!").find(c) != std::string_view::npos) {
      tokens.push_back({TokenKind::Operator, std::string(1, c), pos});
      bump();
      continue;
    }
    if (std::string_view("(){};,:").find(c) != std::string_view::npos) {
      tokens.push_back({TokenKind::Punct, std::string(1, c), pos});
      bump();
      continue;
    }

    throw LexError(std::string("unexpected character '") + c + "'", pos);
  }

  return tokens;
}

}  // namespace flowgraph
