#pragma once

#include <stdexcept>
#include <string>

namespace flowgraph {

/// 1-based position of a character in an input file.
struct SourcePos {
  int line = 0;
  int column = 0;

  bool operator==(const SourcePos&) const = default;
  bool operator<(const SourcePos& o) const {
    return line != o.line ? line < o.line : column < o.column;
  }
};

/// Base for all errors that point at a position in some input text.
/// what() carries the bare message; pos() the location.
class DiagnosticError : public std::runtime_error {
 public:
  DiagnosticError(const std::string& message, SourcePos pos)
      : std::runtime_error(message), pos_(pos) {}

  SourcePos pos() const { return pos_; }

 private:
  SourcePos pos_;
};

/// Character outside the language alphabet, unterminated comment.
class LexError : public DiagnosticError {
 public:
  using DiagnosticError::DiagnosticError;
};

/// Unexpected token while matching the grammar.
class ParseError : public DiagnosticError {
 public:
  using DiagnosticError::DiagnosticError;
};

/// Name resolution failures: unknown variable, duplicate declaration,
/// bad label, break/continue outside a loop.
class BindError : public DiagnosticError {
 public:
  using DiagnosticError::DiagnosticError;
};

/// Syntax error in a flow-specification file.
class SpecParseError : public DiagnosticError {
 public:
  using DiagnosticError::DiagnosticError;
};

/// A condition the earlier pipeline stages are supposed to rule out.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace flowgraph
