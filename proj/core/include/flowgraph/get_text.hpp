#pragma once

#include <string>

#include "flowgraph/ast.hpp"

namespace flowgraph {

/// Deterministic concrete syntax of an expression. Binary operands and
/// assignment sides are separated by single spaces; prefix/postfix
/// operators attach directly; parenthesized expressions keep their parens.
std::string get_text(const Expr& e);

/// Deterministic concrete syntax of a statement, recursively rendering
/// nested statements. Output re-parses to a structurally equal statement.
std::string get_text(const Stmt& s);

/// "name(type name, ...)" signature used as the method node label.
std::string signature_text(const Method& m);

}  // namespace flowgraph
