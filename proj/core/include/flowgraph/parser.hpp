#pragma once

#include <memory>
#include <string_view>
#include <vector>

#include "flowgraph/ast.hpp"
#include "flowgraph/token.hpp"

namespace flowgraph {

/// Parses a whole compilation unit and checks name/label bindings.
/// Throws ParseError or BindError.
ClassDecl parse_program(const std::vector<Token>& tokens);

/// tokenize + parse_program in one step.
ClassDecl parse_program(std::string_view source);

/// Syntax-only entry points: parse exactly one statement / expression,
/// consuming all input, without binding checks. Used for re-parsing
/// pretty-printed fragments.
std::unique_ptr<Stmt> parse_statement(std::string_view source);
std::unique_ptr<Expr> parse_expression(std::string_view source);

/// Name, label and jump checks over a parsed class; throws BindError.
/// parse_program runs this automatically.
void check_bindings(const ClassDecl& cls);

}  // namespace flowgraph
