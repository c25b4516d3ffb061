#pragma once

#include <memory>
#include <string>
#include <vector>

#include "flowgraph/diagnostics.hpp"

namespace flowgraph {

enum class ExprKind {
  Assign,         // name op rhs, op one of = += -=
  Binary,         // lhs op rhs
  Unary,          // op lhs, op one of - !
  PostfixIncDec,  // lhs op, op one of ++ --
  VarRef,         // name
  IntLit,         // literal (decimal digits, kept as written)
  BoolLit,        // bool_value
  Call,           // name(args)
};

struct Expr {
  ExprKind kind;
  SourcePos pos;
  bool parenthesized = false;  // expression was written as "( ... )"

  std::string op;
  std::string name;
  std::string literal;
  bool bool_value = false;

  std::unique_ptr<Expr> lhs;  // Binary left, Unary/PostfixIncDec operand
  std::unique_ptr<Expr> rhs;  // Binary right, Assign value
  std::vector<std::unique_ptr<Expr>> args;
};

enum class StmtKind {
  Block,
  VarDecl,
  If,
  While,
  Return,
  Break,
  Continue,
  Labeled,
  ExprStmt,
};

struct Stmt {
  StmtKind kind;
  SourcePos pos;

  std::string type_name;  // VarDecl
  std::string name;       // VarDecl name, Break/Continue label ("" if none), Labeled label

  std::unique_ptr<Expr> expr;         // VarDecl init, If/While cond, Return value, ExprStmt
  std::unique_ptr<Stmt> body;         // While body, Labeled wrapped loop
  std::unique_ptr<Stmt> then_branch;  // If
  std::unique_ptr<Stmt> else_branch;  // If, may be null
  std::vector<std::unique_ptr<Stmt>> stmts;  // Block
};

struct Param {
  std::string type_name;
  std::string name;
  SourcePos pos;
};

struct Method {
  std::string name;
  std::string return_type;
  std::vector<std::string> modifiers;
  std::vector<Param> params;
  std::unique_ptr<Stmt> body;  // always a Block
  SourcePos pos;
};

struct ClassDecl {
  std::string name;
  bool is_public = false;
  std::vector<Method> methods;
  SourcePos pos;
};

/// Structural comparison ignoring source positions. With ignore_parens,
/// the parenthesized flag is not compared either ("up to parentheses").
bool structurally_equal(const Expr& a, const Expr& b, bool ignore_parens = true);
bool structurally_equal(const Stmt& a, const Stmt& b, bool ignore_parens = true);

}  // namespace flowgraph
