#include "flowgraph/ast.hpp"

namespace flowgraph {

namespace {

bool both_or_neither(const void* a, const void* b) {
  return (a == nullptr) == (b == nullptr);
}

}  // namespace

bool structurally_equal(const Expr& a, const Expr& b, bool ignore_parens) {
  if (a.kind != b.kind) return false;
  if (!ignore_parens && a.parenthesized != b.parenthesized) return false;
  if (a.op != b.op || a.name != b.name || a.literal != b.literal ||
      a.bool_value != b.bool_value) {
    return false;
  }
  if (!both_or_neither(a.lhs.get(), b.lhs.get()) ||
      !both_or_neither(a.rhs.get(), b.rhs.get())) {
    return false;
  }
  if (a.lhs && !structurally_equal(*a.lhs, *b.lhs, ignore_parens)) return false;
  if (a.rhs && !structurally_equal(*a.rhs, *b.rhs, ignore_parens)) return false;
  if (a.args.size() != b.args.size()) return false;
  for (size_t i = 0; i < a.args.size(); ++i) {
    if (!structurally_equal(*a.args[i], *b.args[i], ignore_parens)) return false;
  }
  return true;
}

bool structurally_equal(const Stmt& a, const Stmt& b, bool ignore_parens) {
  if (a.kind != b.kind) return false;
  if (a.type_name != b.type_name || a.name != b.name) return false;
  if (!both_or_neither(a.expr.get(), b.expr.get()) ||
      !both_or_neither(a.body.get(), b.body.get()) ||
      !both_or_neither(a.then_branch.get(), b.then_branch.get()) ||
      !both_or_neither(a.else_branch.get(), b.else_branch.get())) {
    return false;
  }
  if (a.expr && !structurally_equal(*a.expr, *b.expr, ignore_parens)) return false;
  if (a.body && !structurally_equal(*a.body, *b.body, ignore_parens)) return false;
  if (a.then_branch && !structurally_equal(*a.then_branch, *b.then_branch, ignore_parens)) {
    return false;
  }
  if (a.else_branch && !structurally_equal(*a.else_branch, *b.else_branch, ignore_parens)) {
    return false;
  }
  if (a.stmts.size() != b.stmts.size()) return false;
  for (size_t i = 0; i < a.stmts.size(); ++i) {
    if (!structurally_equal(*a.stmts[i], *b.stmts[i], ignore_parens)) return false;
  }
  return true;
}

}  // namespace flowgraph
