#include "flowgraph/get_text.hpp"

namespace flowgraph {

namespace {

std::string expr_text(const Expr& e) {
  std::string out;
  switch (e.kind) {
    case ExprKind::Assign:
      out = e.name + " " + e.op + " " + expr_text(*e.rhs);
      break;
    case ExprKind::Binary:
      out = expr_text(*e.lhs) + " " + e.op + " " + expr_text(*e.rhs);
      break;
    case ExprKind::Unary: {
      std::string operand = expr_text(*e.lhs);
      // "- -x" must not collapse to "--x", which lexes as a single token.
      if (e.op == "-" && !operand.empty() && operand[0] == '-') {
        out = e.op + " " + operand;
      } else {
        out = e.op + operand;
      }
      break;
    }
    case ExprKind::PostfixIncDec:
      out = expr_text(*e.lhs) + e.op;
      break;
    case ExprKind::VarRef:
      out = e.name;
      break;
    case ExprKind::IntLit:
      out = e.literal;
      break;
    case ExprKind::BoolLit:
      out = e.bool_value ? "true" : "false";
      break;
    case ExprKind::Call: {
      out = e.name + "(";
      for (size_t i = 0; i < e.args.size(); ++i) {
        if (i > 0) out += ", ";
        out += expr_text(*e.args[i]);
      }
      out += ")";
      break;
    }
  }
  if (e.parenthesized) return "(" + out + ")";
  return out;
}

}  // namespace

std::string get_text(const Expr& e) { return expr_text(e); }

std::string get_text(const Stmt& s) {
  switch (s.kind) {
    case StmtKind::Block: {
      if (s.stmts.empty()) return "{}";
      std::string out = "{";
      for (const auto& child : s.stmts) out += " " + get_text(*child);
      return out + " }";
    }
    case StmtKind::VarDecl: {
      std::string out = s.type_name + " " + s.name;
      if (s.expr) out += " = " + get_text(*s.expr);
      return out + ";";
    }
    case StmtKind::If: {
      std::string out = "if (" + get_text(*s.expr) + ") " + get_text(*s.then_branch);
      if (s.else_branch) out += " else " + get_text(*s.else_branch);
      return out;
    }
    case StmtKind::While:
      return "while (" + get_text(*s.expr) + ") " + get_text(*s.body);
    case StmtKind::Return:
      return s.expr ? "return " + get_text(*s.expr) + ";" : "return;";
    case StmtKind::Break:
      return s.name.empty() ? "break;" : "break " + s.name + ";";
    case StmtKind::Continue:
      return s.name.empty() ? "continue;" : "continue " + s.name + ";";
    case StmtKind::Labeled:
      return s.name + ": " + get_text(*s.body);
    case StmtKind::ExprStmt:
      return get_text(*s.expr) + ";";
  }
  return {};
}

std::string signature_text(const Method& m) {
  std::string out = m.name + "(";
  for (size_t i = 0; i < m.params.size(); ++i) {
    if (i > 0) out += ", ";
    out += m.params[i].type_name + " " + m.params[i].name;
  }
  return out + ")";
}

}  // namespace flowgraph
