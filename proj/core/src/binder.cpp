#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "flowgraph/parser.hpp"

namespace flowgraph {

namespace {

// Per-method scope. The subset has no shadowing: every name is declared at
// most once per method, and a reference binds to the lexically preceding
// declaration. A variable is visible inside its own initializer.
class Binder {
 public:
  explicit Binder(const Method& m) {
    for (const Param& p : m.params) {
      if (!declared_.insert(p.name).second) {
        throw BindError("duplicate parameter '" + p.name + "'", p.pos);
      }
    }
  }

  void stmt(const Stmt& s) {
    switch (s.kind) {
      case StmtKind::Block:
        for (const auto& child : s.stmts) stmt(*child);
        break;
      case StmtKind::VarDecl:
        if (!declared_.insert(s.name).second) {
          throw BindError("redeclaration of variable '" + s.name + "'", s.pos);
        }
        if (s.expr) expr(*s.expr);
        break;
      case StmtKind::If:
        expr(*s.expr);
        stmt(*s.then_branch);
        if (s.else_branch) stmt(*s.else_branch);
        break;
      case StmtKind::While:
        expr(*s.expr);
        ++loop_depth_;
        stmt(*s.body);
        --loop_depth_;
        break;
      case StmtKind::Labeled:
        if (std::find(labels_.begin(), labels_.end(), s.name) != labels_.end()) {
          throw BindError("duplicate label '" + s.name + "'", s.pos);
        }
        labels_.push_back(s.name);
        stmt(*s.body);
        labels_.pop_back();
        break;
      case StmtKind::Return:
        if (s.expr) expr(*s.expr);
        break;
      case StmtKind::Break:
      case StmtKind::Continue: {
        const char* what = s.kind == StmtKind::Break ? "break" : "continue";
        if (s.name.empty()) {
          if (loop_depth_ == 0) {
            throw BindError(std::string(what) + " outside of a loop", s.pos);
          }
        } else if (std::find(labels_.begin(), labels_.end(), s.name) == labels_.end()) {
          throw BindError(std::string(what) + " to undefined label '" + s.name + "'",
                          s.pos);
        }
        break;
      }
      case StmtKind::ExprStmt:
        expr(*s.expr);
        break;
    }
  }

 private:
  void expr(const Expr& e) {
    switch (e.kind) {
      case ExprKind::Assign:
        check_name(e.name, e.pos);
        expr(*e.rhs);
        break;
      case ExprKind::VarRef:
        check_name(e.name, e.pos);
        break;
      case ExprKind::Binary:
        expr(*e.lhs);
        expr(*e.rhs);
        break;
      case ExprKind::Unary:
      case ExprKind::PostfixIncDec:
        expr(*e.lhs);
        break;
      case ExprKind::Call:
        // Callee names are not variables; calls are not analyzed further.
        for (const auto& arg : e.args) expr(*arg);
        break;
      case ExprKind::IntLit:
      case ExprKind::BoolLit:
        break;
    }
  }

  void check_name(const std::string& name, SourcePos pos) const {
    if (!declared_.count(name)) {
      throw BindError("use of undeclared variable '" + name + "'", pos);
    }
  }

  std::set<std::string> declared_;
  std::vector<std::string> labels_;
  int loop_depth_ = 0;
};

}  // namespace

void check_bindings(const ClassDecl& cls) {
  std::set<std::string> method_names;
  for (const Method& m : cls.methods) {
    if (!method_names.insert(m.name).second) {
      throw BindError("duplicate method name '" + m.name + "'", m.pos);
    }
    Binder binder(m);
    binder.stmt(*m.body);
  }
}

}  // namespace flowgraph
