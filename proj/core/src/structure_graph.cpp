#include "flowgraph/structure_graph.hpp"

#include <utility>

#include "flowgraph/diagnostics.hpp"
#include "flowgraph/get_text.hpp"

namespace flowgraph {

const char* to_string(FlowNodeKind kind) {
  switch (kind) {
    case FlowNodeKind::Method: return "Method";
    case FlowNodeKind::Exit: return "Exit";
    case FlowNodeKind::Block: return "Block";
    case FlowNodeKind::If: return "If";
    case FlowNodeKind::Loop: return "Loop";
    case FlowNodeKind::Return: return "Return";
    case FlowNodeKind::JumpStmt: return "JumpStmt";
    case FlowNodeKind::Label: return "Label";
    case FlowNodeKind::Continue: return "Continue";
    case FlowNodeKind::Break: return "Break";
    case FlowNodeKind::SimpleStmt: return "SimpleStmt";
    case FlowNodeKind::Expr: return "Expr";
    case FlowNodeKind::Var: return "Var";
    case FlowNodeKind::Param: return "Param";
  }
  return "?";
}

bool is_flow_instruction(FlowNodeKind kind) {
  switch (kind) {
    case FlowNodeKind::Method:
    case FlowNodeKind::Exit:
    case FlowNodeKind::SimpleStmt:
    case FlowNodeKind::Return:
    case FlowNodeKind::Break:
    case FlowNodeKind::Continue:
    case FlowNodeKind::Expr:
      return true;
    default:
      return false;
  }
}

namespace {

struct LoopScope {
  int loop_id;
  std::string label;  // empty for unlabeled loops
};

class GraphBuilder {
 public:
  FlowGraph build(const Method& m) {
    g_.method_name = m.name;
    int entry = add(FlowNodeKind::Method, signature_text(m));
    g_.node(entry).ast_method = &m;
    for (const auto& s : m.body->stmts) {
      int child = stmt(*s, "");
      g_.node(entry).body.push_back(child);
    }
    g_.entry = entry;
    g_.exit = add(FlowNodeKind::Exit, "Exit");
    return std::move(g_);
  }

 private:
  int add(FlowNodeKind kind, std::string txt) {
    int id = static_cast<int>(g_.nodes.size());
    FlowNode n;
    n.id = id;
    n.kind = kind;
    n.txt = std::move(txt);
    g_.nodes.push_back(std::move(n));
    return id;
  }

  int stmt(const Stmt& s, const std::string& pending_label) {
    switch (s.kind) {
      case StmtKind::Block: {
        int id = add(FlowNodeKind::Block, "{...}");
        g_.node(id).ast_stmt = &s;
        for (const auto& child : s.stmts) {
          int c = stmt(*child, "");
          g_.node(id).body.push_back(c);
        }
        return id;
      }
      case StmtKind::VarDecl:
      case StmtKind::ExprStmt: {
        int id = add(FlowNodeKind::SimpleStmt, get_text(s));
        g_.node(id).ast_stmt = &s;
        return id;
      }
      case StmtKind::If: {
        std::string cond = get_text(*s.expr);
        int id = add(FlowNodeKind::If, "if (" + cond + ")");
        g_.node(id).ast_stmt = &s;
        int e = add(FlowNodeKind::Expr, cond);
        g_.node(e).ast_expr = s.expr.get();
        g_.node(id).expr_child = e;
        int then_id = stmt(*s.then_branch, "");
        g_.node(id).then_branch.push_back(then_id);
        if (s.else_branch) {
          int else_id = stmt(*s.else_branch, "");
          g_.node(id).else_branch.push_back(else_id);
        }
        return id;
      }
      case StmtKind::While: {
        std::string cond = get_text(*s.expr);
        int id = add(FlowNodeKind::Loop, "while (" + cond + ")");
        g_.node(id).ast_stmt = &s;
        int e = add(FlowNodeKind::Expr, cond);
        g_.node(e).ast_expr = s.expr.get();
        g_.node(id).expr_child = e;
        loops_.push_back({id, pending_label});
        int body_id = stmt(*s.body, "");
        g_.node(id).body.push_back(body_id);
        loops_.pop_back();
        return id;
      }
      case StmtKind::Return: {
        int id = add(FlowNodeKind::Return, get_text(s));
        g_.node(id).ast_stmt = &s;
        return id;
      }
      case StmtKind::Break:
      case StmtKind::Continue: {
        FlowNodeKind kind =
            s.kind == StmtKind::Break ? FlowNodeKind::Break : FlowNodeKind::Continue;
        int id = add(kind, get_text(s));
        g_.node(id).ast_stmt = &s;
        g_.node(id).jump_target = resolve_target(s);
        return id;
      }
      case StmtKind::Labeled: {
        int id = add(FlowNodeKind::Label, s.name + ":");
        g_.node(id).ast_stmt = &s;
        int loop_id = stmt(*s.body, s.name);
        g_.node(id).body.push_back(loop_id);
        return id;
      }
    }
    throw InternalError("unhandled statement kind");
  }

  int resolve_target(const Stmt& s) const {
    if (s.name.empty()) {
      if (loops_.empty()) throw InternalError("jump outside of a loop");
      return loops_.back().loop_id;
    }
    for (auto it = loops_.rbegin(); it != loops_.rend(); ++it) {
      if (it->label == s.name) return it->loop_id;
    }
    throw InternalError("unresolved jump label '" + s.name + "'");
  }

  FlowGraph g_;
  std::vector<LoopScope> loops_;
};

void defs_in_expr(const Expr& e, std::set<std::string>& out) {
  switch (e.kind) {
    case ExprKind::Assign:
      out.insert(e.name);
      defs_in_expr(*e.rhs, out);
      break;
    case ExprKind::PostfixIncDec:
      if (e.lhs->kind == ExprKind::VarRef) {
        out.insert(e.lhs->name);
      } else {
        defs_in_expr(*e.lhs, out);
      }
      break;
    case ExprKind::Binary:
      defs_in_expr(*e.lhs, out);
      defs_in_expr(*e.rhs, out);
      break;
    case ExprKind::Unary:
      defs_in_expr(*e.lhs, out);
      break;
    case ExprKind::Call:
      for (const auto& a : e.args) defs_in_expr(*a, out);
      break;
    case ExprKind::VarRef:
    case ExprKind::IntLit:
    case ExprKind::BoolLit:
      break;
  }
}

void uses_in_expr(const Expr& e, std::set<std::string>& out) {
  switch (e.kind) {
    case ExprKind::Assign:
      // A plain `=` target is written, not read; `+=`/`-=` read it first.
      if (e.op != "=") out.insert(e.name);
      uses_in_expr(*e.rhs, out);
      break;
    case ExprKind::PostfixIncDec:
      if (e.lhs->kind == ExprKind::VarRef) {
        out.insert(e.lhs->name);
      } else {
        uses_in_expr(*e.lhs, out);
      }
      break;
    case ExprKind::VarRef:
      out.insert(e.name);
      break;
    case ExprKind::Binary:
      uses_in_expr(*e.lhs, out);
      uses_in_expr(*e.rhs, out);
      break;
    case ExprKind::Unary:
      uses_in_expr(*e.lhs, out);
      break;
    case ExprKind::Call:
      for (const auto& a : e.args) uses_in_expr(*a, out);
      break;
    case ExprKind::IntLit:
    case ExprKind::BoolLit:
      break;
  }
}

}  // namespace

FlowGraph build_graph(const Method& method) {
  GraphBuilder builder;
  return builder.build(method);
}

std::vector<std::set<std::string>> collect_defs(const FlowGraph& g) {
  std::vector<std::set<std::string>> defs(g.nodes.size());
  for (const FlowNode& n : g.nodes) {
    std::set<std::string>& out = defs[static_cast<size_t>(n.id)];
    switch (n.kind) {
      case FlowNodeKind::Method:
        for (const Param& p : n.ast_method->params) out.insert(p.name);
        break;
      case FlowNodeKind::SimpleStmt:
        if (n.ast_stmt->kind == StmtKind::VarDecl) {
          out.insert(n.ast_stmt->name);
          if (n.ast_stmt->expr) defs_in_expr(*n.ast_stmt->expr, out);
        } else {
          defs_in_expr(*n.ast_stmt->expr, out);
        }
        break;
      case FlowNodeKind::Return:
        if (n.ast_stmt->expr) defs_in_expr(*n.ast_stmt->expr, out);
        break;
      case FlowNodeKind::Expr:
        defs_in_expr(*n.ast_expr, out);
        break;
      default:
        break;
    }
  }
  return defs;
}

std::vector<std::set<std::string>> collect_uses(const FlowGraph& g) {
  std::vector<std::set<std::string>> uses(g.nodes.size());
  for (const FlowNode& n : g.nodes) {
    std::set<std::string>& out = uses[static_cast<size_t>(n.id)];
    switch (n.kind) {
      case FlowNodeKind::SimpleStmt:
        if (n.ast_stmt->kind == StmtKind::VarDecl) {
          if (n.ast_stmt->expr) uses_in_expr(*n.ast_stmt->expr, out);
        } else {
          uses_in_expr(*n.ast_stmt->expr, out);
        }
        break;
      case FlowNodeKind::Return:
        if (n.ast_stmt->expr) uses_in_expr(*n.ast_stmt->expr, out);
        break;
      case FlowNodeKind::Expr:
        uses_in_expr(*n.ast_expr, out);
        break;
      default:
        break;
    }
  }
  return uses;
}

void populate_var_table(FlowGraph& g) {
  g.vars.clear();
  auto defs = collect_defs(g);
  auto uses = collect_uses(g);

  const Method& m = *g.node(g.entry).ast_method;
  for (const Param& p : m.params) {
    VarInfo v;
    v.name = p.name;
    v.kind = FlowNodeKind::Param;
    v.decl_node = g.entry;
    g.vars.push_back(std::move(v));
  }
  for (const FlowNode& n : g.nodes) {
    if (n.kind == FlowNodeKind::SimpleStmt && n.ast_stmt->kind == StmtKind::VarDecl) {
      VarInfo v;
      v.name = n.ast_stmt->name;
      v.kind = FlowNodeKind::Var;
      v.decl_node = n.id;
      g.vars.push_back(std::move(v));
    }
  }

  for (VarInfo& v : g.vars) {
    v.definers.push_back(v.decl_node);
    for (const FlowNode& n : g.nodes) {
      if (n.id != v.decl_node && defs[static_cast<size_t>(n.id)].count(v.name)) {
        v.definers.push_back(n.id);
      }
      if (uses[static_cast<size_t>(n.id)].count(v.name)) {
        v.users.push_back(n.id);
      }
    }
  }
}

}  // namespace flowgraph
