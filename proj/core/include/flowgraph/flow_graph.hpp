#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "flowgraph/ast.hpp"

namespace flowgraph {

enum class FlowNodeKind {
  Method,
  Exit,
  Block,
  If,
  Loop,
  Return,
  JumpStmt,  // reserved; the subset's jumps all map to Break/Continue
  Label,
  Continue,
  Break,
  SimpleStmt,
  Expr,
  Var,    // variable-table kinds, not graph nodes
  Param,
};

const char* to_string(FlowNodeKind kind);

struct FlowNode {
  int id = -1;
  FlowNodeKind kind{};
  std::string txt;

  std::optional<int> expr_child;   // If/Loop condition node
  std::vector<int> body;           // Method/Block/Loop/Label children
  std::vector<int> then_branch;    // If
  std::vector<int> else_branch;    // If
  std::optional<int> jump_target;  // Break/Continue: the targeted Loop node

  std::set<int> cf_next;
  std::set<int> df_next;

  // Back references into the AST the graph was built from; the AST must
  // outlive the graph. Not serialized.
  const Stmt* ast_stmt = nullptr;
  const Expr* ast_expr = nullptr;
  const Method* ast_method = nullptr;
};

struct VarInfo {
  std::string name;
  FlowNodeKind kind = FlowNodeKind::Var;  // Var or Param
  int decl_node = -1;  // declaring SimpleStmt, or the Method node for params
  std::vector<int> definers;  // decl/Method node first, then source order
  std::vector<int> users;     // source order
};

/// Per-method program graph. Node ids are pre-order over the structural
/// tree rooted at the Method node; the Exit node takes the last id.
struct FlowGraph {
  std::string method_name;
  std::vector<FlowNode> nodes;  // indexed by id
  int entry = -1;  // Method node
  int exit = -1;   // Exit node
  std::vector<VarInfo> vars;

  const FlowNode& node(int id) const { return nodes[static_cast<size_t>(id)]; }
  FlowNode& node(int id) { return nodes[static_cast<size_t>(id)]; }
};

/// Flow instructions carry control-flow edges; Block/If/Loop/Label are
/// transparent containers.
bool is_flow_instruction(FlowNodeKind kind);

}  // namespace flowgraph
