#include "flowgraph/control_flow.hpp"

#include <algorithm>

#include "flowgraph/diagnostics.hpp"

namespace flowgraph {

namespace {

// Id of the element following cur in children, or -1 if cur is last.
int next_sibling(const std::vector<int>& children, int cur) {
  auto it = std::find(children.begin(), children.end(), cur);
  if (it == children.end() || it + 1 == children.end()) return -1;
  return *(it + 1);
}

}  // namespace

StructuralIndex::StructuralIndex(const FlowGraph& g)
    : g_(&g), parent_(g.nodes.size(), -1) {
  for (const FlowNode& n : g.nodes) {
    if (n.expr_child) parent_[static_cast<size_t>(*n.expr_child)] = n.id;
    for (int c : n.body) parent_[static_cast<size_t>(c)] = n.id;
    for (int c : n.then_branch) parent_[static_cast<size_t>(c)] = n.id;
    for (int c : n.else_branch) parent_[static_cast<size_t>(c)] = n.id;
  }
}

int StructuralIndex::flow_entry(int id) const {
  const FlowNode& n = g_->node(id);
  switch (n.kind) {
    case FlowNodeKind::If:
    case FlowNodeKind::Loop:
      return *n.expr_child;
    case FlowNodeKind::Block:
      if (n.body.empty()) return structural_successor(id);
      return flow_entry(n.body.front());
    case FlowNodeKind::Label:
      return flow_entry(n.body.front());
    default:
      if (!is_flow_instruction(n.kind)) {
        throw InternalError("flow_entry on non-flow node");
      }
      return id;
  }
}

int StructuralIndex::structural_successor(int id) const {
  int cur = id;
  while (true) {
    int parent_id = parent(cur);
    if (parent_id < 0) return g_->exit;
    const FlowNode& p = g_->node(parent_id);
    switch (p.kind) {
      case FlowNodeKind::Method: {
        int next = next_sibling(p.body, cur);
        if (next >= 0) return flow_entry(next);
        return g_->exit;
      }
      case FlowNodeKind::Block: {
        int next = next_sibling(p.body, cur);
        if (next >= 0) return flow_entry(next);
        cur = parent_id;
        break;
      }
      case FlowNodeKind::If:
      case FlowNodeKind::Label:
        cur = parent_id;
        break;
      case FlowNodeKind::Loop:
        if (p.expr_child && *p.expr_child == cur) {
          cur = parent_id;
        } else {
          return *p.expr_child;
        }
        break;
      default:
        throw InternalError("unexpected parent kind in structural_successor");
    }
  }
}

void compute_cf_edges(FlowGraph& g) {
  for (FlowNode& n : g.nodes) n.cf_next.clear();

  StructuralIndex idx(g);
  for (FlowNode& n : g.nodes) {
    switch (n.kind) {
      case FlowNodeKind::Method:
        n.cf_next.insert(n.body.empty() ? g.exit : idx.flow_entry(n.body.front()));
        break;
      case FlowNodeKind::SimpleStmt:
        n.cf_next.insert(idx.structural_successor(n.id));
        break;
      case FlowNodeKind::Return:
        n.cf_next.insert(g.exit);
        break;
      case FlowNodeKind::Break:
        n.cf_next.insert(idx.structural_successor(*n.jump_target));
        break;
      case FlowNodeKind::Continue:
        n.cf_next.insert(*g.node(*n.jump_target).expr_child);
        break;
      case FlowNodeKind::Expr: {
        const FlowNode& owner = g.node(idx.parent(n.id));
        if (owner.kind == FlowNodeKind::If) {
          n.cf_next.insert(idx.flow_entry(owner.then_branch.front()));
          n.cf_next.insert(owner.else_branch.empty()
                               ? idx.structural_successor(owner.id)
                               : idx.flow_entry(owner.else_branch.front()));
        } else {
          n.cf_next.insert(idx.flow_entry(owner.body.front()));
          n.cf_next.insert(idx.structural_successor(owner.id));
        }
        break;
      }
      default:
        break;
    }
  }
}

}  // namespace flowgraph
