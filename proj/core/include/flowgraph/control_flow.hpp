#pragma once

#include <vector>

#include "flowgraph/flow_graph.hpp"

namespace flowgraph {

// Structural queries over a built graph. Containers (Block, If, Loop, Label)
// are transparent to control flow; these helpers resolve through them.
class StructuralIndex {
 public:
  explicit StructuralIndex(const FlowGraph& g);

  // Parent in the structure tree, -1 for the Method and Exit nodes.
  int parent(int id) const { return parent_[static_cast<size_t>(id)]; }

  // First flow instruction executed when control enters the subtree at id.
  // For an empty block this is whatever runs after the block.
  int flow_entry(int id) const;

  // Flow instruction executed after the subtree at id completes normally.
  // Falling off a loop body re-tests the condition; falling off the last
  // statement of the method reaches Exit.
  int structural_successor(int id) const;

 private:
  const FlowGraph* g_;
  std::vector<int> parent_;
};

// Populates cf_next on every flow instruction. Previously computed edges are
// discarded first, so the operation is idempotent. Unreachable statements are
// wired like any others.
void compute_cf_edges(FlowGraph& g);

}  // namespace flowgraph
