#pragma once

#include <set>
#include <utility>

#include "flowgraph/flow_graph.hpp"

namespace flowgraph {

// Directed (src, dst) node-id pairs.
using EdgeSet = std::set<std::pair<int, int>>;

// Populates df_next via a backward pending-uses fixpoint: demands (use node,
// variable) propagate against cf edges and emit an edge when they meet a node
// defining the variable. Uses are read before defs within a node. Demands
// surviving past the Method node are dropped. Requires cf_next; clears any
// previous df_next first.
void compute_df_edges(FlowGraph& g);

// The df_next relation of g as an edge set.
EdgeSet df_edge_set(const FlowGraph& g);

// Independent check: classical forward reaching-definitions over the same
// cf edges. Emits (d, u) when a definition of v at d reaches u and u reads v.
EdgeSet forward_rd_oracle(const FlowGraph& g);

// Independent check: for every definition, breadth-first enumeration of cf
// paths that reach a use without crossing another definition of the same
// variable. Quadratic; intended for tests.
EdgeSet path_oracle(const FlowGraph& g);

}  // namespace flowgraph
