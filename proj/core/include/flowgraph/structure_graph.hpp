#pragma once

#include <map>
#include <set>
#include <string>

#include "flowgraph/flow_graph.hpp"

namespace flowgraph {

/// Maps a method AST onto the simplified program graph: one node per
/// statement and per If/While condition, plus the Method and Exit nodes.
/// cfNext/dfNext are left empty; the variable table is left empty.
FlowGraph build_graph(const Method& method);

/// Per-node sets of variable names defined / used, indexed by node id.
/// A node defines v when it assigns v (`=`, `+=`, `-=`), applies `++`/`--`
/// to v, declares v, or is the Method node and v is a parameter. A node
/// uses v when v occurs in read position: any operand position except the
/// target of a plain `=`; compound-assignment and inc/dec targets count as
/// both use and def.
std::vector<std::set<std::string>> collect_defs(const FlowGraph& g);
std::vector<std::set<std::string>> collect_uses(const FlowGraph& g);

/// Fills g.vars with one entry per parameter and declared variable:
/// definers (decl node or Method node first, then source order) and users
/// (source order).
void populate_var_table(FlowGraph& g);

}  // namespace flowgraph
