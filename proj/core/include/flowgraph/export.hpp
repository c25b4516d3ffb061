#pragma once

#include <string>
#include <vector>

#include "flowgraph/flow_graph.hpp"

namespace flowgraph {

// All emitters are deterministic: identical graphs yield identical bytes.
// Nodes appear in id order, edges sorted by (src, dst).

// {"methods":[{"name","nodes":[{"id","kind","txt"}],"cf":[{"src","dst"}],
//  "df":[...],"vars":[{"name","kind","definers","users"}]}]}
std::string emit_json(const std::vector<FlowGraph>& graphs);

// One digraph per method; cf edges solid, df edges dashed with label "df".
std::string emit_dot(const std::vector<FlowGraph>& graphs);

// Human-readable listing for terminal inspection.
std::string emit_text(const std::vector<FlowGraph>& graphs);

}  // namespace flowgraph
