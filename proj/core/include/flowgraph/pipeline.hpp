#pragma once

#include <string_view>
#include <vector>

#include "flowgraph/ast.hpp"
#include "flowgraph/flow_graph.hpp"

namespace flowgraph {

enum class Stage { Structure, Cfg, Pdg };

// Which computation fills df_next at the Pdg stage. The oracles exist for
// cross-checking; all three must agree on any input.
enum class DfAlgo { Fixpoint, ReachingDefs, PathEnum };

// Graph nodes point back into the AST, so both live together.
struct Analysis {
  ClassDecl program;
  std::vector<FlowGraph> graphs;  // one per method, in source order
};

// Frontend plus the graph stages up to `stage`. The var table is populated
// at every stage. Throws LexError/ParseError/BindError on bad input.
Analysis analyze(std::string_view source, Stage stage = Stage::Pdg,
                 DfAlgo algo = DfAlgo::Fixpoint);

}  // namespace flowgraph
