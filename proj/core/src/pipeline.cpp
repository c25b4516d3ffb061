#include "flowgraph/pipeline.hpp"

#include <utility>

#include "flowgraph/control_flow.hpp"
#include "flowgraph/data_flow.hpp"
#include "flowgraph/parser.hpp"
#include "flowgraph/structure_graph.hpp"

namespace flowgraph {

namespace {

void apply_df_edges(FlowGraph& g, const EdgeSet& edges) {
  for (FlowNode& n : g.nodes) n.df_next.clear();
  for (const auto& [src, dst] : edges) g.node(src).df_next.insert(dst);
}

}  // namespace

Analysis analyze(std::string_view source, Stage stage, DfAlgo algo) {
  Analysis a;
  a.program = parse_program(source);
  for (const Method& m : a.program.methods) {
    FlowGraph g = build_graph(m);
    populate_var_table(g);
    if (stage != Stage::Structure) compute_cf_edges(g);
    if (stage == Stage::Pdg) {
      switch (algo) {
        case DfAlgo::Fixpoint:
          compute_df_edges(g);
          break;
        case DfAlgo::ReachingDefs:
          apply_df_edges(g, forward_rd_oracle(g));
          break;
        case DfAlgo::PathEnum:
          apply_df_edges(g, path_oracle(g));
          break;
      }
    }
    a.graphs.push_back(std::move(g));
  }
  return a;
}

}  // namespace flowgraph
