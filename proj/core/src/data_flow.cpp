#include "flowgraph/data_flow.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <vector>

#include "flowgraph/structure_graph.hpp"

namespace flowgraph {

namespace {

// (node id, variable name) facts; used for both demands and definitions.
using Fact = std::pair<int, std::string>;
using FactSet = std::set<Fact>;

std::vector<std::vector<int>> cf_preds(const FlowGraph& g) {
  std::vector<std::vector<int>> preds(g.nodes.size());
  for (const FlowNode& n : g.nodes) {
    for (int s : n.cf_next) preds[static_cast<size_t>(s)].push_back(n.id);
  }
  return preds;
}

// Reverse post-order of the cf graph with its edges flipped, rooted at Exit.
// Successors come before their predecessors, which is the profitable order
// for a backward analysis. Nodes not reached are appended in id order.
std::vector<int> backward_order(const FlowGraph& g,
                                const std::vector<std::vector<int>>& preds) {
  std::vector<char> seen(g.nodes.size(), 0);
  std::vector<int> post;
  std::vector<std::pair<int, size_t>> stack;
  seen[static_cast<size_t>(g.exit)] = 1;
  stack.push_back({g.exit, 0});
  while (!stack.empty()) {
    auto& [id, next] = stack.back();
    const auto& ps = preds[static_cast<size_t>(id)];
    if (next < ps.size()) {
      int p = ps[next++];
      if (!seen[static_cast<size_t>(p)]) {
        seen[static_cast<size_t>(p)] = 1;
        stack.push_back({p, 0});
      }
    } else {
      post.push_back(id);
      stack.pop_back();
    }
  }
  std::reverse(post.begin(), post.end());
  for (const FlowNode& n : g.nodes) {
    if (!seen[static_cast<size_t>(n.id)] && is_flow_instruction(n.kind)) {
      post.push_back(n.id);
    }
  }
  return post;
}

// Mirror image of backward_order: reverse post-order over cf edges from the
// Method node, for the forward oracle.
std::vector<int> forward_order(const FlowGraph& g) {
  std::vector<char> seen(g.nodes.size(), 0);
  std::vector<int> post;
  std::vector<std::pair<int, std::set<int>::const_iterator>> stack;
  seen[static_cast<size_t>(g.entry)] = 1;
  stack.push_back({g.entry, g.node(g.entry).cf_next.begin()});
  while (!stack.empty()) {
    auto& [id, it] = stack.back();
    if (it != g.node(id).cf_next.end()) {
      int s = *it++;
      if (!seen[static_cast<size_t>(s)]) {
        seen[static_cast<size_t>(s)] = 1;
        stack.push_back({s, g.node(s).cf_next.begin()});
      }
    } else {
      post.push_back(id);
      stack.pop_back();
    }
  }
  std::reverse(post.begin(), post.end());
  for (const FlowNode& n : g.nodes) {
    if (!seen[static_cast<size_t>(n.id)] && is_flow_instruction(n.kind)) {
      post.push_back(n.id);
    }
  }
  return post;
}

}  // namespace

void compute_df_edges(FlowGraph& g) {
  for (FlowNode& n : g.nodes) n.df_next.clear();

  const auto defs = collect_defs(g);
  const auto uses = collect_uses(g);
  const auto preds = cf_preds(g);

  // in[n]: demands alive on entry to n, i.e. uses that some cf path from n
  // reaches before any redefinition of the variable.
  std::vector<FactSet> in(g.nodes.size());
  auto out_of = [&](int id) {
    FactSet out;
    for (int s : g.node(id).cf_next) {
      const FactSet& si = in[static_cast<size_t>(s)];
      out.insert(si.begin(), si.end());
    }
    return out;
  };

  std::vector<int> order = backward_order(g, preds);
  std::deque<int> work(order.begin(), order.end());
  std::vector<char> queued(g.nodes.size(), 0);
  for (int id : order) queued[static_cast<size_t>(id)] = 1;

  while (!work.empty()) {
    int id = work.front();
    work.pop_front();
    queued[static_cast<size_t>(id)] = 0;

    FactSet next;
    for (const std::string& v : uses[static_cast<size_t>(id)]) next.insert({id, v});
    for (const Fact& f : out_of(id)) {
      if (!defs[static_cast<size_t>(id)].count(f.second)) next.insert(f);
    }
    FactSet& cur = in[static_cast<size_t>(id)];
    if (next != cur) {
      cur = std::move(next);
      for (int p : preds[static_cast<size_t>(id)]) {
        if (!queued[static_cast<size_t>(p)]) {
          queued[static_cast<size_t>(p)] = 1;
          work.push_back(p);
        }
      }
    }
  }

  for (FlowNode& n : g.nodes) {
    const auto& d = defs[static_cast<size_t>(n.id)];
    if (d.empty()) continue;
    for (const Fact& f : out_of(n.id)) {
      if (d.count(f.second)) n.df_next.insert(f.first);
    }
  }
}

EdgeSet df_edge_set(const FlowGraph& g) {
  EdgeSet edges;
  for (const FlowNode& n : g.nodes) {
    for (int t : n.df_next) edges.insert({n.id, t});
  }
  return edges;
}

EdgeSet forward_rd_oracle(const FlowGraph& g) {
  const auto defs = collect_defs(g);
  const auto uses = collect_uses(g);
  const auto preds = cf_preds(g);

  // out[n]: definitions (node, var) that may reach the exit of n.
  std::vector<FactSet> out(g.nodes.size());
  auto in_of = [&](int id) {
    FactSet in;
    for (int p : preds[static_cast<size_t>(id)]) {
      const FactSet& po = out[static_cast<size_t>(p)];
      in.insert(po.begin(), po.end());
    }
    return in;
  };

  std::vector<int> order = forward_order(g);
  std::deque<int> work(order.begin(), order.end());
  std::vector<char> queued(g.nodes.size(), 0);
  for (int id : order) queued[static_cast<size_t>(id)] = 1;

  while (!work.empty()) {
    int id = work.front();
    work.pop_front();
    queued[static_cast<size_t>(id)] = 0;

    FactSet next;
    for (const std::string& v : defs[static_cast<size_t>(id)]) next.insert({id, v});
    for (const Fact& f : in_of(id)) {
      if (!defs[static_cast<size_t>(id)].count(f.second)) next.insert(f);
    }
    FactSet& cur = out[static_cast<size_t>(id)];
    if (next != cur) {
      cur = std::move(next);
      for (int s : g.node(id).cf_next) {
        if (!queued[static_cast<size_t>(s)]) {
          queued[static_cast<size_t>(s)] = 1;
          work.push_back(s);
        }
      }
    }
  }

  // Uses read the state on entry, so a definition arriving at a node that
  // both uses and redefines the variable still feeds the use.
  EdgeSet edges;
  for (const FlowNode& n : g.nodes) {
    const auto& u = uses[static_cast<size_t>(n.id)];
    if (u.empty()) continue;
    for (const Fact& f : in_of(n.id)) {
      if (u.count(f.second)) edges.insert({f.first, n.id});
    }
  }
  return edges;
}

EdgeSet path_oracle(const FlowGraph& g) {
  const auto defs = collect_defs(g);
  const auto uses = collect_uses(g);

  EdgeSet edges;
  for (const FlowNode& d : g.nodes) {
    for (const std::string& v : defs[static_cast<size_t>(d.id)]) {
      std::vector<char> visited(g.nodes.size(), 0);
      std::deque<int> queue;
      for (int s : d.cf_next) {
        visited[static_cast<size_t>(s)] = 1;
        queue.push_back(s);
      }
      while (!queue.empty()) {
        int m = queue.front();
        queue.pop_front();
        if (uses[static_cast<size_t>(m)].count(v)) edges.insert({d.id, m});
        // A redefinition ends the path after the node's own use, if any.
        if (defs[static_cast<size_t>(m)].count(v)) continue;
        for (int s : g.node(m).cf_next) {
          if (!visited[static_cast<size_t>(s)]) {
            visited[static_cast<size_t>(s)] = 1;
            queue.push_back(s);
          }
        }
      }
    }
  }
  return edges;
}

}  // namespace flowgraph
