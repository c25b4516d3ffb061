#include "flowgraph/export.hpp"

#include <json.hpp>

namespace flowgraph {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json edges_json(const FlowGraph& g, std::set<int> FlowNode::* member) {
  ordered_json arr = ordered_json::array();
  for (const FlowNode& n : g.nodes) {
    for (int t : n.*member) {
      arr.push_back({{"src", n.id}, {"dst", t}});
    }
  }
  return arr;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string emit_json(const std::vector<FlowGraph>& graphs) {
  ordered_json root;
  root["methods"] = ordered_json::array();
  for (const FlowGraph& g : graphs) {
    ordered_json m;
    m["name"] = g.method_name;
    ordered_json nodes = ordered_json::array();
    for (const FlowNode& n : g.nodes) {
      nodes.push_back({{"id", n.id}, {"kind", to_string(n.kind)}, {"txt", n.txt}});
    }
    m["nodes"] = std::move(nodes);
    m["cf"] = edges_json(g, &FlowNode::cf_next);
    m["df"] = edges_json(g, &FlowNode::df_next);
    ordered_json vars = ordered_json::array();
    for (const VarInfo& v : g.vars) {
      vars.push_back({{"name", v.name},
                      {"kind", to_string(v.kind)},
                      {"definers", v.definers},
                      {"users", v.users}});
    }
    m["vars"] = std::move(vars);
    root["methods"].push_back(std::move(m));
  }
  return root.dump() + "\n";
}

std::string emit_dot(const std::vector<FlowGraph>& graphs) {
  std::string out;
  for (const FlowGraph& g : graphs) {
    if (!out.empty()) out += "\n";
    out += "digraph \"" + dot_escape(g.method_name) + "\" {\n";
    out += "  node [shape=box];\n";
    for (const FlowNode& n : g.nodes) {
      out += "  n" + std::to_string(n.id) + " [label=\"" + dot_escape(n.txt) + "\"];\n";
    }
    for (const FlowNode& n : g.nodes) {
      for (int t : n.cf_next) {
        out += "  n" + std::to_string(n.id) + " -> n" + std::to_string(t) + ";\n";
      }
    }
    for (const FlowNode& n : g.nodes) {
      for (int t : n.df_next) {
        out += "  n" + std::to_string(n.id) + " -> n" + std::to_string(t) +
               " [style=dashed, label=\"df\"];\n";
      }
    }
    out += "}\n";
  }
  return out;
}

std::string emit_text(const std::vector<FlowGraph>& graphs) {
  std::string out;
  for (const FlowGraph& g : graphs) {
    if (!out.empty()) out += "\n";
    out += "method " + g.method_name + "\n";
    for (const FlowNode& n : g.nodes) {
      out += "  " + std::to_string(n.id) + " " + to_string(n.kind) + " \"" + n.txt + "\"\n";
    }
    for (const FlowNode& n : g.nodes) {
      for (int t : n.cf_next) {
        out += "  cf " + std::to_string(n.id) + " -> " + std::to_string(t) + "\n";
      }
    }
    for (const FlowNode& n : g.nodes) {
      for (int t : n.df_next) {
        out += "  df " + std::to_string(n.id) + " -> " + std::to_string(t) + "\n";
      }
    }
    for (const VarInfo& v : g.vars) {
      out += "  var " + v.name + " " + to_string(v.kind) + " definers=[";
      for (size_t i = 0; i < v.definers.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(v.definers[i]);
      }
      out += "] users=[";
      for (size_t i = 0; i < v.users.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(v.users[i]);
      }
      out += "]\n";
    }
  }
  return out;
}

}  // namespace flowgraph
