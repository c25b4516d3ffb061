#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "graphs.hpp"
#include "invariants.hpp"
#include "proc.hpp"
#include "program_gen.hpp"

#include "flowgraph/data_flow.hpp"
#include "flowgraph/export.hpp"
#include "flowgraph/flow_spec.hpp"
#include "flowgraph/get_text.hpp"
#include "flowgraph/parser.hpp"
#include "flowgraph/pipeline.hpp"
#include "flowgraph/structure_graph.hpp"

using namespace flowgraph;
using namespace flowgraph::testing;

namespace {

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;

  void fail(std::string note) {
    ok = false;
    if (notes.size() < 10) notes.push_back(std::move(note));
  }
};

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  size_t start = 0;
  while (start <= text.size()) {
    size_t nl = text.find('\n', start);
    if (nl == std::string::npos) {
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

std::string join_lines(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& l : lines) {
    out += l;
    out += '\n';
  }
  return out;
}

bool df_three_way(const FlowGraph& g, std::string& why) {
  EdgeSet fixpoint = df_edge_set(g);
  if (fixpoint != forward_rd_oracle(g)) {
    why = "fixpoint and reaching-definitions disagree";
    return false;
  }
  if (fixpoint != path_oracle(g)) {
    why = "fixpoint and path enumeration disagree";
    return false;
  }
  return true;
}

// Depth of the deepest block, the method body being depth 0.
int max_block_depth(const Stmt& s, int enclosing) {
  switch (s.kind) {
    case StmtKind::Block: {
      int best = enclosing + 1;
      for (const auto& child : s.stmts)
        best = std::max(best, max_block_depth(*child, enclosing + 1));
      return best;
    }
    case StmtKind::If: {
      int best = max_block_depth(*s.then_branch, enclosing);
      if (s.else_branch) best = std::max(best, max_block_depth(*s.else_branch, enclosing));
      return best;
    }
    case StmtKind::While:
    case StmtKind::Labeled:
      return max_block_depth(*s.body, enclosing);
    default:
      return enclosing;
  }
}

Outcome oracle_corpus() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  int methods = 0;
  for (const auto& file : corpus_files()) {
    Analysis a = analyze(read_file(file));
    for (const FlowGraph& g : a.graphs) {
      ++methods;
      std::string why;
      if (!df_three_way(g, why)) o.fail(g.method_name + ": " + why);
    }
  }
  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (methods < 25)
    o.fail("corpus has only " + std::to_string(methods) + " methods, need 25");
  if (dt >= 5.0) o.fail("took " + std::to_string(dt) + "s, budget 5s");
  return o;
}

Outcome generated_programs() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  GenLimits limits;
  for (unsigned seed = 1; seed <= 500; ++seed) {
    std::string source = generate_program(seed, limits);
    Analysis a;
    try {
      a = analyze(source);
    } catch (const std::exception& e) {
      o.fail("seed " + std::to_string(seed) + ": " + e.what());
      continue;
    }
    AstCounts counts = count_ast(a.program.methods[0]);
    if (counts.statements > limits.max_stmts)
      o.fail("seed " + std::to_string(seed) + ": " + std::to_string(counts.statements) +
             " statements exceed the limit");
    if (max_block_depth(*a.program.methods[0].body, -1) > limits.max_depth)
      o.fail("seed " + std::to_string(seed) + ": block nesting exceeds the limit");
    for (const FlowGraph& g : a.graphs) {
      for (const std::string& v : cf_violations(g))
        o.fail("seed " + std::to_string(seed) + ": " + v);
      std::string why;
      if (!df_three_way(g, why)) o.fail("seed " + std::to_string(seed) + ": " + why);
    }
  }
  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (dt >= 60.0) o.fail("took " + std::to_string(dt) + "s, budget 60s");
  return o;
}

Outcome kind_snapshot() {
  Outcome o;
  Analysis a = analyze(read_fixture("kinds.java"));
  if (emit_json(a.graphs) != read_fixture("kinds_expected.json"))
    o.fail("kinds.java JSON drifted from the frozen snapshot");
  return o;
}

Outcome label_round_trip() {
  Outcome o;
  if (get_text(*parse_statement("a = 1;")) != "a = 1;")
    o.fail("get_text of \"a = 1;\" is not literal");
  for (const auto& file : corpus_files()) {
    Analysis a = analyze(read_file(file));
    for (const FlowGraph& g : a.graphs) {
      for (const FlowNode& n : g.nodes) {
        try {
          switch (n.kind) {
            case FlowNodeKind::SimpleStmt:
            case FlowNodeKind::Return:
            case FlowNodeKind::Break:
            case FlowNodeKind::Continue: {
              auto reparsed = parse_statement(n.txt);
              if (!structurally_equal(*reparsed, *n.ast_stmt))
                o.fail(g.method_name + " node " + std::to_string(n.id) +
                       ": txt re-parses to a different statement");
              break;
            }
            case FlowNodeKind::Expr: {
              auto reparsed = parse_expression(n.txt);
              if (!structurally_equal(*reparsed, *n.ast_expr))
                o.fail(g.method_name + " node " + std::to_string(n.id) +
                       ": txt re-parses to a different expression");
              break;
            }
            default:
              break;
          }
        } catch (const std::exception& e) {
          o.fail(g.method_name + " node " + std::to_string(n.id) + ": txt " +
                 quote(n.txt) + " does not re-parse: " + e.what());
        }
      }
    }
  }
  return o;
}

Outcome var_table_shapes() {
  Outcome o;
  for (const auto& file : corpus_files()) {
    Analysis a = analyze(read_file(file));
    for (const FlowGraph& g : a.graphs) {
      auto defs = collect_defs(g);
      auto uses = collect_uses(g);
      for (const VarInfo& v : g.vars) {
        std::string where = g.method_name + " var " + v.name;
        if (v.definers.empty() || v.definers.front() != v.decl_node)
          o.fail(where + ": definers must start with the declaring node");
        if (v.kind == FlowNodeKind::Param && v.decl_node != g.entry)
          o.fail(where + ": parameters are declared by the method node");
        if (!std::is_sorted(v.definers.begin() + 1, v.definers.end()))
          o.fail(where + ": definers out of order");
        if (!std::is_sorted(v.users.begin(), v.users.end()))
          o.fail(where + ": users out of order");
        for (int d : v.definers)
          if (!defs[static_cast<size_t>(d)].count(v.name))
            o.fail(where + ": listed definer does not define it");
        for (int u : v.users)
          if (!uses[static_cast<size_t>(u)].count(v.name))
            o.fail(where + ": listed user does not use it");
        for (const FlowNode& n : g.nodes) {
          if (defs[static_cast<size_t>(n.id)].count(v.name) &&
              std::find(v.definers.begin(), v.definers.end(), n.id) == v.definers.end())
            o.fail(where + ": defining node " + std::to_string(n.id) + " not listed");
          if (uses[static_cast<size_t>(n.id)].count(v.name) &&
              std::find(v.users.begin(), v.users.end(), n.id) == v.users.end())
            o.fail(where + ": using node " + std::to_string(n.id) + " not listed");
        }
      }
    }
  }

  // Frozen spot checks: a parameter, a reassigned local, an uninitialized one.
  Analysis sample = analyze(read_fixture("sample.java"));
  const FlowGraph& sum = graph_of(sample, "sum");
  if (sum.vars.size() != 3 || sum.vars[0].definers != std::vector<int>{0} ||
      sum.vars[0].users != std::vector<int>{4} ||
      sum.vars[1].definers != std::vector<int>{1, 6} ||
      sum.vars[1].users != std::vector<int>{6, 8} ||
      sum.vars[2].definers != std::vector<int>{2, 7} ||
      sum.vars[2].users != std::vector<int>{4, 6, 7})
    o.fail("sum: variable table drifted from the frozen values");

  Analysis late = analyze(
      "class T { static int m(int n) { int r; if (n > 0) { r = n; } return r; } }");
  const VarInfo& r = var_of(late.graphs[0], "r");
  if (r.definers != std::vector<int>{1, 5} || r.users != std::vector<int>{6})
    o.fail("uninitialized declaration: expected definers [decl, assignment]");
  return o;
}

Outcome validation_round_trip() {
  Outcome o;
  for (const auto& file : corpus_files()) {
    Analysis a = analyze(read_file(file));
    std::string autospec = render_auto_spec(a.graphs);
    std::vector<std::string> lines = split_lines(autospec);

    int total_links = 0;
    for (const auto& l : lines)
      if (l.find("-->") != std::string::npos) ++total_links;

    ValidationReport self = validate(a.graphs, parse_spec(autospec));
    if (!self.clean() || self.checked != total_links) {
      o.fail(file + ": emitted spec does not validate clean");
      continue;
    }

    for (size_t i = 0; i < lines.size(); ++i) {
      if (lines[i].find("-->") == std::string::npos) continue;
      std::vector<std::string> pruned = lines;
      pruned.erase(pruned.begin() + static_cast<long>(i));
      ValidationReport rep = validate(a.graphs, parse_spec(join_lines(pruned)));
      if (rep.missing != 0 || rep.false_count != 1 || rep.unmatched != 0) {
        o.fail(file + ": deleting line " + std::to_string(i + 1) +
               " did not yield exactly one false link");
        continue;
      }
      std::string link = lines[i].substr(2);            // strip indentation
      std::string kind = link.substr(0, 2);             // cf / df
      std::string rest = link.substr(3, link.size() - 4);  // "src" --> "dst"
      std::string expected = "FALSE " + kind + ": " + rest + "\nRESULT: " +
                             std::to_string(total_links - 1) +
                             " checked, 0 missing, 1 false\n";
      if (render_report(rep) != expected)
        o.fail(file + ": false-link report is not byte-exact for line " +
               std::to_string(i + 1));
    }

    // Invent a link by reversing an edge whose reverse does not exist.
    for (const FlowGraph& g : a.graphs) {
      std::set<std::pair<std::string, std::string>> cf_triples;
      for (const FlowNode& n : g.nodes)
        for (int t : n.cf_next) cf_triples.insert({n.txt, g.node(t).txt});
      auto pick = cf_triples.end();
      for (auto it = cf_triples.begin(); it != cf_triples.end(); ++it)
        if (!cf_triples.count({it->second, it->first})) {
          pick = it;
          break;
        }
      if (pick == cf_triples.end()) {
        o.fail(g.method_name + ": no reversible cf edge to invent a link from");
        continue;
      }
      std::string invented = "  cf " + quote(pick->second) + " --> " + quote(pick->first) + ";";
      std::vector<std::string> extended = lines;
      auto header = std::find(extended.begin(), extended.end(), "method " + g.method_name + " {");
      if (header == extended.end()) {
        o.fail(g.method_name + ": method header missing from emitted spec");
        continue;
      }
      extended.insert(header + 1, invented);
      ValidationReport rep = validate(a.graphs, parse_spec(join_lines(extended)));
      if (rep.missing != 1 || rep.false_count != 0 || rep.unmatched != 0) {
        o.fail(g.method_name + ": invented link did not yield exactly one missing link");
        continue;
      }
      std::string expected = "MISSING cf: " + quote(pick->second) + " --> " +
                             quote(pick->first) + "\nRESULT: " +
                             std::to_string(total_links + 1) +
                             " checked, 1 missing, 0 false\n";
      if (render_report(rep) != expected)
        o.fail(g.method_name + ": missing-link report is not byte-exact");
    }
  }
  return o;
}

Outcome determinism() {
  Outcome o;
  for (const auto& file : corpus_files()) {
    Analysis first = analyze(read_file(file));
    Analysis second = analyze(read_file(file));
    if (emit_json(first.graphs) != emit_json(second.graphs) ||
        emit_dot(first.graphs) != emit_dot(second.graphs) ||
        emit_text(first.graphs) != emit_text(second.graphs) ||
        render_auto_spec(first.graphs) != render_auto_spec(second.graphs))
      o.fail(file + ": emitters differ between runs");
  }
  const std::string commands[] = {
      cli_path() + " build " + fixture_path("sample.java"),
      cli_path() + " build --format dot " + fixture_path("sample.java"),
      cli_path() + " build --stage structure " + fixture_path("kinds.java"),
      cli_path() + " validate --emit-spec " + fixture_path("sample.java"),
      cli_path() + " validate " + fixture_path("sample.java") + " " +
          fixture_path("sample_checks.spec"),
  };
  for (const std::string& cmd : commands) {
    ProcResult a = run_command(cmd);
    ProcResult b = run_command(cmd);
    if (a.output != b.output || a.exit_code != b.exit_code)
      o.fail("command output differs between runs: " + cmd);
  }
  return o;
}

}  // namespace

int main() {
  struct Entry {
    const char* name;
    Outcome (*check)();
  };
  const Entry checks[] = {
      {"df fixpoint agrees with both oracles on the corpus", oracle_corpus},
      {"500 generated programs: oracles and cf invariants", generated_programs},
      {"node kinds match the frozen JSON snapshot", kind_snapshot},
      {"node labels re-parse to their own subtrees", label_round_trip},
      {"variable tables keep definer and user order", var_table_shapes},
      {"emitted specs validate clean; edits are localized", validation_round_trip},
      {"repeated runs are byte-identical", determinism},
  };

  bool all_ok = true;
  int index = 0;
  for (const Entry& entry : checks) {
    ++index;
    auto t0 = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = entry.check();
    } catch (const std::exception& e) {
      outcome.fail(std::string("unhandled exception: ") + e.what());
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%d] %-52s %s  (%.2fs)\n", index, entry.name,
                outcome.ok ? "PASS" : "FAIL", dt);
    for (const std::string& note : outcome.notes)
      std::printf("      %s\n", note.c_str());
    all_ok = all_ok && outcome.ok;
  }
  std::printf("%s\n", all_ok ? "acceptance: all checks passed"
                             : "acceptance: FAILURES");
  return all_ok ? 0 : 1;
}
