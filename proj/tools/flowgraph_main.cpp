#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "flowgraph/diagnostics.hpp"
#include "flowgraph/export.hpp"
#include "flowgraph/flow_spec.hpp"
#include "flowgraph/pipeline.hpp"

// Exit codes: 0 success / spec satisfied, 1 validation findings,
// 2 malformed input (diagnostics on stderr), 3 I/O failure.

namespace {

int fail_io(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return 3;
}

int fail_usage(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return 2;
}

int diagnostic(const std::string& file, const flowgraph::DiagnosticError& e) {
  std::cerr << file << ":" << e.pos().line << ":" << e.pos().column
            << ": error: " << e.what() << "\n";
  return 2;
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) return false;
  out = buf.str();
  return true;
}

int write_output(const std::string& path, const std::string& data) {
  if (path.empty()) {
    std::cout << data;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) return fail_io("cannot open '" + path + "' for writing");
  out << data;
  out.flush();
  if (!out) return fail_io("cannot write '" + path + "'");
  return 0;
}

int run_build(const std::string& file, const std::string& stage,
              const std::string& format, const std::string& oracle,
              const std::string& out_path) {
  std::string source;
  if (!read_file(file, source)) return fail_io("cannot read '" + file + "'");

  flowgraph::Stage st = stage == "structure" ? flowgraph::Stage::Structure
                        : stage == "cfg"     ? flowgraph::Stage::Cfg
                                             : flowgraph::Stage::Pdg;
  flowgraph::DfAlgo algo = oracle.empty()   ? flowgraph::DfAlgo::Fixpoint
                           : oracle == "rd" ? flowgraph::DfAlgo::ReachingDefs
                                            : flowgraph::DfAlgo::PathEnum;
  try {
    flowgraph::Analysis analysis = flowgraph::analyze(source, st, algo);
    std::string rendered = format == "json" ? flowgraph::emit_json(analysis.graphs)
                           : format == "dot" ? flowgraph::emit_dot(analysis.graphs)
                                             : flowgraph::emit_text(analysis.graphs);
    return write_output(out_path, rendered);
  } catch (const flowgraph::DiagnosticError& e) {
    return diagnostic(file, e);
  }
}

int run_validate(const std::string& file, const std::string& spec_path,
                 bool emit_spec) {
  std::string source;
  if (!read_file(file, source)) return fail_io("cannot read '" + file + "'");

  flowgraph::Analysis analysis;
  try {
    analysis = flowgraph::analyze(source, flowgraph::Stage::Pdg);
  } catch (const flowgraph::DiagnosticError& e) {
    return diagnostic(file, e);
  }

  if (emit_spec) {
    if (!spec_path.empty()) {
      return fail_usage("--emit-spec takes no spec file");
    }
    std::cout << flowgraph::render_auto_spec(analysis.graphs);
    return 0;
  }
  if (spec_path.empty()) {
    return fail_usage("validate requires a spec file (or --emit-spec)");
  }

  std::string spec_source;
  if (!read_file(spec_path, spec_source)) {
    return fail_io("cannot read '" + spec_path + "'");
  }
  flowgraph::FlowSpec spec;
  try {
    spec = flowgraph::parse_spec(spec_source);
  } catch (const flowgraph::DiagnosticError& e) {
    return diagnostic(spec_path, e);
  }

  flowgraph::ValidationReport report = flowgraph::validate(analysis.graphs, spec);
  std::cout << flowgraph::render_report(report);
  return report.clean() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"program graphs for a mini-Java subset: structure, control flow, data flow"};
  app.require_subcommand(1);

  std::string build_file, build_out;
  std::string stage = "pdg";
  std::string format = "json";
  std::string oracle;
  CLI::App* build_cmd =
      app.add_subcommand("build", "analyze a source file and emit its graphs");
  build_cmd->add_option("file", build_file, "mini-Java source file")->required();
  build_cmd->add_option("--stage", stage, "pipeline stage (default pdg)")
      ->check(CLI::IsMember({"structure", "cfg", "pdg"}));
  build_cmd->add_option("--format", format, "output format (default json)")
      ->check(CLI::IsMember({"json", "dot", "text"}));
  build_cmd
      ->add_option("--oracle", oracle, "debug: fill df edges from an oracle instead")
      ->check(CLI::IsMember({"rd", "path"}));
  build_cmd->add_option("-o,--output", build_out, "write to a file instead of stdout");

  std::string val_file, val_spec;
  bool emit_spec = false;
  CLI::App* val_cmd =
      app.add_subcommand("validate", "check a flow spec against the computed graphs");
  val_cmd->add_option("file", val_file, "mini-Java source file")->required();
  val_cmd->add_option("spec", val_spec, "flow spec file");
  val_cmd->add_flag("--emit-spec", emit_spec,
                    "print the graphs' own edges in spec syntax and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*build_cmd) return run_build(build_file, stage, format, oracle, build_out);
  return run_validate(val_file, val_spec, emit_spec);
}
