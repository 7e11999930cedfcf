// surgeon: classical invariants of contact (+-1/m)-surgery diagrams.

#include "surgeon/commands.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <map>
#include <string>

int main(int argc, char** argv) {
  using namespace surgeon::cli;

  CLI::App app{"Classical invariants of knots in contact (+-1/m)-surgery diagrams"};
  app.require_subcommand(1);

  Options opt;
  const char* color = std::getenv("SURGEON_COLOR");
  opt.color = color != nullptr && std::string(color) == "1";

  std::string file;
  std::string knot, output, emit_diagram;
  const std::map<std::string, Format> formats{{"json", Format::json}, {"text", Format::text}};

  auto add = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", file, "input file")->required();
    sub->add_option("--format", opt.format, "output format (json|text)")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    return sub;
  };
  CLI::App* check = add("check", "parse and validate a diagram file");
  CLI::App* invariants = add("invariants", "tb, rot, sl and order of companion knots in the surgered manifold");
  invariants->add_option("--knot", knot, "knot name (default: all knots)");
  CLI::App* d3 = add("d3", "homology, Euler class and d3-invariant of the surgered contact structure");
  CLI::App* expand = add("expand", "replace (+-1/m)-components by m (+-1)-push-offs");
  expand->add_option("-o,--output", output, "output diagram file (default: stdout)");
  CLI::App* front = add("front", "classical invariants of a front-projection file");
  front->add_option("--emit-diagram", emit_diagram, "write the assembled diagram file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUserError;
  }
  if (!knot.empty()) opt.knot = knot;
  if (!output.empty()) opt.output = output;
  if (!emit_diagram.empty()) opt.emit_diagram = emit_diagram;

  if (check->parsed()) return cmd_check(file, opt, std::cout, std::cerr);
  if (invariants->parsed()) return cmd_invariants(file, opt, std::cout, std::cerr);
  if (d3->parsed()) return cmd_d3(file, opt, std::cout, std::cerr);
  if (expand->parsed()) return cmd_expand(file, opt, std::cout, std::cerr);
  if (front->parsed()) return cmd_front(file, opt, std::cout, std::cerr);
  return kInternalError;
}
