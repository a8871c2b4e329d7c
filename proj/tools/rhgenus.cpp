#include <iostream>

#include <CLI11.hpp>

#include "rhg/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Sum of 2g_i - 2 over the components of f(x) = g(y)"};
  rhg::InputSpec spec;
  bool json = false;
  long components = 0;
  app.add_option("--field", spec.field, "Q or F<p>")->required();
  app.add_option("--f", spec.f_expr, "rational function in x")->required();
  app.add_option("--g", spec.g_expr, "rational function in y")->required();
  auto* comp = app.add_option("--components", components, "number r of irreducible components");
  app.add_flag("--json", json, "emit JSON");
  app.add_option("--seed", spec.seed, "seed for the factorisation randomness");
  app.add_flag("--verbose", spec.verbose, "include ramification portraits in JSON");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return rhg::kExitInput;
  }
  if (comp->count() > 0) spec.components = components;
  spec.output_mode = json ? rhg::OutputMode::Json : rhg::OutputMode::Report;
  return rhg::run(spec, std::cout, std::cerr);
}
