#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "commands.hpp"

namespace {

typeiv::cli::Json read_input(const std::string& path) {
  typeiv::cli::Json j;
  if (path.empty() || path == "-") {
    std::cin >> j;
    return j;
  }
  std::ifstream f(path);
  if (!f) {
    std::cerr << "cannot open input '" << path << "'\n";
    std::exit(2);
  }
  f >> j;
  return j;
}

void emit(const typeiv::cli::Outcome& out, bool text) {
  if (text)
    std::cout << typeiv::cli::render_text(out.report);
  else
    std::cout << out.report.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"typeiv: exact and numeric period-domain computations"};
  app.require_subcommand(1);

  typeiv::cli::Options opts;
  if (const char* env = std::getenv("PDT_MAX_ORDER")) opts.max_order = std::atoi(env);

  std::map<std::string, std::string> input_paths;
  for (const auto& spec : typeiv::cli::dispatch_table()) {
    CLI::App* sub = app.add_subcommand(spec.name, spec.summary);
    if (spec.needs_input)
      sub->add_option("input", input_paths[spec.name], "input JSON file ('-' for stdin)");
    sub->add_flag("--text", opts.text, "human-readable output");
    sub->add_option("--seed", opts.seed, "seed for randomized witness search");
    sub->add_option("--tol", opts.tol, "tolerance override");
    sub->add_option("--height", opts.height, "isotropic enumeration bound");
    sub->add_option("--degree", opts.degree, "extrapolation degree");
    sub->add_option("--points", opts.points, "quadrature points per axis");
    sub->add_option("--epsilon", opts.epsilon, "tube radius");
  }
  CLI::App* batch = app.add_subcommand("batch", "run a manifest of (command, input) pairs");
  std::string manifest_path;
  batch->add_option("manifest", manifest_path, "manifest JSON file")->required();
  batch->add_flag("--text", opts.text, "human-readable output");
  batch->add_option("--seed", opts.seed, "seed for randomized witness search");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? 2 : 0;
  }

  try {
    if (batch->parsed()) {
      auto manifest = read_input(manifest_path);
      std::string base_dir;
      auto slash = manifest_path.find_last_of('/');
      if (slash != std::string::npos) base_dir = manifest_path.substr(0, slash);
      auto out = typeiv::cli::run_batch(manifest, opts, base_dir);
      emit(out, opts.text);
      return out.exit_code;
    }
    for (const auto& spec : typeiv::cli::dispatch_table()) {
      CLI::App* sub = app.get_subcommand(spec.name);
      if (!sub->parsed()) continue;
      typeiv::cli::Json input;
      if (spec.needs_input) input = read_input(input_paths[spec.name]);
      auto out = typeiv::cli::run_command(spec.name, input, opts);
      emit(out, opts.text);
      return out.exit_code;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
