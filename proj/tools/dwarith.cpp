#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "dwarith/run.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact Dijkgraaf-Witten computations over finite Galois models"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  std::string format = "text";

  const std::vector<std::string> commands = {
      "validate", "homs", "lambda",    "cs",   "partition",
      "hdim",     "glue", "transport", "suite"};
  const std::vector<std::pair<std::string, std::string>> descriptions = {
      {"validate", "run all axiom checks and report violations"},
      {"homs", "list representation spaces with orbits and stabilizers"},
      {"lambda", "print the Chern-Simons 1-cocycle tables"},
      {"cs", "print CS tables for globals, tubes and closed models"},
      {"partition", "print partition-function vectors"},
      {"hdim", "print quantum-space dimensions and bases"},
      {"glue", "check the gluing identity with both sides printed"},
      {"transport", "apply the declared transports"},
      {"suite", "run every invariant sweep; nonzero exit on failure"}};

  for (const auto& [name, description] : descriptions) {
    CLI::App* sub = app.add_subcommand(name, description);
    sub->add_option("--config", config_path, "model configuration file")
        ->required();
    sub->add_option("--out", out_path, "write the report to a file");
    sub->add_option("--format", format, "text or structured")
        ->check(CLI::IsMember({"text", "structured"}));
  }

  CLI11_PARSE(app, argc, argv);

  std::string command;
  for (const auto& name : commands)
    if (app.get_subcommand(name)->parsed()) command = name;

  try {
    dwarith::ModelConfig config = dwarith::load_config_file(config_path);
    dwarith::RunResult result = dwarith::run_command(command, config);
    std::string payload = format == "structured"
                              ? result.structured.dump(2) + "\n"
                              : result.text;
    if (out_path.empty()) {
      std::cout << payload;
    } else {
      std::ofstream out(out_path);
      out << payload;
    }
    return result.exit_code;
  } catch (const dwarith::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return dwarith::exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
