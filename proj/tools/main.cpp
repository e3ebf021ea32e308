#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "connectoid/command.hpp"

using namespace connectoid;

int main(int argc, char** argv) {
  Command cmd;
  if (const char* env = std::getenv("CONNECTOID_BUDGET")) {
    try {
      cmd.budget = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "CONNECTOID_BUDGET must be a number\n";
      return kExitMalformed;
    }
  }
  std::string format = "json";
  std::string out_path;

  CLI::App app{"Connectoid toolkit: build and verify normal trees, decompositions and orders"};
  app.require_subcommand(1);
  for (const auto& [name, help] : command_verbs()) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("instance", cmd.instance, "instance JSON file or presented fixture name")->required();
    sub->add_option("--artifact", cmd.artifact, "artifact or report JSON (tree, td, witness, necklace, partition tree)");
    sub->add_option("--root", cmd.root, "root element");
    sub->add_option("--target", cmd.target, "target set: all, even, odd, column:i or list:a;b");
    sub->add_option("--sep", cmd.sep, "separator elements, repeatable or ';'-separated")->allow_extra_args(false);
    sub->add_option("--sub", cmd.sub, "subset elements, repeatable or ';'-separated")->allow_extra_args(false);
    sub->add_option("--depth", cmd.depth, "exploration depth for presented instances");
    sub->add_option("--budget", cmd.budget, "step budget (default: $CONNECTOID_BUDGET)");
    sub->add_option("--rounds", cmd.rounds, "rounds for presented constructions");
    sub->add_option("--hits", cmd.hits, "target hits required by disperse-probe");
    sub->add_option("--lambda", cmd.lambda, "separator size bound for strong-check");
    sub->add_option("--format", format, "stdout format")->check(CLI::IsMember({"json", "dot"}));
    sub->add_option("--out", out_path, "write the JSON report to this file");
    sub->callback([&cmd, sub] { cmd.verb = sub->get_name(); });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitMalformed;
  }

  const CommandResult result = run_command(cmd);
  if (result.report.contains("error")) std::cerr << "error: " << result.report["error"]["message"].get<std::string>() << "\n";
  const std::string text = result.report.dump(2) + "\n";
  if (!out_path.empty()) {
    std::ofstream file(out_path);
    if (!file) {
      std::cerr << "cannot write '" << out_path << "'\n";
      return kExitMalformed;
    }
    file << text;
  }
  if (format == "dot" && !result.dot.empty()) {
    std::cout << result.dot;
  } else {
    std::cout << text;
  }
  return result.exit;
}
