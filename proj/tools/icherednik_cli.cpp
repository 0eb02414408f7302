#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "icherednik/commands.hpp"

using namespace icherednik;

namespace {

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Infinitesimal Cherednik algebras of gl_n: relations, center, blocks, char p checks"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig flags;
  std::string b_list, c_list, weights_path, config_path, ctable_path, out_path;
  auto* o_n = app.add_option("--n", flags.n, "rank n of gl_n");
  auto* o_char = app.add_option("--char", flags.characteristic, "characteristic (0 or a prime)");
  auto* o_b = app.add_option("--b", b_list, "deformation parameters b0,b1,... (exact, e.g. 0,1/2)");
  auto* o_ctable = app.add_option("--ctable", ctable_path, "JSON table file instead of --b");
  auto* o_maxdeg = app.add_option("--maxdeg", flags.maxdeg, "word length for the PBW associativity pass");
  auto* o_bound = app.add_option("--center-bound", flags.center_bound, "initial degree bound for the center solver");
  auto* o_depth = app.add_option("--verma-depth", flags.verma_depth, "truncation depth of Verma modules");
  auto* o_weights = app.add_option("--weights", weights_path, "JSON file with a list of weights");
  auto* o_c = app.add_option("--c", c_list, "coefficients c0,c1,... of c(h) for charp");
  auto* o_format = app.add_option("--format", flags.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  auto* o_out = app.add_option("--out", out_path, "write the report here instead of stdout");
  app.add_option("--config", config_path, "JSON config mirroring the flags; flags override");

  const std::vector<std::pair<std::string, std::string>> commands{
      {"relations", "print the commutator table [Y(i), X(j)]"},
      {"verify", "run every verification suite; exit 0 iff all pass"},
      {"center", "compute the central generators eta_1..eta_n"},
      {"blocks", "partition a weight sample by central character"},
      {"charp", "p-center, Casimir and rank checks for the rank one algebra over F_p"}};
  for (const auto& [name, help] : commands) app.add_subcommand(name, help);

  CLI11_PARSE(app, argc, argv);

  try {
    RunConfig cfg;
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw std::invalid_argument("cannot open " + config_path);
      cfg = config_from_json(json::parse(in));
    }
    if (o_n->count()) cfg.n = flags.n;
    if (o_char->count()) cfg.characteristic = flags.characteristic;
    if (o_b->count()) cfg.b = split_list(b_list);
    if (o_ctable->count()) cfg.ctable_path = ctable_path;
    if (o_maxdeg->count()) cfg.maxdeg = flags.maxdeg;
    if (o_bound->count()) cfg.center_bound = flags.center_bound;
    if (o_depth->count()) cfg.verma_depth = flags.verma_depth;
    if (o_c->count()) cfg.c = split_list(c_list);
    if (o_format->count()) cfg.format = flags.format;
    if (o_out->count()) cfg.out = out_path;
    if (o_weights->count()) cfg = config_from_json(json{{"weights", weights_path}}, cfg);

    const std::string command = app.get_subcommands().front()->get_name();
    const CommandResult res = run_command(command, cfg);
    const std::string body = cfg.format == "json" ? res.report.dump(2) + "\n" : res.text;
    if (cfg.out) {
      std::ofstream out(*cfg.out);
      if (!out) throw std::invalid_argument("cannot write " + *cfg.out);
      out << body;
    } else {
      std::cout << body;
    }
    return res.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
