// Workbench entry point: run a scenario file or the built-in corpus.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fibercone/corpus.hpp"
#include "fibercone/report.hpp"

namespace {

struct Options {
  fibercone::Config cfg;
  std::string format = "text";
};

template <class K>
fibercone::RunResult run_text(const std::string& name, const std::string& text,
                              const Options& opt, const K& field) {
  auto s = fibercone::parse_scenario(text);
  return fibercone::run_scenario(s, name, opt.cfg, field);
}

fibercone::RunResult run_dispatch(const std::string& name,
                                  const std::string& text, const Options& opt) {
  if (opt.cfg.rationals)
    return run_text(name, text, opt, fibercone::Rationals{});
  return run_text(name, text, opt, fibercone::GFp{opt.cfg.p});
}

std::string file_stem(const std::string& path) {
  auto slash = path.find_last_of("/\\");
  std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
  auto dot = base.find_last_of('.');
  return dot == std::string::npos || dot == 0 ? base : base.substr(0, dot);
}

int run_file(const std::string& path, const Options& opt) {
  std::ifstream in(path);
  if (!in)
    throw fibercone::precondition_error("cannot open scenario file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  auto rr = run_dispatch(file_stem(path), buf.str(), opt);
  if (opt.format == "json")
    std::cout << rr.doc.dump(2) << "\n";
  else
    std::cout << rr.text;
  return 0;
}

int run_corpus(const std::string& filter, const Options& opt) {
  bool any = false;
  fibercone::json all = fibercone::json::array();
  for (auto& [name, text] : fibercone::corpus()) {
    if (!filter.empty() && name.find(filter) == std::string::npos) continue;
    any = true;
    auto rr = run_dispatch(name, text, opt);
    if (opt.format == "json")
      all.push_back(rr.doc);
    else
      std::cout << rr.text << "\n" << std::string(64, '-') << "\n";
  }
  if (!any)
    throw fibercone::precondition_error("no corpus scenario matches: " + filter);
  if (opt.format == "json") std::cout << all.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fiber cones of good filtrations: spreads, reductions, "
               "multiplicities, and Cohen-Macaulay verdicts"};
  app.require_subcommand(1);

  Options opt;
  std::uint64_t seed_raw = 0;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--seed", seed_raw, "seed for random coefficient draws");
    cmd->add_option("--prime", opt.cfg.p, "coefficient field characteristic")
        ->check(CLI::PositiveNumber);
    cmd->add_flag("--rationals", opt.cfg.rationals,
                  "compute over the rational numbers");
    cmd->add_option("--nmax", opt.cfg.n_max, "filtration scan bound");
    cmd->add_option("--attempts", opt.cfg.attempts,
                    "random draws per sequence step");
    cmd->add_option("--tmax", opt.cfg.t_max, "rescaling factor budget");
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    return cmd;
  };

  std::string path;
  auto* run = add_common(app.add_subcommand("run", "run a scenario file"));
  run->add_option("file", path, "scenario file")->required();

  std::string filter;
  auto* corpus =
      add_common(app.add_subcommand("corpus", "run the built-in scenarios"));
  corpus->add_option("--filter", filter, "substring filter on scenario names");

  auto* list = app.add_subcommand("list", "list the built-in scenarios");

  CLI11_PARSE(app, argc, argv);

  try {
    if (list->parsed()) {
      for (auto& [name, text] : fibercone::corpus()) {
        auto nl = text.find('\n');
        std::cout << name << "  " << text.substr(2, nl - 2) << "\n";
      }
      return 0;
    }
    if (run->parsed() && run->count("--seed")) opt.cfg.seed = seed_raw;
    if (corpus->parsed() && corpus->count("--seed")) opt.cfg.seed = seed_raw;
    if (run->parsed()) return run_file(path, opt);
    return run_corpus(filter, opt);
  } catch (const fibercone::consistency_error& e) {
    std::cerr << "inconsistency: " << e.what() << "\n";
    return 3;
  } catch (const fibercone::fc_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
