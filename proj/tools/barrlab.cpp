#include <iostream>

#include <CLI11.hpp>

#include "barrlab/cli/run.hpp"

int main(int argc, char** argv) {
  barrlab::cli::RunConfig cfg;
  CLI::App app{"Exhaustive checks for monads, distributive laws, terminal chains and weighted automata",
               "barrlab"};
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--max-size", cfg.max_size, "largest carrier for exhaustive checks")
      ->check(CLI::PositiveNumber);
  app.add_option("--depth", cfg.depth, "terminal chain depth");
  app.add_option_function<barrlab::Card>(
      "--probe-depth", [&](barrlab::Card p) { cfg.probe_depth = p; },
      "depth up to which limit points are compared (default: --depth)");
  app.add_option("--search-cap", cfg.search_cap, "complete candidates tried by commute search");
  app.add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", cfg.seed, "seed for random sampling");
  app.add_option("--jobs", cfg.jobs, "worker threads (0 = OpenMP default)");
  app.add_option("--functor", cfg.functor, "functor shorthand or JSON file");
  app.add_option("--monad", cfg.monad, "builtin monad");
  app.add_option("--algebra", cfg.algebra, "free:<n>, terminal or an algebra file");
  app.add_option("--alphabet", cfg.alphabet, "comma separated letters");
  app.add_option("--case", cfg.partner, "commute: moore, streams or constant");
  app.add_option_function<barrlab::Card>("--n", [&](barrlab::Card n) { cfg.n = n; },
                                         "level or truncation index");
  app.add_option_function<std::string>("--state", [&](const std::string& s) { cfg.state = s; },
                                       "start state");
  app.add_option_function<std::string>("--series", [&](const std::string& s) { cfg.series = s; },
                                       "series file used instead of a random point");

  const std::vector<std::pair<const char*, const char*>> commands = {
      {"check-monad", "monad laws up to --max-size"},
      {"check-algebra", "algebra laws of free:<n>:<monad>, terminal:<monad> or a file"},
      {"check-distlaw", "em|kl <law>: distributive law axioms"},
      {"lift", "<law>: lift an algebra (--algebra) and check it"},
      {"diff-liftings", "<law> [<law>]: compare two liftings of one algebra"},
      {"chain", "terminal chain levels of --functor"},
      {"anamorphism", "<coalgebra or automaton>: the cone into the chain"},
      {"behavior", "<automaton>: truncated behavior of --state"},
      {"distance", "<series> <series>: ultrametric distance"},
      {"limit", "<sequence>: limit of a Cauchy sequence of polynomials"},
      {"density", "h_n of a random (or --series) point"},
      {"lemma1", "cone of the lifted coalgebra equals the level algebras"},
      {"lemma2", "the level family is a coalgebra map and respects units"},
      {"commute", "check|search [candidate]: commuting pair"},
      {"words", "initial T-algebra words below --depth"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("inputs", cfg.args, "files or builtin names");
    sub->fallthrough();
    sub->callback([&cfg, sub] { cfg.command = sub->get_name(); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  for (int i = 0; i < argc; ++i) cfg.argv.emplace_back(i == 0 ? "barrlab" : argv[i]);

  const auto report = barrlab::cli::run(cfg);
  std::cout << barrlab::cli::render(report, cfg.format);
  return report.exit_code;
}
