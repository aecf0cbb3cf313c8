#include "run.hpp"

#include <CLI11.hpp>

#include <map>
#include <string>
#include <vector>

int main(int argc, char** argv) {
  using mtfl::io::RunConfig;

  CLI::App app{
      "mtfl: l2,1-regularized multi-task feature learning.\n"
      "Solves the joint feature selection problem via two equivalent smooth\n"
      "reformulations (an auxiliary-variable cone form and a norm-ball\n"
      "constrained form) with an accelerated projected-gradient method."};

  RunConfig config;

  const std::map<std::string, RunConfig::Command> commands{
      {"solve", RunConfig::Command::solve},
      {"path", RunConfig::Command::path},
      {"bench", RunConfig::Command::bench},
      {"gen", RunConfig::Command::gen}};
  const std::map<std::string, RunConfig::LossKind> losses{
      {"least-squares", RunConfig::LossKind::least_squares},
      {"logistic", RunConfig::LossKind::logistic}};
  const std::map<std::string, RunConfig::Reformulation> reformulations{
      {"amtfl1", RunConfig::Reformulation::amtfl1},
      {"amtfl2", RunConfig::Reformulation::amtfl2}};

  app.add_option("--command", config.command, "solve | path | bench | gen")
      ->required()
      ->transform(CLI::CheckedTransformer(commands, CLI::ignore_case));
  app.add_option("--loss", config.loss, "least-squares | logistic")
      ->transform(CLI::CheckedTransformer(losses, CLI::ignore_case));
  app.add_option("--reformulation", config.reformulation, "amtfl1 | amtfl2")
      ->transform(CLI::CheckedTransformer(reformulations, CLI::ignore_case));

  double rho = 0.0, z = 0.0;
  auto* rho_opt =
      app.add_option("--rho", rho, "regularization weight (amtfl1)");
  auto* z_opt = app.add_option("--z", z, "l2,1-ball radius (amtfl2)");
  app.add_option("--params", config.params,
                 "comma-separated parameter sequence for path")
      ->delimiter(',');
  app.add_flag("--warm", config.warm,
               "warm-start each path point at the previous solution");

  app.add_option("--l0", config.l0, "initial step-scale guess")
      ->check(CLI::PositiveNumber);
  app.add_option("--tol", config.tol, "relative objective-gap stop threshold")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-iters", config.max_iters, "iteration cap")
      ->check(CLI::PositiveNumber);

  app.add_option("--input", config.input, "input dataset CSV");
  app.add_option("--out", config.out, "output directory (default .)");

  std::uint64_t seed = 0;
  auto* seed_opt =
      app.add_option("--seed", seed, "RNG seed for gen (and bench)");

  app.add_option("--n", config.gen_n, "gen: feature count");
  app.add_option("--k", config.gen_k, "gen: task count");
  app.add_option("--m-per-task", config.gen_m_per_task,
                 "gen: samples per task");
  app.add_option("--sparsity", config.gen_sparsity,
                 "gen: fraction of zero weight rows, in [0,1]");
  app.add_option("--noise-sigma", config.gen_noise_sigma,
                 "gen: target noise standard deviation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (*rho_opt) config.rho = rho;
  if (*z_opt) config.z = z;
  if (*seed_opt) config.seed = seed;

  return mtfl::io::run(config);
}
