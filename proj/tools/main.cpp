#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qmt/harness.hpp"

namespace {

qmt::RunConfig base_config() {
  qmt::RunConfig c;
  if (const char* env = std::getenv("QMT_SEED")) c.seed = std::strtoull(env, nullptr, 10);
  return c;
}

void add_output_flags(CLI::App* app, qmt::RunConfig& c) {
  app->add_option("--seed", c.seed, "sampler seed (default: QMT_SEED or 0)");
  app->add_option("--out", c.out, "write the report to this path");
  app->add_option("--format", c.format, "report format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app->add_option("--tol", c.tol, "comparison tolerance echo");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantale-valued metric toolkit"};
  app.require_subcommand(1);

  qmt::RunConfig c = base_config();

  CLI::App* laws = app.add_subcommand("laws", "run the quantale law suite");
  laws->add_option("--quantale", c.quantale,
                   "truth | extreal | unit | errors | ddf | lattice:<path>");
  laws->add_option("--budget", c.budget, "sampled tuples per law");
  add_output_flags(laws, c);
  laws->callback([&] { c.command = "laws"; });

  CLI::App* space = app.add_subcommand("space", "metric space checks");
  space->require_subcommand(1);
  CLI::App* space_check = space->add_subcommand("check", "verify the axioms");
  space_check->add_option("file", c.inputs)->required();
  add_output_flags(space_check, c);
  space_check->callback([&] { c.command = "space-check"; });
  CLI::App* space_ball = space->add_subcommand("ball", "open ball membership");
  space_ball->add_option("file", c.inputs)->required();
  space_ball->add_option("--center", c.center)->required();
  space_ball->add_option("--eps", c.eps)->required();
  add_output_flags(space_ball, c);
  space_ball->callback([&] { c.command = "space-ball"; });
  CLI::App* space_cauchy =
      space->add_subcommand("cauchy", "prefix Cauchy/convergence diagnostic");
  space_cauchy->add_option("file", c.inputs)->required();
  space_cauchy->add_option("--seq", c.seq, "comma-separated points")
      ->required();
  space_cauchy->add_option("--depth", c.depth);
  space_cauchy->add_option("--eps", c.eps, "single threshold literal");
  space_cauchy->add_option("--limit", c.limit,
                           "check convergence to this point");
  add_output_flags(space_cauchy, c);
  space_cauchy->callback([&] { c.command = "space-cauchy"; });

  CLI::App* st = app.add_subcommand("struct", "metric structure checks");
  st->require_subcommand(1);
  CLI::App* st_check = st->add_subcommand("check", "verify interpretations");
  st_check->add_option("file", c.inputs)->required();
  add_output_flags(st_check, c);
  st_check->callback([&] { c.command = "struct-check"; });
  CLI::App* st_embed = st->add_subcommand("embed", "verify an embedding");
  st_embed->add_option("files", c.inputs, "source and target structure files")
      ->expected(2);
  st_embed->add_option("--map", c.map, "pairs from:to, comma separated")
      ->required();
  add_output_flags(st_embed, c);
  st_embed->callback([&] { c.command = "struct-embed"; });

  CLI::App* cls = app.add_subcommand("class", "toy class / type engine");
  cls->require_subcommand(1);
  auto add_class_sub = [&](const char* name, const char* help,
                           const char* command, bool needs_base) {
    CLI::App* sub = cls->add_subcommand(name, help);
    sub->add_option("file", c.inputs)->required();
    if (needs_base) sub->add_option("--base", c.base)->required();
    add_output_flags(sub, c);
    sub->callback([&c, command] { c.command = command; });
    return sub;
  };
  add_class_sub("ap", "amalgamation check", "class-ap", false);
  add_class_sub("types", "list the types over a base", "class-types", true);
  add_class_sub("dist", "type distances and pseudometric laws", "class-dist",
                true);
  CLI::App* ctp = add_class_sub(
      "ctp", "separation and continuity of types", "class-ctp", true);
  ctp->add_option("--depth", c.depth, "witness-sequence depth");
  CLI::App* tame =
      add_class_sub("tame", "finite tameness check", "class-tame", false);
  tame->add_option("--kappa", c.kappa, "restriction size bound");
  tame->add_option("--eps", c.eps, "closeness threshold literal");
  tame->add_option("--delta", c.delta, "restriction threshold literal");
  tame->add_flag("--strong", c.strong, "use delta = eps");

  CLI::App* omega = app.add_subcommand("omega", "lattice-valued equality");
  omega->require_subcommand(1);
  CLI::App* omega_check = omega->add_subcommand("check", "verify the laws");
  omega_check->add_option("file", c.inputs)->required();
  add_output_flags(omega_check, c);
  omega_check->callback([&] { c.command = "omega-check"; });

  CLI11_PARSE(app, argc, argv);
  return qmt::run_to_stream(c, std::cout, std::cerr);
}
