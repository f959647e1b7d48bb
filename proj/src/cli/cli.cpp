#include "whlab/cli/cli.hpp"

#include <CLI11.hpp>

#include "commands.hpp"

namespace whlab::cli {

namespace {

void add_group_options(CLI::App* sub, GroupOptions& g) {
  sub->add_option("--group", g.group, "built-in group: 1, Z<n>, D8, Q8, products AxB, powers Z2^k");
  sub->add_option("--group-file", g.group_file, "group table file (overrides --group)");
  sub->add_option("--coeff", g.coefficients, "coefficients: trivial, regular, functions or random")
      ->capture_default_str();
  sub->add_option("--field", g.field, "F<p>; defaults to the prime of a p-group");
}

}  // namespace

CliResult run(std::vector<std::string> const& args) {
  CLI::App app{"Exact computations with group presentations, Hopf algebras and group cohomology", "whlab"};
  app.require_subcommand(1);

  bool json = false;
  std::optional<std::size_t> budget;
  Common common;
  app.add_flag("--json", json, "emit JSON instead of text");
  app.add_option("--budget", budget, "largest vector space dimension a computation may build (overrides WHLAB_BUDGET)")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", common.seed, "seed for randomized choices")->capture_default_str();

  ShuffleOptions sh;
  auto* shuffle = app.add_subcommand("shuffle", "shuffle product of two words, letters are single characters");
  shuffle->add_option("left", sh.left, "first word")->required();
  shuffle->add_option("right", sh.right, "second word")->required();
  shuffle->add_option("--field", sh.field, "Q or F<p>")->capture_default_str();
  shuffle->add_flag("--infiltration", sh.infiltration, "infiltration product instead of the shuffle");

  FoxOptions fx;
  auto* fox = app.add_subcommand("fox", "Fox derivatives, the fundamental identity and the Jacobian");
  fox->add_option("presentation", fx.path, "presentation file")->required()->check(CLI::ExistingFile);
  fox->add_option("--field", fx.field, "Q or F<p>; defaults to the file's field");
  fox->add_option("--N", fx.cap, "truncation degree; defaults to the file's")->check(CLI::PositiveNumber);

  CohomologyOptions co;
  auto* cohom = app.add_subcommand("cohomology", "H^n(G, M) by the bar complex and by the minimal resolution");
  add_group_options(cohom, co.group);
  cohom->add_option("--nmax", co.n_max, "largest degree")->capture_default_str();

  LhsOptions lo;
  auto* lhs = app.add_subcommand("lhs", "Lyndon-Hochschild-Serre spectral sequence of a normal subgroup");
  add_group_options(lhs, lo.group);
  lhs->add_option("--subgroup", lo.subgroup, "comma-separated labels generating the normal subgroup")->required();
  lhs->add_option("--window", lo.window, "P,Q: columns and rows of the double complex")->capture_default_str();
  lhs->add_option("--nmax", lo.n_max, "largest total degree; defaults to max(P,Q)+1");
  lhs->add_option("--pages", lo.r_max, "last page computed")->capture_default_str();

  AsphericityOptions as;
  auto* asph = app.add_subcommand("asphericity", "asphericity probe on a presentation and all its subpresentations");
  asph->add_option("presentation", as.path, "presentation file")->required()->check(CLI::ExistingFile);
  asph->add_option("--field", as.field, "Q or F<p>; defaults to the file's field");
  asph->add_option("--N", as.cap, "truncation degree; defaults to the file's")->check(CLI::PositiveNumber);

  auto* self = app.add_subcommand("selftest", "quick internal consistency checks");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  CliResult result;
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (CLI::CallForHelp const&) {
    result.out = app.help();
    return result;
  } catch (CLI::CallForAllHelp const&) {
    result.out = app.help("", CLI::AppFormatMode::All);
    return result;
  } catch (CLI::ParseError const& e) {
    result.err = std::string("error: ") + e.what() + "\n";
    result.exit_code = exit_domain;
    return result;
  }

  common.budget = Budget::from_environment();
  if (budget) common.budget.max_dimension = *budget;

  try {
    Report r;
    if (shuffle->parsed())
      r = shuffle_command(sh, common);
    else if (fox->parsed())
      r = fox_command(fx, common);
    else if (cohom->parsed())
      r = cohomology_command(co, common);
    else if (lhs->parsed())
      r = lhs_command(lo, common);
    else if (asph->parsed())
      r = asphericity_command(as, common);
    else if (self->parsed())
      r = selftest_command(common);
    result.out = json ? r.json.dump(2) + "\n" : r.text;
    result.exit_code = r.exit_code;
  } catch (ParseError const& e) {
    result.err = std::string("parse error: ") + e.what() + "\n";
    result.exit_code = exit_domain;
  } catch (DomainError const& e) {
    result.err = std::string("error: ") + e.what() + "\n";
    result.exit_code = exit_domain;
  } catch (BudgetExceeded const& e) {
    result.err = std::string("budget exceeded: ") + e.what() + "\n";
    result.exit_code = exit_budget;
  }
  return result;
}

}  // namespace whlab::cli
