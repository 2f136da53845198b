// uks: positivity, Kadison-Schwarz and Choi-witness checks for unital qubit maps.

#include <iostream>

#include <CLI11.hpp>

#include "uks/cli.hpp"

namespace {

int emit(const uks::cli::CommandResult& r) {
  std::cout << r.output.dump(2) << '\n';
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  namespace cli = uks::cli;

  CLI::App app{"Unital qubit maps: positivity, Kadison-Schwarz checks and Choi witnesses"};
  app.require_subcommand(1);

  std::string map_path;
  double tol = 1e-8;
  int budget = 10000;
  std::uint64_t seed = 42;
  double step = 0.01;
  bool normalized = false;
  std::string out_path = "region.csv";
  std::size_t samples = 10000;
  double a = 0, k = 0;
  uks::family::ScanRange range;
  range.a_min = 0;
  range.a_max = 1;
  range.k_min = 0;
  range.k_max = 1.5;

  auto add_map = [&](CLI::App* sub) { sub->add_option("--map", map_path, "Map JSON document")->required(); };

  auto* pos = app.add_subcommand("check-positivity", "Decide positivity of a map");
  add_map(pos);
  pos->add_option("--tol", tol, "Tolerance");
  pos->add_option("--budget", budget, "Multistart points");
  pos->add_option("--seed", seed, "PRNG seed");

  auto* ks = app.add_subcommand("check-ks", "Search for Kadison-Schwarz violations");
  add_map(ks);
  ks->add_option("--tol", tol, "Violation threshold on the defect eigenvalue");
  ks->add_option("--budget", budget, "Multistart points");
  ks->add_option("--seed", seed, "PRNG seed");

  auto* scan = app.add_subcommand("scan-region", "Scan the (a, k) family and write a CSV");
  scan->add_option("--a-min", range.a_min);
  scan->add_option("--a-max", range.a_max);
  scan->add_option("--k-min", range.k_min);
  scan->add_option("--k-max", range.k_max);
  scan->add_option("--step", step, "Grid step");
  scan->add_option("--budget", budget, "Multistart points per cell");
  scan->add_option("--seed", seed, "PRNG seed");
  scan->add_option("--out", out_path, "CSV output path");

  auto* ch = app.add_subcommand("choi", "Choi matrix spectrum");
  add_map(ch);
  ch->add_flag("--normalized", normalized, "Use (I x Phi)(|psi+><psi+|) instead of sum E_ij x Phi(E_ij)");

  auto* wit = app.add_subcommand("witness", "Entanglement-witness checks on the Choi matrix");
  add_map(wit);
  wit->add_option("--samples", samples, "Product states sampled");
  wit->add_option("--seed", seed, "PRNG seed");
  wit->add_option("--tol", tol, "Tolerance");

  auto* fam = app.add_subcommand("family", "Closed-form maxima and predicates for lambda=(a,0,0), T=diag(0,k,k)");
  fam->add_option("--a", a)->required();
  fam->add_option("--k", k)->required();
  fam->add_option("--seed", seed, "PRNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : cli::kExitInputError;
  }

  try {
    if (*pos) return emit(cli::check_positivity(cli::load_map_document(map_path), tol, budget, seed));
    if (*ks) return emit(cli::check_ks(cli::load_map_document(map_path), budget, seed, tol));
    if (*ch) return emit(cli::choi(cli::load_map_document(map_path), normalized));
    if (*wit) return emit(cli::witness(cli::load_map_document(map_path), samples, seed, tol));
    if (*fam) return emit(cli::family_report(a, k, seed));
    if (*scan) {
      range.step = step;
      const auto s = cli::scan_region(range, budget, seed, out_path);
      std::cout << "rows=" << s.rows << " positive=" << s.positive << " thm46=" << s.thm46
                << " ks_violation=" << s.violations << " thm46_and_positive_with_violation=" << s.thm46_positive_violations
                << " seed=" << seed << " out=" << out_path << '\n';
      return cli::kExitOk;
    }
  } catch (const cli::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kExitInputError;
  } catch (const uks::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kExitInputError;
  }
  return cli::kExitInputError;
}
