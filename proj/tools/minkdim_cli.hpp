#ifndef MINKDIM_TOOLS_CLI_HPP
#define MINKDIM_TOOLS_CLI_HPP

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "minkdim/commands.hpp"
#include "minkdim/render.hpp"

namespace minkdim::cli {

enum ExitCode : int {
  exit_success = 0,
  exit_internal = 1,
  exit_usage = 2,
  exit_budget = 3,
  exit_tolerance = 4,
};

/// Enumeration budget: MINKDIM_BUDGET when set, the library default otherwise.
inline std::uint64_t default_budget() {
  if (const char* env = std::getenv("MINKDIM_BUDGET")) {
    return detail::parse_unsigned(env);
  }
  return default_cylinder_budget;
}

/// Parses argv into a RunConfig. Throws CLI::ParseError or
/// minkdim::invalid_argument.
inline RunConfig parse_args(std::vector<std::string> args) {
  CLI::App app{"Hausdorff dimension of continued-fraction sets and their Minkowski images",
               "minkdim"};
  app.require_subcommand(1);
  app.fallthrough();

  std::optional<double> tol;
  std::string format = "text";
  std::optional<std::string> out;
  std::optional<std::uint64_t> budget;
  app.add_option("--tol", tol, "solver tolerance, or the verdict gap tolerance for 'verdict'");
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", out, "write output to PATH instead of stdout");
  app.add_option("--budget", budget, "maximum number of cylinders to enumerate");

  std::string digits, depths = "1..4", side = "domain", rational, cf_text;
  unsigned n = 0;
  std::size_t depth = 1;

  auto* moran = app.add_subcommand("moran", "solve the Moran equation for a digit set");
  moran->add_option("--digits", digits, "digit set, e.g. 1..9 or 1,3,5")->required();

  auto* bounds = app.add_subcommand("bounds", "bounds on dim E_n (n > 8)");
  bounds->add_option("--n", n, "largest digit")->required();

  auto* verdict = app.add_subcommand("verdict", "does G preserve dim E_n?");
  verdict->add_option("--n", n, "largest digit")->required();

  auto* eval = app.add_subcommand("eval", "evaluate the Minkowski function exactly");
  auto* rat_opt = eval->add_option("--rational", rational, "p/q in (0,1]");
  auto* cf_opt = eval->add_option("--cf", cf_text, "continued fraction, e.g. '0;1,(1,2)'");
  rat_opt->excludes(cf_opt);

  auto* empirical = app.add_subcommand("empirical", "covering-sum dimension estimates");
  empirical->add_option("--digits", digits, "digit set")->required();
  empirical->add_option("--side", side, "domain or image")
      ->check(CLI::IsMember({"domain", "image"}));
  empirical->add_option("--depths", depths, "depth range a..b");

  auto* construct = app.add_subcommand("construct", "list image cylinders at one depth");
  construct->add_option("--digits", digits, "digit set")->required();
  construct->add_option("--depth", depth, "word length (0 for the whole image set)");

  std::vector<const char*> argv{"minkdim"};
  for (const auto& a : args) argv.push_back(a.c_str());
  app.parse(static_cast<int>(argv.size()), argv.data());

  RunConfig c;
  c.command = app.get_subcommands().front()->get_name();
  c.format = parse_output_format(format);
  c.output_path = out;
  c.budget = budget ? *budget : default_budget();
  c.n = n;
  c.depth = depth;
  if (!digits.empty()) {
    c.digits = parse_digit_list(digits);
    DigitSet validated(c.digits);  // S >= 2
  }
  if (c.command == "empirical") {
    std::tie(c.depth_first, c.depth_last) = parse_depth_range(depths);
    c.side = parse_side(side);
  }
  if (c.command == "eval") {
    if (!rational.empty()) {
      c.input_kind = "rational";
      c.input = rational;
    } else if (!cf_text.empty()) {
      c.input_kind = "cf";
      c.input = cf_text;
    } else {
      throw invalid_argument("eval needs --rational or --cf");
    }
  }
  if ((c.command == "bounds" || c.command == "verdict") && c.n <= 8)
    throw invalid_argument("the dimension bounds for E_n hold only for n > 8");

  if (c.command == "verdict") {
    c.tolerance = tol.value_or(default_verdict_tolerance);
    if (!(c.tolerance > 0 && c.tolerance < 1))
      throw invalid_argument("verdict tolerance must lie in (0, 1)");
  } else {
    c.tolerance = tol.value_or(default_moran_tolerance);
    if (!(c.tolerance >= std::ldexp(1.0, -50) && c.tolerance <= 1e-3))
      throw invalid_argument("tolerance must lie in [2^-50, 1e-3]");
  }
  return c;
}

/// Runs the CLI; returns the process exit status.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  try {
    config = parse_args(args);
  } catch (const CLI::CallForHelp&) {
    out << "usage: minkdim [--tol T] [--format json|csv|text] [--out PATH] [--budget N]\n"
           "               <moran|bounds|verdict|eval|empirical|construct> [options]\n";
    return exit_success;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return exit_usage;
  } catch (const invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return exit_usage;
  }

  try {
    std::string text = render(run_command(config));
    if (config.output_path) {
      std::ofstream file(*config.output_path, std::ios::binary);
      if (!file) {
        err << "error: cannot open " << *config.output_path << "\n";
        return exit_internal;
      }
      file << text;
    } else {
      out << text;
    }
    return exit_success;
  } catch (const budget_exceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return exit_budget;
  } catch (const tolerance_failure& e) {
    err << "tolerance failure: " << e.what() << "\n";
    return exit_tolerance;
  } catch (const invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return exit_internal;
  }
}

}  // namespace minkdim::cli

#endif  // MINKDIM_TOOLS_CLI_HPP
