// hbraid: welded and classical braids up to link-homotopy.
//
//   hbraid equal -n N A B
//   hbraid artin -n N W
//   hbraid magnus -n N G
//   hbraid obstruction -n N W
//   hbraid torsion-check -p P --trials T --max-len L --seed S
//   hbraid fuzz -n N --trials T --seed S
//
// JSON goes to stdout, a one-line summary to stderr. Exit status: 0 for
// equal/holds, 1 for not-equal/fails, 2 for usage or parse errors.

#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hbraid/commands.hpp"
#include "hbraid/errors.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Welded and classical braids up to link-homotopy"};
  app.require_subcommand(1);

  int n = 0;
  std::string word_a, word_b;
  auto* equal = app.add_subcommand("equal", "Decide equality of two braid words in hWB_n");
  equal->add_option("-n", n, "Number of strands")->required()->check(CLI::PositiveNumber);
  equal->add_option("A", word_a, "First braid word")->required();
  equal->add_option("B", word_b, "Second braid word")->required();

  auto* artin = app.add_subcommand("artin", "Print the homotopy welded Artin image of a word");
  artin->add_option("-n", n, "Number of strands")->required()->check(CLI::PositiveNumber);
  artin->add_option("W", word_a, "Braid word")->required();

  auto* magnus = app.add_subcommand("magnus", "Reduced Magnus expansion of a group word");
  magnus->add_option("-n", n, "Number of generators")->required()->check(CLI::NonNegativeNumber);
  magnus->add_option("G", word_a, "Group word in x1..xn")->required();

  auto* obstruction = app.add_subcommand("obstruction", "Classicality and torsion obstructions");
  obstruction->add_option("-n", n, "Number of strands")->required()->check(CLI::PositiveNumber);
  obstruction->add_option("W", word_a, "Braid word")->required();

  int p = 0;
  std::size_t trials = 100, max_len = hbraid::default_max_len;
  std::uint64_t seed = 1;
  auto* torsion = app.add_subcommand("torsion-check", "Randomized no-fixed-point check for lambda");
  torsion->add_option("-p", p, "Number of strands (normally prime)")->required();
  torsion->add_option("--trials", trials, "Number of random words")->capture_default_str();
  torsion->add_option("--max-len", max_len, "Maximum word length")->capture_default_str();
  torsion->add_option("--seed", seed, "Master seed")->capture_default_str();

  auto* fuzz = app.add_subcommand("fuzz", "Run the randomized property suites");
  fuzz->add_option("-n", n, "Number of strands")->required()->check(CLI::PositiveNumber);
  fuzz->add_option("--trials", trials, "Number of trials")->capture_default_str();
  fuzz->add_option("--seed", seed, "Master seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : hbraid::usage_error_exit_code;
  }

  try {
    std::optional<hbraid::Verdict> v;
    if (*equal) v = hbraid::cmd_equal(n, word_a, word_b);
    else if (*artin) v = hbraid::cmd_artin(n, word_a);
    else if (*magnus) v = hbraid::cmd_magnus(n, word_a);
    else if (*obstruction) v = hbraid::cmd_obstruction(n, word_a);
    else if (*torsion) v = hbraid::cmd_torsion_check(p, trials, max_len, seed);
    else if (*fuzz) v = hbraid::cmd_fuzz(n, trials, seed);

    std::cout << v->payload.dump() << '\n';
    std::cerr << v->command << ": " << hbraid::outcome_name(v->outcome) << ": " << v->summary
              << '\n';
    return hbraid::exit_code(v->outcome);
  } catch (const hbraid::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
  }
  return hbraid::usage_error_exit_code;
}
