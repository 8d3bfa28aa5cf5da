#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "hbraid/braid_word.hpp"
#include "hbraid/group_word.hpp"

namespace hbraid {

enum class Outcome { equal, not_equal, holds, fails, report };

// Result of one CLI command: a JSON payload for standard output and a
// one-line human summary for standard error.
struct Verdict {
  std::string command;
  Outcome outcome = Outcome::report;
  nlohmann::json payload;
  std::string summary;
};

std::string_view outcome_name(Outcome outcome);

// 0 = equal/holds/report, 1 = not-equal/fails. Usage and parse errors map
// to 2 in the CLI driver.
int exit_code(Outcome outcome);

inline constexpr int usage_error_exit_code = 2;

// Parse failures propagate as hbraid::ParseError.
Verdict cmd_equal(int n, std::string_view word_a, std::string_view word_b);
Verdict cmd_artin(int n, std::string_view word);
Verdict cmd_magnus(int n, std::string_view group_word);
Verdict cmd_obstruction(int n, std::string_view word);

inline constexpr std::size_t default_max_len = 12;

// Throws std::invalid_argument when p < 2 or trials < 1.
Verdict cmd_torsion_check(int p, std::size_t trials, std::size_t max_len, std::uint64_t seed);
Verdict cmd_fuzz(int n, std::size_t trials, std::uint64_t seed);

// Independent per-trial seed derived from the master seed.
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial);

bool is_prime(int p);

// Random welded word with one relation window (far commutation, braid,
// mixed, OC, or a cancelling pair) spliced in at a random position, so
// that apply_move has something to act on.
BraidWord random_word_with_relators(int n, std::size_t length, std::uint64_t seed);

GroupWord random_group_word(int n, std::size_t length, std::uint64_t seed);

} // namespace hbraid
