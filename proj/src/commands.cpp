#include "hbraid/commands.hpp"

#include <random>
#include <stdexcept>

#include "hbraid/artin.hpp"
#include "hbraid/braid_word.hpp"
#include "hbraid/group_word.hpp"
#include "hbraid/serialization.hpp"

namespace hbraid {

std::string_view outcome_name(Outcome outcome) {
  switch (outcome) {
    case Outcome::equal: return "equal";
    case Outcome::not_equal: return "not-equal";
    case Outcome::holds: return "holds";
    case Outcome::fails: return "fails";
    case Outcome::report: return "report";
  }
  return "unknown";
}

int exit_code(Outcome outcome) {
  return outcome == Outcome::not_equal || outcome == Outcome::fails ? 1 : 0;
}

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(master), static_cast<std::uint32_t>(master >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return (static_cast<std::uint64_t>(out[1]) << 32) | out[0];
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

BraidWord random_word_with_relators(int n, std::size_t length, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto base = random_word(n, length, Alphabet::welded, rng());
  if (n < 2) return base;

  using G = GeneratorLetter;
  auto uniform = [&rng](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const int e = uniform(0, 1) ? 1 : -1;
  std::vector<std::vector<G>> windows;
  for (int i = 1; i < n; ++i) {
    windows.push_back({G::sigma(i, e), G::sigma(i, -e)});
    windows.push_back({G::rho(i), G::rho(i)});
    for (int j = i + 2; j < n; ++j) windows.push_back({G::sigma(i, e), G::rho(j)});
  }
  for (int i = 1; i + 1 < n; ++i) {
    windows.push_back({G::sigma(i, e), G::sigma(i + 1, e), G::sigma(i, e)});
    windows.push_back({G::rho(i), G::rho(i + 1), G::rho(i)});
    windows.push_back({G::rho(i), G::rho(i + 1), G::sigma(i, e)});
    windows.push_back({G::rho(i + 1), G::rho(i), G::sigma(i + 1, e)});
    windows.push_back({G::rho(i), G::sigma(i + 1), G::sigma(i)});
    windows.push_back({G::rho(i + 1), G::sigma(i, -1), G::sigma(i + 1, -1)});
  }
  const auto& window = windows[static_cast<std::size_t>(uniform(0, static_cast<int>(windows.size()) - 1))];
  std::vector<G> letters(base.letters().begin(), base.letters().end());
  const auto at = static_cast<std::ptrdiff_t>(uniform(0, static_cast<int>(letters.size())));
  letters.insert(letters.begin() + at, window.begin(), window.end());
  return BraidWord(n, std::move(letters));
}

GroupWord random_group_word(int n, std::size_t length, std::uint64_t seed) {
  if (n < 1) return GroupWord(n);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> index(1, n), sign(0, 1);
  std::vector<GroupLetter> letters;
  for (std::size_t k = 0; k < length; ++k) letters.push_back({index(rng), sign(rng) ? 1 : -1});
  return GroupWord(n, std::move(letters));
}

Verdict cmd_equal(int n, std::string_view word_a, std::string_view word_b) {
  const auto a = parse_braid(word_a, n);
  const auto b = parse_braid(word_b, n);
  const auto cmp = compare_braids(a, b);
  Verdict v{"equal", cmp.equal ? Outcome::equal : Outcome::not_equal, {}, {}};
  v.payload = {{"n", n}, {"a", a.to_string()}, {"b", b.to_string()}, {"equal", cmp.equal}};
  if (!cmp.equal) {
    v.payload["separating_index"] = *cmp.separating_index;
    v.payload["left_magnus"] = to_json(*cmp.left_magnus);
    v.payload["right_magnus"] = to_json(*cmp.right_magnus);
    v.summary = "not equal: images of x" + std::to_string(*cmp.separating_index) + " differ";
  } else {
    v.summary = "equal in hWB_" + std::to_string(n);
  }
  return v;
}

Verdict cmd_artin(int n, std::string_view word) {
  const auto w = parse_braid(word, n);
  const auto f = phi(w);
  Verdict v{"artin", Outcome::report, to_json(f), {}};
  v.summary = "Artin image of a " + std::to_string(w.size()) + "-letter word on " +
              std::to_string(n) + " strands";
  return v;
}

Verdict cmd_magnus(int n, std::string_view group_word) {
  const auto g = parse_group_word(group_word, n);
  const auto p = magnus(g);
  Verdict v{"magnus", Outcome::report, to_json(p), {}};
  v.summary = "M = " + p.to_string();
  return v;
}

Verdict cmd_obstruction(int n, std::string_view word) {
  const auto w = parse_braid(word, n);
  const auto classical = classicality_obstruction(w);
  const auto torsion = torsion_obstruction(w);
  Verdict v{"obstruction", classical.holds ? Outcome::holds : Outcome::fails, {}, {}};
  v.payload = {{"f_value", torsion.f_value.str()},
               {"lambda_moves_it", torsion.lambda_moves_it},
               {"classical_obstruction_holds", classical.holds}};
  v.summary = std::string(classical.holds ? "classicality condition holds (inconclusive)"
                                          : "not classical") +
              "; image of x1...xn is " + classical.witness.to_string();
  return v;
}

Verdict cmd_torsion_check(int p, std::size_t trials, std::size_t max_len, std::uint64_t seed) {
  if (p < 2) throw std::invalid_argument("torsion-check needs p >= 2");
  if (trials < 1) throw std::invalid_argument("torsion-check needs at least one trial");
  std::size_t passed = 0;
  auto counterexamples = nlohmann::json::array();
  for (std::size_t t = 0; t < trials; ++t) {
    std::mt19937_64 rng(trial_seed(seed, t));
    const auto length = std::uniform_int_distribution<std::size_t>(0, max_len)(rng);
    const auto beta = random_word(p, length, Alphabet::welded, rng());
    const auto report = torsion_obstruction(beta);
    if (report.f_value == 1 && report.lambda_moves_it) {
      ++passed;
    } else {
      counterexamples.push_back({{"word", beta.to_string()},
                                 {"f_value", report.f_value.str()},
                                 {"lambda_moves_it", report.lambda_moves_it}});
    }
  }
  const std::size_t failed = trials - passed;
  Verdict v{"torsion-check", failed == 0 ? Outcome::holds : Outcome::fails, {}, {}};
  v.payload = {{"p", p},           {"trials", trials}, {"max_len", max_len},
               {"seed", seed},     {"passed", passed}, {"failed", failed},
               {"counterexamples", std::move(counterexamples)}};
  v.summary = std::to_string(passed) + "/" + std::to_string(trials) +
              " words satisfy phi(lambda)(u) != u and F(M(u)) = 1";
  if (!is_prime(p)) {
    v.payload["warning"] = "p is not prime";
    v.summary = "warning: p = " + std::to_string(p) + " is not prime; " + v.summary;
  }
  return v;
}

Verdict cmd_fuzz(int n, std::size_t trials, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("fuzz needs n >= 1");
  constexpr std::size_t max_len = 8;
  struct Row {
    const char* name;
    std::size_t checks = 0, passed = 0;
    void record(bool ok) {
      ++checks;
      passed += ok ? 1 : 0;
    }
  };
  Row homomorphism{"homomorphism"}, moves{"move_invariance"}, f_invariance{"f_invariance"},
      shape{"conjugacy_shape"};

  for (std::size_t t = 0; t < trials; ++t) {
    std::mt19937_64 rng(trial_seed(seed, t));
    auto length = [&rng] { return std::uniform_int_distribution<std::size_t>(0, max_len)(rng); };

    const auto a = random_word(n, length(), Alphabet::welded, rng());
    const auto b = random_word(n, length(), Alphabet::welded, rng());
    homomorphism.record(endo_equal(phi(a * b), compose(phi(a), phi(b))));

    const auto w = random_word_with_relators(n, length(), rng());
    const auto fw = phi(w);
    for (const auto& [move, site] : applicable_moves(w))
      moves.record(endo_equal(fw, phi(apply_move(w, move, site))));

    if (n >= 2) {
      const int i = std::uniform_int_distribution<int>(1, n - 1)(rng);
      const int kind = std::uniform_int_distribution<int>(0, 2)(rng);
      const auto g = kind == 0   ? GeneratorLetter::rho(i)
                     : kind == 1 ? GeneratorLetter::sigma(i, 1)
                                 : GeneratorLetter::sigma(i, -1);
      const auto x = random_group_word(n, length(), rng());
      f_invariance.record(top_coefficient_sum(magnus(phi_generator(g, n).apply(x))) ==
                          top_coefficient_sum(magnus(x)));
    }

    shape.record(generator_conjugacy_check(random_word(n, length(), Alphabet::welded, rng())));
  }

  bool all_pass = true;
  auto rows = nlohmann::json::array();
  for (const Row* r : {&homomorphism, &moves, &f_invariance, &shape}) {
    rows.push_back({{"property", r->name},
                    {"checks", r->checks},
                    {"passed", r->passed},
                    {"failed", r->checks - r->passed}});
    all_pass = all_pass && r->passed == r->checks;
  }
  Verdict v{"fuzz", all_pass ? Outcome::holds : Outcome::fails, {}, {}};
  v.payload = {{"n", n}, {"trials", trials}, {"seed", seed}, {"properties", std::move(rows)}};
  v.summary = all_pass ? "all properties hold" : "property failures detected";
  return v;
}

} // namespace hbraid
