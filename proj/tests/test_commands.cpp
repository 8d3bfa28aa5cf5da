#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "hbraid/artin.hpp"
#include "hbraid/commands.hpp"
#include "hbraid/errors.hpp"
#include "hbraid/serialization.hpp"

using namespace hbraid;
using nlohmann::json;

TEST_CASE("equal") {
  auto v = cmd_equal(2, "s1 s1'", "");
  CHECK(v.outcome == Outcome::equal);
  CHECK(exit_code(v.outcome) == 0);
  CHECK(v.payload.at("equal") == true);
  CHECK_FALSE(v.payload.contains("separating_index"));

  v = cmd_equal(3, "r1 r2 r1 r2 r1 r2 r1 r2 r1", "r1 r2 r1 r2 r1 r2");
  CHECK(v.outcome == Outcome::not_equal);
  CHECK(exit_code(v.outcome) == 1);
  CHECK(v.payload.contains("separating_index"));
  CHECK(v.payload.at("left_magnus") != v.payload.at("right_magnus"));

  CHECK(cmd_equal(4, "s1 s3", "s3 s1").outcome == Outcome::equal);
  CHECK_THROWS_AS(cmd_equal(2, "s1 s2", ""), ParseError);
}

TEST_CASE("artin") {
  CHECK(cmd_artin(2, "s1").payload.at("images") == json::array({"x2", "x2' x1 x2"}));
  CHECK(cmd_artin(3, "").payload.at("images") == json::array({"x1", "x2", "x3"}));
  CHECK(cmd_artin(2, "s1 r1").payload.at("images") == json::array({"x2' x1 x2", "x2"}));
  CHECK(exit_code(cmd_artin(2, "s1").outcome) == 0);
  CHECK_THROWS_AS(cmd_artin(2, "q1"), ParseError);
}

TEST_CASE("magnus") {
  CHECK(cmd_magnus(2, "x1 x2").payload ==
        json::parse(R"([{"c":"1","m":[]},{"c":"1","m":[1]},{"c":"1","m":[2]},{"c":"1","m":[1,2]}])"));
  CHECK(cmd_magnus(1, "x1 x1").payload == json::parse(R"([{"c":"1","m":[]},{"c":"2","m":[1]}])"));
  CHECK(cmd_magnus(2, "x1'").payload == json::parse(R"([{"c":"1","m":[]},{"c":"-1","m":[1]}])"));
  CHECK_THROWS_AS(cmd_magnus(2, "x3"), ParseError);
}

TEST_CASE("obstruction") {
  auto v = cmd_obstruction(3, "r1 r2");
  CHECK(v.outcome == Outcome::fails);
  CHECK(v.payload == json{{"f_value", "1"}, {"lambda_moves_it", true},
                          {"classical_obstruction_holds", false}});
  CHECK(cmd_obstruction(3, "s1 s2 s1'").payload.at("classical_obstruction_holds") == true);
  v = cmd_obstruction(2, "");
  CHECK(v.outcome == Outcome::holds);
  CHECK(v.payload.at("f_value") == "1");
  CHECK(v.payload.size() == 3);
}

TEST_CASE("outputs round-trip through the grammars") {
  const auto a = cmd_artin(3, "s1 r2 s2'");
  const auto f = endomorphism_from_json(a.payload);
  CHECK(f == phi(parse_braid("s1 r2 s2'", 3)));
  const auto m = cmd_magnus(3, "x1 x3' x2");
  CHECK(polynomial_from_json(m.payload, 3) == magnus(parse_group_word("x1 x3' x2", 3)));
  const auto e = cmd_equal(2, "s1", "r1");
  CHECK(parse_braid(e.payload.at("a").get<std::string>(), 2) == parse_braid("s1", 2));
  CHECK(polynomial_from_json(e.payload.at("left_magnus"), 2) ==
        magnus(phi(parse_braid("s1", 2)).image(*compare_braids(parse_braid("s1", 2),
                                                                parse_braid("r1", 2))
                                                     .separating_index)));
}

TEST_CASE("torsion-check") {
  auto v = cmd_torsion_check(2, 100, 8, 1);
  CHECK(v.outcome == Outcome::holds);
  CHECK(v.payload.at("passed") == 100);
  CHECK(v.payload.at("failed") == 0);
  CHECK(v.payload.at("counterexamples").empty());
  CHECK(cmd_torsion_check(3, 1000, 12, 2).outcome == Outcome::holds);
  CHECK(cmd_torsion_check(5, 1000, 16, 3).outcome == Outcome::holds);
  CHECK_THROWS_AS(cmd_torsion_check(1, 10, 8, 1), std::invalid_argument);
  CHECK_THROWS_AS(cmd_torsion_check(3, 0, 8, 1), std::invalid_argument);

  v = cmd_torsion_check(4, 20, 8, 1);
  CHECK(v.payload.contains("warning"));
  CHECK(v.outcome == Outcome::holds);
  CHECK_FALSE(cmd_torsion_check(3, 20, 8, 1).payload.contains("warning"));
}

TEST_CASE("fuzz") {
  auto v = cmd_fuzz(3, 10, 7);
  CHECK(v.outcome == Outcome::holds);
  const auto& rows = v.payload.at("properties");
  REQUIRE(rows.size() == 4);
  for (const auto& row : rows) {
    CHECK(row.at("failed") == 0);
    CHECK(row.at("passed") == row.at("checks"));
  }
  CHECK(rows[0].at("checks").get<int>() > 0);

  v = cmd_fuzz(1, 10, 7);
  CHECK(v.outcome == Outcome::holds);
  for (const auto& row : v.payload.at("properties")) CHECK(row.at("failed") == 0);

  CHECK(cmd_fuzz(4, 10, 99).payload.dump() == cmd_fuzz(4, 10, 99).payload.dump());
  CHECK(cmd_torsion_check(3, 50, 12, 5).payload.dump() ==
        cmd_torsion_check(3, 50, 12, 5).payload.dump());
}

TEST_CASE("seeds and helpers") {
  CHECK(trial_seed(1, 0) != trial_seed(1, 1));
  CHECK(trial_seed(1, 0) != trial_seed(2, 0));
  CHECK(trial_seed(9, 4) == trial_seed(9, 4));
  CHECK(is_prime(2));
  CHECK(is_prime(5));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(9));
  const auto w = random_word_with_relators(4, 10, 3);
  CHECK(w.strands() == 4);
  CHECK(w == random_word_with_relators(4, 10, 3));
  CHECK(random_group_word(3, 7, 2).size() == 7);
  CHECK(outcome_name(Outcome::not_equal) == "not-equal");
}
