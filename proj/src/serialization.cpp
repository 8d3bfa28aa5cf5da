#include "hbraid/serialization.hpp"

#include <stdexcept>

namespace hbraid {

nlohmann::json to_json(const ReducedPolynomial& p) {
  auto out = nlohmann::json::array();
  for (const auto& [m, c] : p.terms()) out.push_back({{"m", m.indices()}, {"c", c.str()}});
  return out;
}

ReducedPolynomial polynomial_from_json(const nlohmann::json& j, int strands) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  ReducedPolynomial out(strands);
  for (const auto& term : j) {
    Monomial m(term.at("m").get<std::vector<int>>());
    BigInt c(term.at("c").get<std::string>());
    out += ReducedPolynomial(strands, {{std::move(m), std::move(c)}});
  }
  return out;
}

nlohmann::json to_json(const Endomorphism& f) {
  auto images = nlohmann::json::array();
  for (const auto& img : f.images()) images.push_back(img.to_string());
  return {{"n", f.strands()}, {"images", std::move(images)}};
}

Endomorphism endomorphism_from_json(const nlohmann::json& j) {
  const int n = j.at("n").get<int>();
  std::vector<GroupWord> images;
  for (const auto& img : j.at("images")) images.push_back(parse_group_word(img.get<std::string>(), n));
  return Endomorphism(n, std::move(images));
}

} // namespace hbraid
