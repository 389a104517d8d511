#include "gmid/law_json.hpp"

#include <stdexcept>
#include <string>

namespace gmid {

nlohmann::json law_to_json(const MaxLaw& law) {
  return {{"kind", to_string(law.kind())},
          {"family", to_string(law.exponent().family())},
          {"alpha", law.exponent().alpha()},
          {"beta", law.beta()}};
}

MaxLaw law_from_json(const nlohmann::json& j) {
  try {
    const auto kind = parse_kind(j.at("kind").get<std::string>());
    const auto family = parse_family(j.at("family").get<std::string>());
    const double alpha = family == ExponentFamily::GumbelType ? j.value("alpha", 1.0)
                                                              : j.at("alpha").get<double>();
    const bool shaped = kind == LawKind::GammaMID || kind == LawKind::GGammaMID;
    const double beta = shaped ? j.at("beta").get<double>() : j.value("beta", 1.0);
    return MaxLaw::make(kind, Exponent::make(family, alpha), beta);
  } catch (const nlohmann::json::exception& err) {
    throw std::invalid_argument(std::string("law descriptor: ") + err.what());
  }
}

}  // namespace gmid
