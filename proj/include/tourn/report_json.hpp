#pragma once

#include <json.hpp>

#include "tourn/connectivity.hpp"
#include "tourn/containers.hpp"
#include "tourn/spanning.hpp"

namespace tourn {

nlohmann::json to_json(const Path& path);
nlohmann::json to_json(const BuildTrace& trace);
nlohmann::json to_json(const Container& container);
nlohmann::json to_json(const CutCertificate& cut);
nlohmann::json to_json(const PairRecord& record);
nlohmann::json to_json(const KappaStar& kappa);
nlohmann::json to_json(const Section4Record& record);
nlohmann::json to_json(const TheoremCheck& check);

/// {meta, pairs, kappa_s_star, kappa_w_star, section4?}
nlohmann::json to_json(const SpanningReport& report);

}  // namespace tourn
