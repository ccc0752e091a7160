#pragma once

#include <json.hpp>

#include "mg/metric.hpp"
#include "mg/mr.hpp"
#include "mg/parse.hpp"

namespace mg {

using Json = nlohmann::ordered_json;

Json ball_json(const Ball& b, std::span<const std::string> names);
Json agreement_json(const Agreement& a, std::span<const std::string> names);
Json verdict_json(const Verdict& v, std::span<const std::string> names);
Json diagram_json(const Diagram& d);
Json hom_json(const Hom& h, std::span<const std::string> src_names,
              std::span<const std::string> tgt_names);

// cylinder components coloured per component
std::string gog_dot(const GraphOfGroups& g);

}  // namespace mg
