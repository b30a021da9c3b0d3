#include <json.hpp>

#include "ribbon/error.hpp"
#include "ribbon/fold.hpp"

namespace ribbon {

using nlohmann::ordered_json;

namespace {

ordered_json angle_json(const ExactAngle& a) { return ordered_json::array({a.num(), a.den()}); }

ExactAngle angle_from(const ordered_json& j) {
  if (!j.is_array() || j.size() != 2) throw Error(ErrorKind::invalid_input, "angle must be [num, den]");
  return ExactAngle(j.at(0).get<std::int64_t>(), j.at(1).get<std::int64_t>());
}

}  // namespace

std::string to_json(const FoldProgram& p) {
  ordered_json j;
  j["label"] = p.label;
  j["presentation"] = to_string(p.presentation);
  j["width"] = p.width;
  j["length"] = p.length;
  j["placement"] = {{"x", p.placement.origin.x}, {"y", p.placement.origin.y}, {"heading", p.placement.heading}};
  if (p.presentation == Presentation::truncated) {
    j["start_cut"] = angle_json(p.start_cut);
    j["end_cut"] = angle_json(p.end_cut);
  }
  auto& cs = j["creases"] = ordered_json::array();
  for (const auto& c : p.creases)
    cs.push_back({{"position", c.position},
                  {"angle_num", c.angle.num()},
                  {"angle_den", c.angle.den()},
                  {"layer_shift", c.layer_shift}});
  return j.dump(2) + "\n";
}

FoldProgram program_from_json(const std::string& text) {
  try {
    const auto j = ordered_json::parse(text);
    FoldProgram p;
    p.label = j.value("label", std::string{});
    p.presentation = presentation_from_string(j.at("presentation").get<std::string>());
    p.width = j.at("width").get<double>();
    p.length = j.at("length").get<double>();
    if (j.contains("placement")) {
      const auto& pl = j.at("placement");
      p.placement = {{pl.at("x").get<double>(), pl.at("y").get<double>()}, pl.at("heading").get<double>()};
    }
    if (j.contains("start_cut")) p.start_cut = angle_from(j.at("start_cut"));
    if (j.contains("end_cut")) p.end_cut = angle_from(j.at("end_cut"));
    for (const auto& c : j.at("creases")) {
      CreaseSpec spec;
      spec.position = c.at("position").get<double>();
      spec.angle = ExactAngle(c.at("angle_num").get<std::int64_t>(), c.at("angle_den").get<std::int64_t>());
      spec.layer_shift = c.at("layer_shift").get<int>();
      if (!p.creases.empty() && !(spec.position > p.creases.back().position))
        throw Error(ErrorKind::invalid_input, "creases must be sorted by position");
      p.creases.push_back(spec);
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::invalid_input, std::string("bad program JSON: ") + e.what());
  }
}

}  // namespace ribbon
