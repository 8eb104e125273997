#pragma once

#include <json.hpp>

#include "carext/limit_map.hpp"
#include "carext/outer_measure.hpp"

namespace carext {

inline nlohmann::ordered_json to_json(const Element& e) {
  if (e.is_interval()) {
    nlohmann::ordered_json parts = nlohmann::ordered_json::array();
    for (const auto& p : e.intervals().parts())
      parts.push_back({p.lo.str(), p.hi.str()});
    return parts;
  }
  nlohmann::ordered_json atoms = nlohmann::ordered_json::array();
  std::uint64_t bits = e.atoms().bits;
  for (int i = 0; bits != 0; ++i, bits >>= 1)
    if (bits & 1) atoms.push_back(i);
  return nlohmann::ordered_json{{"atoms", atoms}};
}

inline nlohmann::ordered_json to_json(const Cover& c) {
  nlohmann::ordered_json pieces = nlohmann::ordered_json::array();
  for (const auto& p : c.pieces) pieces.push_back(to_json(p));
  return pieces;
}

inline nlohmann::ordered_json to_json(const Enclosure& e) {
  return {{"lo", e.lo.str()}, {"hi", e.hi.str()}};
}

inline const char* verdict_name(Report::Verdict v) {
  switch (v) {
    case Report::Verdict::PASS: return "PASS";
    case Report::Verdict::FAIL: return "FAIL";
    default: return "PARTIAL";
  }
}

inline nlohmann::ordered_json to_json(const Report& r) {
  nlohmann::ordered_json enclosures = nlohmann::ordered_json::object();
  for (const auto& [name, e] : r.enclosures) enclosures[name] = to_json(e);
  nlohmann::ordered_json out{{"claim", r.claim},
                     {"depth", r.depth},
                     {"enclosures", enclosures},
                     {"verdict", verdict_name(r.verdict)},
                     {"slack", r.slack.str()}};
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

}  // namespace carext
