#include "clifford3/serialize.hpp"

#include <string>

namespace clifford3 {

using nlohmann::json;

void to_json(json& j, const BundleInvariants& inv) {
  j = json{{"rank", inv.rank}, {"degree", inv.degree}, {"s", inv.s}};
}

void from_json(const json& j, BundleInvariants& inv) {
  j.at("rank").get_to(inv.rank);
  j.at("degree").get_to(inv.degree);
  j.at("s").get_to(inv.s);
}

void to_json(json& j, const BoundResult& r) {
  j = json{{"value", r.value},
           {"case", std::string(case_name(r.case_label))},
           {"exact", r.exact},
           {"assumptions", r.assumptions}};
}

void from_json(const json& j, BoundResult& r) {
  j.at("value").get_to(r.value);
  const auto name = j.at("case").get<std::string>();
  const auto label = case_from_name(name);
  if (!label) throw Error(ErrorCode::InvalidArgument, "unknown bound case '" + name + "'");
  r.case_label = *label;
  j.at("exact").get_to(r.exact);
  j.at("assumptions").get_to(r.assumptions);
}

void to_json(json& j, const ElmState& st) {
  const BundleInvariants& inv = st.invariants();
  json certified = json::array();
  for (int r = 1; r < inv.rank; ++r) certified.push_back(st.certified(r));
  json families = json::array();
  for (const auto& [key, upper] : st.sb_dim_upper()) {
    families.push_back({{"r", key.first}, {"i", key.second}, {"upper", upper}});
  }
  j = json{{"step", st.step_count()},
           {"rank", inv.rank},
           {"degree", inv.degree},
           {"s", inv.s},
           {"certified", certified},
           {"sb_dim_upper", families}};
}

void to_json(json& j, const ExampleReport& rep) {
  json params = json::object();
  for (const auto& [name, value] : rep.params) params[name] = value;
  j = json{{"family", rep.family},
           {"genus", rep.genus},
           {"params", params},
           {"invariants", rep.inv},
           {"s2_is_lower_bound", rep.s2_is_lower_bound},
           {"exact_h0", rep.exact_h0},
           {"bound", rep.bound},
           {"sharp", rep.sharp},
           {"notes", rep.notes}};
  if (!rep.variant.empty()) j["variant"] = rep.variant;
  j["quotient_s1"] = rep.quotient_s1 ? json(*rep.quotient_s1) : json(nullptr);
  if (rep.slope) j["slope_bound"] = *rep.slope;
  if (rep.attainable_h0) j["attainable_h0"] = *rep.attainable_h0;
}

json error_json(const Error& e) {
  json j{{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
  if (e.detail()) j["detail"] = *e.detail();
  return j;
}

}  // namespace clifford3
