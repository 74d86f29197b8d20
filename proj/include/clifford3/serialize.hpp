#pragma once

#include <json.hpp>

#include "clifford3/bounds.hpp"
#include "clifford3/elmtrans.hpp"
#include "clifford3/error.hpp"
#include "clifford3/families.hpp"
#include "clifford3/invariants.hpp"

namespace clifford3 {

void to_json(nlohmann::json& j, const BundleInvariants& inv);
void from_json(const nlohmann::json& j, BundleInvariants& inv);

/// {"value", "case", "exact", "assumptions"}.
void to_json(nlohmann::json& j, const BoundResult& r);
void from_json(const nlohmann::json& j, BoundResult& r);

void to_json(nlohmann::json& j, const ElmState& st);
void to_json(nlohmann::json& j, const ExampleReport& rep);

/// {"code", "message"[, "detail"]}.
nlohmann::json error_json(const Error& e);

}  // namespace clifford3
