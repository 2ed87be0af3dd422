#pragma once

#include <string>

#include <json.hpp>

#include "sumfree/compositions.hpp"
#include "sumfree/construction.hpp"
#include "sumfree/decomposition.hpp"
#include "sumfree/distributions.hpp"
#include "sumfree/rounding.hpp"
#include "sumfree/suites.hpp"

namespace sumfree {

// JSON shapes are stable across runs: object keys ordered, rationals as
// "p/q" strings when exact, doubles serialized losslessly when not.

nlohmann::json to_json(const CapacityResult& r, const Params& p);
nlohmann::json to_json(const ScaledDistribution& d);
nlohmann::json to_json(const SymmetricTensor& t);
nlohmann::json to_json(const SimpleCombination& c);
nlohmann::json to_json(const RoundedPair& r);
nlohmann::json to_json(const EntropyGapReport& r);
nlohmann::json to_json(const SumFreeCollection& c);
nlohmann::json to_json(const ConstructResult& r);
nlohmann::json to_json(const Violation& v);
nlohmann::json to_json(const VerifyResult& r);
nlohmann::json to_json(const SuiteReport& r);

SumFreeCollection collection_from_json(const nlohmann::json& j);

std::string dump_stable(const nlohmann::json& j);

// One CSV row (no header) summarizing a construction run.
std::string construct_csv_row(const ConstructResult& r);
std::string construct_csv_header();

}  // namespace sumfree
