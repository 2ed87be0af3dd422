#include "sumfree/json_io.hpp"

namespace sumfree {

namespace {

using nlohmann::json;

json rat_json(const rat& q) { return rat_str(q); }

json weight_json(const SymmetricTensor& t, const rat& w) {
  if (t.real_mode) return to_double(w);
  return rat_str(w);
}

const char* mode_name(CollectionMode m) {
  return m == CollectionMode::integer_vectors ? "integer_vectors" : "zm";
}

}  // namespace

json to_json(const CapacityResult& r, const Params& p) {
  return json{{"m", p.m},
              {"k", p.k},
              {"gamma", r.gamma},
              {"capacity", r.capacity},
              {"entropy_nu", r.entropy_nu}};
}

json to_json(const ScaledDistribution& d) {
  json weights = json::array();
  for (const rat& w : d.weights) weights.push_back(rat_json(w));
  return json{{"total", rat_json(d.total())}, {"weights", std::move(weights)}};
}

json to_json(const SymmetricTensor& t) {
  json orbits = json::array();
  for (const auto& [rep, w] : t.weight) {
    json o;
    o["rep"] = rep;
    o["weight"] = weight_json(t, w);
    orbits.push_back(std::move(o));
  }
  return json{{"r", t.r}, {"arity", t.arity}, {"orbits", std::move(orbits)}};
}

json to_json(const SimpleCombination& c) {
  json atoms = json::array();
  for (const auto& [tuple, lambda] : c.coeffs) {
    json a;
    a["tuple"] = tuple;
    a["lambda"] = rat_json(lambda);
    atoms.push_back(std::move(a));
  }
  return json{{"n", c.n}, {"k", c.k}, {"atoms", std::move(atoms)}};
}

json to_json(const RoundedPair& r) {
  return json{{"m", r.m},
              {"k", r.k},
              {"n", r.n},
              {"tau_tilde", to_json(r.tau_tilde)},
              {"nu_n", to_json(r.nu_n)},
              {"linf_gap", rat_json(r.linf_gap)},
              {"has_zero_entry", r.has_zero_entry}};
}

json to_json(const EntropyGapReport& r) {
  return json{{"h_tau_tilde", r.h_tau_tilde},
              {"h_maxent", r.h_maxent},
              {"gap", r.gap},
              {"implied_constant", r.implied_constant}};
}

json to_json(const SumFreeCollection& c) {
  return json{{"m", c.m},     {"k", c.k}, {"n", c.n},
              {"seed", c.seed}, {"P", c.P}, {"mode", mode_name(c.mode)},
              {"tuples", c.tuples}};
}

json to_json(const ConstructResult& r) {
  json field{{"P", r.field.P},
             {"k", r.field.k},
             {"R", r.field.R},
             {"method", r.field.method == PfsMethod::greedy ? "greedy" : "behrend"},
             {"Y", r.field.Y}};
  return json{{"integer_view", to_json(r.integer_view)},
              {"zm_view", to_json(r.zm_view)},
              {"field", std::move(field)},
              {"H_tau_tilde", r.H_tau_tilde},
              {"H_nu_n", r.H_nu_n},
              {"x0_size", r.x0_size},
              {"candidate_count", r.candidate_count},
              {"isolated_count", r.isolated_count},
              {"prime_formula", r.prime_formula},
              {"warnings", r.warnings}};
}

json to_json(const Violation& v) {
  return json{{"kind", v.kind}, {"indices", v.indices}, {"detail", v.detail}};
}

json to_json(const VerifyResult& r) {
  json violations = json::array();
  for (const auto& v : r.violations) violations.push_back(to_json(v));
  return json{{"ok", r.ok},
              {"violations", std::move(violations)},
              {"used_fallback_scan", r.used_fallback_scan}};
}

json to_json(const SuiteReport& r) {
  json failures = json::array();
  for (const auto& v : r.failures) failures.push_back(to_json(v));
  json stats = json::object();
  for (const auto& [key, value] : r.stats) stats[key] = value;
  return json{{"suite", r.suite},
              {"cases", r.cases},
              {"failures", std::move(failures)},
              {"stats", std::move(stats)}};
}

SumFreeCollection collection_from_json(const json& j) {
  try {
    SumFreeCollection c;
    c.m = j.at("m").get<int>();
    c.k = j.at("k").get<int>();
    c.n = j.at("n").get<int>();
    c.seed = j.at("seed").get<std::uint64_t>();
    c.P = j.at("P").get<std::uint64_t>();
    const std::string mode = j.at("mode").get<std::string>();
    if (mode == "integer_vectors")
      c.mode = CollectionMode::integer_vectors;
    else if (mode == "zm")
      c.mode = CollectionMode::zm;
    else
      fail(errc::io, "unknown collection mode '" + mode + "'");
    c.tuples = j.at("tuples").get<std::vector<std::vector<std::vector<int>>>>();
    return c;
  } catch (const json::exception& e) {
    fail(errc::io, std::string("malformed collection: ") + e.what());
  }
}

std::string dump_stable(const json& j) { return j.dump(2); }

std::string construct_csv_header() { return "m,k,n,seed,P,R,x0,candidates,isolated"; }

std::string construct_csv_row(const ConstructResult& r) {
  const SumFreeCollection& c = r.integer_view;
  return std::to_string(c.m) + "," + std::to_string(c.k) + "," + std::to_string(c.n) +
         "," + std::to_string(c.seed) + "," + std::to_string(r.field.P) + "," +
         std::to_string(r.field.R) + "," + std::to_string(r.x0_size) + "," +
         std::to_string(r.candidate_count) + "," + std::to_string(r.isolated_count);
}

}  // namespace sumfree
