// Command line front end. Every subcommand writes one JSON (or CSV) document
// to stdout; anything that aborts a run writes {"error","message"} JSON to
// stderr. Exit codes: 0 success, 1 failed check, 2 usage, 3 resource cap.
// Output depends only on the arguments, so reruns are byte-identical.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "sumfree/construction.hpp"
#include "sumfree/distributions.hpp"
#include "sumfree/errors.hpp"
#include "sumfree/json_io.hpp"
#include "sumfree/rounding.hpp"
#include "sumfree/suites.hpp"
#include "sumfree/verification.hpp"

using namespace sumfree;

namespace {

int exit_for(errc c) {
  switch (c) {
    case errc::invalid_argument:
      return 2;
    case errc::resource_cap:
      return 3;
    default:
      return 1;
  }
}

void emit_error(const char* name, const std::string& message) {
  nlohmann::json j;
  j["error"] = name;
  j["message"] = message;
  std::cerr << j.dump() << "\n";
}

void emit(const nlohmann::json& j) { std::cout << dump_stable(j) << "\n"; }

// "a..b" inclusive; a bare integer is the one-element range.
std::pair<std::uint64_t, std::uint64_t> parse_seed_range(const std::string& s) {
  try {
    const auto dots = s.find("..");
    if (dots == std::string::npos) {
      const std::uint64_t a = std::stoull(s);
      return {a, a};
    }
    const std::uint64_t a = std::stoull(s.substr(0, dots));
    const std::uint64_t b = std::stoull(s.substr(dots + 2));
    require(a <= b, errc::invalid_argument, "seed range must satisfy a <= b");
    return {a, b};
  } catch (const std::invalid_argument&) {
    fail(errc::invalid_argument, "seed range must look like a..b");
  } catch (const std::out_of_range&) {
    fail(errc::invalid_argument, "seed range endpoint out of range");
  }
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  require(out.good(), errc::io, "cannot open " + path + " for writing");
  out << body;
  out.flush();
  require(out.good(), errc::io, "write to " + path + " failed");
}

nlohmann::json bounds_json(const BoundedCountResult& b, int m, int k, int n) {
  nlohmann::json j;
  j["m"] = m;
  j["k"] = k;
  j["n"] = n;
  j["exact"] = b.exact.get_str();
  j["bound"] = b.bound;
  j["log_exact"] = b.log_exact;
  j["log_bound"] = b.log_bound;
  j["ok"] = b.ok;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-colored sum-free collections in Z_m^n"};
  app.require_subcommand(1);

  int m = 2;
  int k = 3;
  int n = 0;
  std::uint64_t seed = 0;
  std::uint64_t prime_val = 0;
  bool with_gap = false;
  std::string seeds_arg;
  std::string format = "json";
  std::string mode = "zm";
  std::string out_path;
  std::string in_path;
  std::string suite;

  int rc = 0;  // set by subcommands that report failed checks without throwing

  auto* cmd_gamma = app.add_subcommand("gamma", "capacity constant and its minimizer");
  cmd_gamma->add_option("m", m, "alphabet size, >= 2")->required();
  cmd_gamma->add_option("k", k, "number of colors, >= 3")->required();
  cmd_gamma->callback([&] {
    Params p;
    p.m = m;
    p.k = k;
    emit(to_json(capacity(p), p));
  });

  auto* cmd_nu = app.add_subcommand("nu", "capacity-achieving marginal distribution");
  cmd_nu->add_option("m", m, "alphabet size, >= 2")->required();
  cmd_nu->add_option("k", k, "number of colors, >= 3")->required();
  cmd_nu->callback([&] {
    Params p;
    p.m = m;
    p.k = k;
    emit(to_json(nu(p)));
  });

  auto* cmd_tau = app.add_subcommand("tau", "symmetric tensor with all marginals nu");
  cmd_tau->add_option("m", m, "alphabet size, >= 2")->required();
  cmd_tau->add_option("k", k, "number of colors, >= 3")->required();
  cmd_tau->callback([&] {
    Params p;
    p.m = m;
    p.k = k;
    emit(to_json(symmetric_marginal_tensor(nu(p), k)));
  });

  auto* cmd_round = app.add_subcommand("round", "round tau to 1/n multiples");
  cmd_round->add_option("m", m, "alphabet size, >= 2")->required();
  cmd_round->add_option("k", k, "number of colors, >= 3")->required();
  cmd_round->add_option("n", n, "dimension, positive multiple of k")->required();
  cmd_round->add_flag("--gap", with_gap, "also fit the max-entropy tensor and report the entropy gap");
  cmd_round->callback([&] {
    Params p;
    p.m = m;
    p.k = k;
    p.n = n;
    const RoundedPair pair = round_tau(symmetric_marginal_tensor(nu(p), k), n);
    nlohmann::json j = to_json(pair);
    if (with_gap) j["entropy_gap"] = to_json(entropy_gap_report(pair, k));
    emit(j);
  });

  auto* cmd_construct = app.add_subcommand("construct", "sample a sum-free collection");
  cmd_construct->add_option("m", m, "alphabet size, >= 2")->required();
  cmd_construct->add_option("k", k, "number of colors, >= 3")->required();
  cmd_construct->add_option("n", n, "dimension, positive multiple of k")->required();
  cmd_construct->add_option("--seed", seed, "RNG seed (default 0)");
  auto* opt_seeds = cmd_construct->add_option(
      "--seeds", seeds_arg, "inclusive seed range a..b; emits one result per seed in order");
  auto* opt_prime = cmd_construct->add_option("--prime", prime_val, "prime override for the field size");
  cmd_construct->add_option("--format", format, "output format (default json)")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd_construct->add_option("--mode", mode, "which view -o writes (default zm)")
      ->check(CLI::IsMember({"integer_vectors", "zm"}));
  cmd_construct->add_option("-o,--out", out_path, "write the selected view as a collection file");
  cmd_construct->callback([&] {
    std::vector<std::uint64_t> seeds;
    if (opt_seeds->count() > 0) {
      const auto [a, b] = parse_seed_range(seeds_arg);
      require(b - a < 10000, errc::invalid_argument, "seed range capped at 10000 seeds");
      for (std::uint64_t s = a; s <= b; ++s) seeds.push_back(s);
    } else {
      seeds.push_back(seed);
    }
    ConstructOptions opt;
    if (opt_prime->count() > 0) opt.prime_override = prime_val;

    std::vector<ConstructResult> results;
    results.reserve(seeds.size());
    for (const std::uint64_t s : seeds) results.push_back(construct(m, k, n, s, opt));

    if (format == "csv") {
      std::ostringstream os;
      os << construct_csv_header() << "\n";
      for (const auto& r : results) os << construct_csv_row(r) << "\n";
      std::cout << os.str();
    } else if (results.size() == 1) {
      emit(to_json(results[0]));
    } else {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& r : results) arr.push_back(to_json(r));
      emit(arr);
    }

    if (!out_path.empty()) {
      const auto view = [&](const ConstructResult& r) {
        return mode == "integer_vectors" ? r.integer_view : r.zm_view;
      };
      if (results.size() == 1) {
        write_file(out_path, dump_stable(to_json(view(results[0]))) + "\n");
      } else {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : results) arr.push_back(to_json(view(r)));
        write_file(out_path, dump_stable(arr) + "\n");
      }
    }
  });

  auto* cmd_verify = app.add_subcommand("verify", "check a collection file for sum violations");
  cmd_verify->add_option("file", in_path, "collection JSON, one object or an array")->required();
  cmd_verify->callback([&] {
    std::ifstream in(in_path, std::ios::binary);
    require(in.good(), errc::io, "cannot open " + in_path);
    std::stringstream buf;
    buf << in.rdbuf();
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(buf.str());
    } catch (const nlohmann::json::exception& e) {
      fail(errc::io, std::string("malformed JSON: ") + e.what());
    }
    bool all_ok = true;
    if (j.is_array()) {
      nlohmann::json out = nlohmann::json::array();
      for (const auto& item : j) {
        const VerifyResult res = verify_sumfree(collection_from_json(item));
        all_ok = all_ok && res.ok;
        out.push_back(to_json(res));
      }
      emit(out);
    } else {
      const VerifyResult res = verify_sumfree(collection_from_json(j));
      all_ok = res.ok;
      emit(to_json(res));
    }
    rc = all_ok ? 0 : 1;
  });

  auto* cmd_bounds = app.add_subcommand("bounds", "exact bounded-sum count against capacity^n");
  cmd_bounds->add_option("m", m, "alphabet size, >= 2")->required();
  cmd_bounds->add_option("k", k, "number of colors, >= 3")->required();
  cmd_bounds->add_option("n", n, "dimension, >= 1")->required();
  cmd_bounds->callback([&] {
    const BoundedCountResult b = bounded_tuple_count(n, m, k);
    emit(bounds_json(b, m, k, n));
    rc = b.ok ? 0 : 1;
  });

  auto* cmd_props = app.add_subcommand("props", "run a property suite");
  cmd_props->add_option("--suite", suite, "suite name, or 'all'")->required();
  cmd_props->add_option("--seed", seed, "base seed for randomized suites (default 0)");
  cmd_props->callback([&] {
    if (suite == "all") {
      bool all_ok = true;
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& name : suite_names()) {
        const SuiteReport rep = run_suite(name, seed);
        all_ok = all_ok && rep.ok();
        arr.push_back(to_json(rep));
      }
      emit(arr);
      rc = all_ok ? 0 : 1;
    } else {
      const SuiteReport rep = run_suite(suite, seed);
      emit(to_json(rep));
      rc = rep.ok() ? 0 : 1;
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    emit_error("invalid_argument", e.what());
    return 2;
  } catch (const error& e) {
    emit_error(errc_name(e.code()), e.what());
    return exit_for(e.code());
  } catch (const std::exception& e) {
    emit_error("internal", e.what());
    return 1;
  }
  return rc;
}
