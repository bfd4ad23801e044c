#include "helly/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "helly/errors.hpp"
#include "helly/version.hpp"

namespace helly {

namespace {

using nlohmann::json;

[[noreturn]] void bad_set(std::size_t index, const std::string& what) {
  throw ParseFailure("set " + std::to_string(index) + ": " + what);
}

Vec vec_field(const json& j, const char* key, std::size_t index) {
  if (!j.contains(key) || !j[key].is_array())
    bad_set(index, std::string("missing or non-array field \"") + key + "\"");
  Vec v;
  v.reserve(j[key].size());
  for (const auto& x : j[key]) {
    if (!x.is_number()) bad_set(index, std::string("non-numeric entry in \"") + key + "\"");
    v.push_back(x.get<double>());
  }
  return v;
}

double num_field(const json& j, const char* key, std::size_t index) {
  if (!j.contains(key) || !j[key].is_number())
    bad_set(index, std::string("missing or non-numeric field \"") + key + "\"");
  return j[key].get<double>();
}

json set_to_json(const ConvexSet& s) {
  json j;
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Halfspace>) {
          j["type"] = "halfspace";
          j["a"] = v.a;
          j["b"] = v.b;
        } else if constexpr (std::is_same_v<T, HPolytope>) {
          j["type"] = "hpolytope";
          json rows = json::array();
          json rhs = json::array();
          for (const auto& row : v.rows) {
            rows.push_back(row.a);
            rhs.push_back(row.b);
          }
          j["A"] = std::move(rows);
          j["b"] = std::move(rhs);
        } else if constexpr (std::is_same_v<T, Box>) {
          j["type"] = "box";
          j["lo"] = v.lo;
          j["hi"] = v.hi;
        } else {
          j["type"] = "ball";
          j["center"] = v.center;
          j["radius"] = v.radius;
        }
      },
      s);
  return j;
}

ConvexSet set_from_json(const json& j, std::size_t index) {
  if (!j.is_object()) bad_set(index, "not an object");
  if (!j.contains("type") || !j["type"].is_string())
    bad_set(index, "missing \"type\" tag");
  const std::string type = j["type"].get<std::string>();

  if (type == "halfspace") {
    Halfspace h;
    h.a = vec_field(j, "a", index);
    h.b = num_field(j, "b", index);
    return h;
  }
  if (type == "hpolytope") {
    if (!j.contains("A") || !j["A"].is_array())
      bad_set(index, "missing or non-array field \"A\"");
    const Vec rhs = vec_field(j, "b", index);
    if (j["A"].size() != rhs.size())
      bad_set(index, "\"A\" and \"b\" disagree on row count");
    HPolytope poly;
    poly.rows.reserve(rhs.size());
    for (std::size_t r = 0; r < rhs.size(); ++r) {
      const auto& row = j["A"][r];
      if (!row.is_array()) bad_set(index, "non-array row in \"A\"");
      Halfspace h;
      h.a.reserve(row.size());
      for (const auto& x : row) {
        if (!x.is_number()) bad_set(index, "non-numeric entry in \"A\"");
        h.a.push_back(x.get<double>());
      }
      h.b = rhs[r];
      poly.rows.push_back(std::move(h));
    }
    return poly;
  }
  if (type == "box") {
    Box b;
    b.lo = vec_field(j, "lo", index);
    b.hi = vec_field(j, "hi", index);
    return b;
  }
  if (type == "ball") {
    Ball b;
    b.center = vec_field(j, "center", index);
    b.radius = num_field(j, "radius", index);
    return b;
  }
  bad_set(index, "unknown type tag \"" + type + "\"");
}

json oracle_to_json(const OracleConfig& oc) {
  json j;
  j["feas_tol"] = oc.feas_tol;
  j["proj_tol"] = oc.proj_tol;
  j["proj_max_iters"] = oc.proj_max_iters;
  j["bound_M"] = oc.bound_M;
  j["rng_seed"] = oc.rng_seed;
  j["strict"] = oc.strict;
  return j;
}

}  // namespace

json instance_to_json(const Instance& instance) {
  json j;
  j["schema_version"] = 1;
  j["dimension"] = instance.dimension;
  json sets = json::array();
  for (const auto& s : instance.sets) sets.push_back(set_to_json(s));
  j["sets"] = std::move(sets);
  return j;
}

Instance instance_from_json(const json& j) {
  if (!j.is_object()) throw ParseFailure("top level must be an object");
  if (!j.contains("schema_version") || !j["schema_version"].is_number_integer() ||
      j["schema_version"].get<int>() != 1)
    throw ParseFailure("unsupported or missing schema_version (expected 1)");
  if (!j.contains("dimension") || !j["dimension"].is_number_integer())
    throw ParseFailure("missing integer field \"dimension\"");
  if (!j.contains("sets") || !j["sets"].is_array())
    throw ParseFailure("missing array field \"sets\"");

  Instance inst;
  inst.dimension = j["dimension"].get<int>();
  inst.sets.reserve(j["sets"].size());
  for (std::size_t i = 0; i < j["sets"].size(); ++i)
    inst.sets.push_back(set_from_json(j["sets"][i], i));

  validate_instance(inst);
  return inst;
}

std::string serialize_instance(const Instance& instance) {
  return instance_to_json(instance).dump(2) + "\n";
}

Instance parse_instance(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    const std::size_t upto = std::min(e.byte, text.size());
    const auto line =
        1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n');
    throw ParseFailure("line " + std::to_string(line) + ": " + e.what());
  }
  return instance_from_json(j);
}

Instance load_instance(const std::string& path) {
  return parse_instance(load_text(path));
}

void save_instance(const Instance& instance, const std::string& path) {
  save_text(serialize_instance(instance), path);
}

json result_to_json(const Verdict& verdict, const TesterConfig& cfg,
                    std::int64_t t_used) {
  json j;
  j["verdict"] = verdict.pass ? "PASS" : "FAIL";
  if (!verdict.pass) j["tuple_indices"] = verdict.tuple_indices;
  j["rounds_run"] = verdict.rounds_run;
  j["oracle_calls"] = verdict.oracle_calls;

  json cfg_j;
  cfg_j["alpha"] = cfg.alpha;
  cfg_j["epsilon"] = cfg.epsilon;
  cfg_j["t"] = t_used;
  if (cfg.rounds_override) cfg_j["rounds_override"] = *cfg.rounds_override;
  cfg_j["rng_seed"] = cfg.rng_seed;
  cfg_j["rng"] = "mt19937_64+splitmix64";
  cfg_j["oracle"] = oracle_to_json(cfg.oracle);
  j["config"] = std::move(cfg_j);

  j["tool_version"] = std::string(kToolName) + " " + kToolVersion;
  return j;
}

json census_to_json(const TupleCensus& census) {
  json j;
  j["q"] = census.q;
  j["total"] = census.total;
  j["intersecting"] = census.intersecting;
  j["fraction"] = census.fraction;
  return j;
}

json depth_to_json(const DepthResult& depth) {
  json j;
  j["depth"] = depth.depth;
  j["witness_subset"] = depth.witness_subset;
  return j;
}

json corollary_to_json(const CorollaryReport& report) {
  json j;
  j["alpha"] = report.alpha;
  j["depth"] = report.depth;
  j["depth_threshold"] = report.depth_threshold;
  j["hypothesis_holds"] = report.hypothesis_holds;
  j["census"] = census_to_json(report.census);
  j["conclusion_holds"] = report.conclusion_holds;
  j["violation"] = report.violation;
  return j;
}

json calibration_to_json(const CalibrationReport& report) {
  json j;
  j["trials"] = report.trials;
  j["empirical_pass_rate"] = report.empirical_pass_rate;
  j["predicted_pass_rate"] = report.predicted_pass_rate;
  j["binomial_sigma"] = report.binomial_sigma;
  j["z_score"] = report.z_score;
  j["t_used"] = report.t_used;
  j["p_used"] = report.p_used;
  j["master_seed"] = report.master_seed;
  return j;
}

json bound_check_to_json(const BoundCheckReport& report) {
  json j;
  j["calibration"] = calibration_to_json(report.calibration);
  j["depth"] = report.depth;
  j["depth_threshold"] = report.depth_threshold;
  j["hypothesis_met"] = report.hypothesis_met;
  j["empirical_fail_rate"] = report.empirical_fail_rate;
  j["required_fail_rate"] = report.required_fail_rate;
  j["margin"] = report.margin;
  j["bound_holds"] = report.bound_holds;
  return j;
}

std::string calibration_csv_row(const CalibrationReport& report) {
  char buf[512];
  std::snprintf(buf, sizeof(buf), "%lld,%.17g,%.17g,%.17g,%lld,%.17g,%llu",
                static_cast<long long>(report.trials),
                report.empirical_pass_rate, report.predicted_pass_rate,
                report.p_used, static_cast<long long>(report.t_used),
                report.z_score, static_cast<unsigned long long>(report.master_seed));
  return buf;
}

std::string load_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Error("failed reading " + path);
  return ss.str();
}

void save_text(const std::string& text, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open " + path + " for writing");
  out << text;
  out.flush();
  if (!out) throw Error("failed writing " + path);
}

}  // namespace helly
