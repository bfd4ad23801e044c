#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "helly/analysis.hpp"
#include "helly/experiment.hpp"
#include "helly/geometry.hpp"
#include "helly/tester.hpp"

namespace helly {

// Instance files: {"schema_version": 1, "dimension": d, "sets": [...]} with
// one tagged record per set. Doubles are emitted in shortest round-trip
// form, so parse(serialize(x)) reproduces x bit for bit.

nlohmann::json instance_to_json(const Instance& instance);

// Rejects unknown "type" tags, missing fields, and wrong shapes with
// ParseFailure naming the offending set; the rebuilt instance is then run
// through the full geometric validation.
Instance instance_from_json(const nlohmann::json& j);

std::string serialize_instance(const Instance& instance);

// Throws ParseFailure with a line number when the text is not JSON.
Instance parse_instance(const std::string& text);

Instance load_instance(const std::string& path);
void save_instance(const Instance& instance, const std::string& path);

// Result files echo enough configuration to replay the run: alpha, epsilon,
// the round budget actually used, both seeds, and the oracle tolerances.
nlohmann::json result_to_json(const Verdict& verdict, const TesterConfig& cfg,
                              std::int64_t t_used);

nlohmann::json census_to_json(const TupleCensus& census);
nlohmann::json depth_to_json(const DepthResult& depth);
nlohmann::json corollary_to_json(const CorollaryReport& report);
nlohmann::json calibration_to_json(const CalibrationReport& report);
nlohmann::json bound_check_to_json(const BoundCheckReport& report);

inline constexpr const char* kCalibrationCsvHeader =
    "trials,pass_rate,predicted,p,t,z,seed";
std::string calibration_csv_row(const CalibrationReport& report);

std::string load_text(const std::string& path);
void save_text(const std::string& text, const std::string& path);

}  // namespace helly
