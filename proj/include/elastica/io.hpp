#pragma once

#include <optional>
#include <string>
#include <vector>

#include "elastica/bounds.hpp"
#include "elastica/competitor.hpp"
#include "elastica/optimizer.hpp"
#include "elastica/shape.hpp"

#include "json.hpp"

namespace elastica {

// Provenance block embedded in every structured output; identical manifests
// must reproduce byte-identical files, so the timestamp can be pinned.
struct RunManifest {
    std::string command;
    std::vector<std::string> input_paths;
    nlohmann::json config_echo;
    std::string tool_version = "0.1.0";
    std::uint32_t seed = 42;
    std::string timestamp;  // ISO 8601; empty = fill with current UTC time

    nlohmann::json to_json() const;
};

std::string current_utc_timestamp();

// Shape files: {"a0": .., "cos": [..], "sin": [..]} or {"polyline": [[x,y],..]}.
// Polylines are fitted by a truncated support-function expansion; a fit whose
// boundary strays too far from the input is rejected as nonconvex.
ConvexShape read_shape(const std::string& path);
ConvexShape shape_from_json(const nlohmann::json& j);
nlohmann::json shape_to_json(const ConvexShape& shape);

nlohmann::json energy_to_json(const EnergyBreakdown& e, const RunManifest& manifest);
nlohmann::json bounds_to_json(const BoundsReport& report, const RunManifest& manifest);
std::string bounds_to_table(const BoundsReport& report);
nlohmann::json competitor_to_json(const SweepReport& report, const RunManifest& manifest);

std::string trace_to_csv(const OptimizationTrace& trace);

// SVG plots (static, minimal XML).
std::string shape_svg(const std::vector<BoundaryCurve>& curves,
                      const std::vector<std::string>& labels);
std::string trace_svg(const std::vector<TraceRow>& rows);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

// Serialize doubles with enough digits to round-trip, deterministically.
std::string format_double(double x);

}  // namespace elastica
