#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "swath/bench.hpp"

namespace swath {

using Json = nlohmann::json;

Json to_json(const PolygonROI& roi);
PolygonROI roi_from_json(const Json& j);

/// {"polygons": [...]}; a bare array of polygons is accepted on input.
Json rois_to_json(std::span<const PolygonROI> rois);
std::vector<PolygonROI> rois_from_json(const Json& j);

Json to_json(const GridSpec& grid);
Json to_json(const PartitionSet& set, const std::string& polygon_id);

/// Plan document: polygon id, pipeline, and one plan entry with order,
/// choices, total cost, waypoints and connectors in meters.
Json plan_document(const PipelineResult& result);

/// Every waypoint polyline listed in a plan document.
std::vector<Polyline> plan_waypoints(const Json& doc);

Json to_json(const PlannerConfig& config);
/// Missing fields keep their defaults. Throws InvalidSpecError on bad values.
PlannerConfig config_from_json(const Json& j, PlannerConfig base = {});

Json read_json(const std::filesystem::path& path);
/// Pretty-printed with a trailing newline.
void write_json(const std::filesystem::path& path, const Json& j);
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace swath
