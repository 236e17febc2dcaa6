#pragma once

#include <string>

#include "swath/bench.hpp"

namespace swath {

struct SvgLayers {
    const PolygonROI* roi = nullptr;
    const CellRegion* region = nullptr;
    const PartitionSet* partitions = nullptr;
    const std::vector<CutLine>* cuts = nullptr;
    const std::vector<GapBand>* bands = nullptr;
    const Polyline* path = nullptr;
    const std::vector<Segment>* connectors = nullptr;
};

/// Standalone SVG (y up) with cells colored by partition, gap bands shaded,
/// cut lines dashed, the path in black and connectors in red.
std::string render_svg(const SvgLayers& layers);

std::string render_svg(const PolygonROI& roi, const PipelineResult& result);

}  // namespace swath
