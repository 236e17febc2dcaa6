#include <chrono>
#include <cmath>

#include "swath/bench.hpp"
#include "swath/errors.hpp"
#include "swath/io.hpp"
#include "swath/svg.hpp"

namespace swath {

std::string to_string(Decomposer d) {
    switch (d) {
        case Decomposer::ours: return "ours";
        case Decomposer::bcd: return "bcd";
        case Decomposer::none: return "none";
    }
    return "?";
}

std::string to_string(Optimizer o) {
    switch (o) {
        case Optimizer::dp: return "dp";
        case Optimizer::ga: return "ga";
        case Optimizer::nn: return "nn";
    }
    return "?";
}

void validate(const PipelineSpec& spec) {
    if ((spec.decomposer == Decomposer::none) != (spec.optimizer == Optimizer::nn)) {
        throw InvalidSpecError("pipeline '" + spec.name + "': decomposer 'none' pairs only with optimizer 'nn'");
    }
}

const std::vector<PipelineSpec>& standard_pipelines() {
    static const std::vector<PipelineSpec> pipelines{
        {"OURS", Decomposer::ours, Optimizer::dp},  {"OURS-GA", Decomposer::ours, Optimizer::ga},
        {"BCD-DP", Decomposer::bcd, Optimizer::dp}, {"BCD-GA", Decomposer::bcd, Optimizer::ga},
        {"NN", Decomposer::none, Optimizer::nn},
    };
    return pipelines;
}

PipelineSpec pipeline_by_name(const std::string& name) {
    for (const PipelineSpec& p : standard_pipelines())
        if (p.name == name) return p;
    throw InvalidSpecError("unknown pipeline '" + name + "' (expected OURS, OURS-GA, BCD-DP, BCD-GA or NN)");
}

void validate(const PlannerConfig& c) {
    footprint_width(c.footprint);
    if (!(c.alpha > 0.0 && c.alpha <= 1.0)) throw InvalidSpecError("coverage alpha must lie in (0, 1]");
    if (!(c.cost.rho >= 0.0) || !std::isfinite(c.cost.rho)) throw InvalidSpecError("rho must be non-negative");
    validate(c.motion);
    if (c.exact_limit < 1 || c.exact_limit > 24) throw InvalidSpecError("exact solver limit must lie in [1, 24]");
}

double path_cost(const BenchmarkRecord& record, const CostParams& params) {
    return record.length + params.rho * record.turns;
}

PartitionSet partition_region(const CellRegion& region, Decomposer decomposer, DecompositionTrace* trace) {
    std::vector<CellRegion> parts;
    for (const CellRegion& component : connected_components(region)) {
        switch (decomposer) {
            case Decomposer::ours: {
                const PartitionSet merged = merge_pass(decompose(component, trace));
                for (const Partition& p : merged.partitions) parts.push_back(p.region);
                break;
            }
            case Decomposer::bcd:
                for (const Partition& p : bcd_decompose(component).partitions) parts.push_back(p.region);
                break;
            case Decomposer::none:
                parts.push_back(component);
                break;
        }
    }
    return make_partition_set(region, std::move(parts));
}

namespace {

std::string diagnostics_name(const std::string& polygon, const std::string& pipeline) {
    std::string s = polygon + "_" + pipeline;
    for (char& ch : s)
        if (ch == '/' || ch == '\\' || ch == ' ') ch = '_';
    return s;
}

}  // namespace

PipelineResult run_pipeline(const PolygonROI& roi, const PipelineSpec& spec, const PlannerConfig& config) {
    validate(spec);
    validate(config);
    const double w = footprint_width(config.footprint);

    PipelineResult out;
    out.record.polygon = roi.id;
    out.record.pipeline = spec.name;

    const auto t0 = std::chrono::steady_clock::now();
    out.grid = default_grid(roi, w);
    out.region = rasterize(roi, out.grid);

    DecompositionTrace trace;
    out.partitions = partition_region(out.region, spec.decomposer, &trace);
    out.cuts = std::move(trace.cuts);
    out.bands = std::move(trace.bands);

    if (spec.optimizer == Optimizer::nn) {
        out.plan = nn_baseline(out.region, config.cost);
    } else {
        out.candidates.reserve(out.partitions.partitions.size());
        for (const Partition& p : out.partitions.partitions) out.candidates.push_back(candidates(p));
        const int n = static_cast<int>(out.candidates.size());
        bool use_ga = spec.optimizer == Optimizer::ga;
        if (!use_ga && n > config.exact_limit) {
            use_ga = true;
            out.record.note = "dp fell back to ga for " + std::to_string(n) + " partitions";
        }
        if (use_ga) {
            GAConfig ga = config.ga;
            ga.seed = config.seed;
            GlobalPlan plan = ga_route(out.candidates, ga);
            out.plan = assemble_plan(out.candidates, std::move(plan.order), std::move(plan.choices), config.cost);
        } else {
            out.plan = held_karp(out.candidates, config.cost, ExactOptions{config.exact_limit, std::nullopt});
        }
    }
    const auto t1 = std::chrono::steady_clock::now();

    out.timing = time_parameterize(out.plan.stitched, config.motion);
    out.record.length = polyline_length(out.plan.stitched);
    out.record.turns = count_turns(out.plan.stitched);
    out.record.time = out.timing.total;
    out.record.partitions = static_cast<int>(out.partitions.partitions.size());
    out.record.plan_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    out.record.coverage = coverage_ratio(out.region, out.plan.stitched, CoverageParams{config.alpha, w});
    out.record.valid = out.record.coverage >= config.alpha;

    if (!out.record.valid) {
        const std::filesystem::path dir = config.diagnostics_root / diagnostics_name(roi.id, spec.name);
        std::filesystem::create_directories(dir);
        write_text(dir / "plan.svg", render_svg(roi, out));
        write_json(dir / "partitions.json", to_json(out.partitions, roi.id));
        write_json(dir / "plan.json", plan_document(out));
        throw CoverageError("polygon " + roi.id + " pipeline " + spec.name + ": coverage " +
                                format_number(out.record.coverage) + " below alpha " + format_number(config.alpha),
                            dir.string());
    }
    return out;
}

}  // namespace swath
