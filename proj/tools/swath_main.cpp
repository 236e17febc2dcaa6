#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "swath/bench.hpp"
#include "swath/errors.hpp"
#include "swath/io.hpp"
#include "swath/svg.hpp"

using namespace swath;

namespace {

constexpr int kExitCoverage = 1;
constexpr int kExitInput = 2;

struct ConfigFlags {
    std::string path;
    std::optional<double> width;
    std::optional<double> altitude;
    std::optional<double> half_angle;
    std::optional<double> alpha;
    std::optional<double> rho;
    std::optional<double> v_max, a_max, j_max;
    std::optional<int> exact_limit;
    std::optional<std::uint64_t> seed;

    void attach(CLI::App* app) {
        app->add_option("-c,--config", path, "JSON config file");
        app->add_option("--width", width, "footprint width w in meters");
        app->add_option("--altitude", altitude, "camera altitude in meters (with --half-angle)");
        app->add_option("--half-angle", half_angle, "camera field-of-view angle in radians");
        app->add_option("--alpha", alpha, "per-cell coverage threshold");
        app->add_option("--rho", rho, "turn penalty in meters per turn");
        app->add_option("--v-max", v_max, "speed limit in m/s");
        app->add_option("--a-max", a_max, "acceleration limit in m/s^2");
        app->add_option("--j-max", j_max, "jerk limit in m/s^3 (omit for a trapezoidal profile)");
        app->add_option("--exact-limit", exact_limit, "largest partition count routed exactly");
        app->add_option("--seed", seed, "random seed for the genetic router");
    }

    PlannerConfig resolve() const {
        PlannerConfig c;
        if (!path.empty()) c = config_from_json(read_json(path));
        if (width) c.footprint = FootprintSpec::from_width(*width);
        if (altitude || half_angle) {
            if (!altitude || !half_angle) throw InvalidSpecError("--altitude and --half-angle go together");
            c.footprint = FootprintSpec::from_camera(*altitude, *half_angle);
        }
        if (alpha) c.alpha = *alpha;
        if (rho) c.cost.rho = *rho;
        if (v_max) c.motion.v_max = *v_max;
        if (a_max) c.motion.a_max = *a_max;
        if (j_max) c.motion.j_max = *j_max;
        if (exact_limit) c.exact_limit = *exact_limit;
        if (seed) c.seed = *seed;
        c.ga.seed = c.seed;
        validate(c);
        return c;
    }
};

PolygonROI pick_polygon(const std::string& path, const std::string& id) {
    std::vector<PolygonROI> rois = rois_from_json(read_json(path));
    if (rois.empty()) throw InvalidSpecError(path + " holds no polygons");
    if (id.empty()) return rois.front();
    for (PolygonROI& r : rois)
        if (r.id == id) return r;
    throw InvalidSpecError("polygon '" + id + "' not found in " + path);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coverage path planning over polygonal survey regions"};
    app.option_defaults()->always_capture_default();
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a seeded polygon corpus");
    std::uint64_t gen_seed = 1;
    int gen_count = 13;
    double gen_w = 1.0;
    std::string gen_families, gen_out = "corpus.json";
    gen->add_option("--seed", gen_seed, "corpus seed");
    gen->add_option("-n,--count", gen_count, "number of polygons");
    gen->add_option("--cell-size", gen_w, "footprint width the shapes are scaled by");
    gen->add_option("--families", gen_families, "comma-separated subset of rect,u,l,comb,staircase,ring,blob,branched");
    gen->add_option("-o,--out", gen_out, "output ROI document");

    // plan
    auto* plan = app.add_subcommand("plan", "plan one polygon with one pipeline");
    ConfigFlags plan_cfg;
    plan_cfg.attach(plan);
    std::string plan_roi, plan_id, plan_pipeline = "OURS", plan_out = "plan.json", plan_svg, plan_parts;
    plan->add_option("--roi", plan_roi, "ROI JSON document")->required();
    plan->add_option("--polygon", plan_id, "polygon id inside the document (default: first)");
    plan->add_option("-p,--pipeline", plan_pipeline, "OURS, OURS-GA, BCD-DP, BCD-GA or NN");
    plan->add_option("-o,--out", plan_out, "plan JSON output");
    plan->add_option("--svg", plan_svg, "write an SVG overlay here");
    plan->add_option("--partitions", plan_parts, "write the partition document here");

    // bench
    auto* bench = app.add_subcommand("bench", "run pipelines over a corpus and tabulate overheads");
    ConfigFlags bench_cfg;
    bench_cfg.attach(bench);
    std::string bench_corpus, bench_pipelines, bench_out = "bench-out";
    int bench_count = 13;
    std::uint64_t bench_corpus_seed = 1;
    bool bench_svg = false;
    bench->add_option("--corpus", bench_corpus, "ROI JSON document (default: generate one)");
    bench->add_option("--corpus-seed", bench_corpus_seed, "seed for the generated corpus");
    bench->add_option("-n,--count", bench_count, "polygons to generate when no corpus is given");
    bench->add_option("--pipelines", bench_pipelines, "comma-separated pipeline names (default: all five)");
    bench->add_option("-o,--out-dir", bench_out, "directory for metrics and summaries");
    bench->add_flag("--svg", bench_svg, "write one SVG per run");

    // verify
    auto* verify = app.add_subcommand("verify", "check coverage of an external plan");
    ConfigFlags verify_cfg;
    verify_cfg.attach(verify);
    std::string verify_roi, verify_id, verify_plan;
    verify->add_option("--roi", verify_roi, "ROI JSON document")->required();
    verify->add_option("--polygon", verify_id, "polygon id inside the document (default: first)");
    verify->add_option("--plan", verify_plan, "plan JSON document")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) {
            std::vector<Family> families;
            for (const std::string& f : split_list(gen_families)) families.push_back(family_from_string(f));
            if (families.empty()) families = all_families();
            const auto corpus = generate_corpus(gen_seed, families, gen_count, gen_w);
            write_json(gen_out, rois_to_json(corpus));
            std::printf("wrote %zu polygons to %s\n", corpus.size(), gen_out.c_str());
            return 0;
        }

        if (*plan) {
            const PlannerConfig config = plan_cfg.resolve();
            const PolygonROI roi = pick_polygon(plan_roi, plan_id);
            const PipelineResult r = run_pipeline(roi, pipeline_by_name(plan_pipeline), config);
            write_json(plan_out, plan_document(r));
            if (!plan_svg.empty()) write_text(plan_svg, render_svg(roi, r));
            if (!plan_parts.empty()) write_json(plan_parts, to_json(r.partitions, roi.id));
            std::printf("%s %s: partitions=%d L=%s K=%d T=%s coverage=%s%s%s\n", roi.id.c_str(), plan_pipeline.c_str(),
                        r.record.partitions, format_number(r.record.length).c_str(), r.record.turns,
                        format_number(r.record.time).c_str(), format_number(r.record.coverage).c_str(),
                        r.record.note.empty() ? "" : " note=", r.record.note.c_str());
            return 0;
        }

        if (*bench) {
            const PlannerConfig config = bench_cfg.resolve();
            const double w = footprint_width(config.footprint);
            const std::vector<PolygonROI> corpus = bench_corpus.empty()
                                                       ? generate_corpus(bench_corpus_seed, bench_count, w)
                                                       : rois_from_json(read_json(bench_corpus));
            std::vector<PipelineSpec> pipelines;
            for (const std::string& name : split_list(bench_pipelines)) pipelines.push_back(pipeline_by_name(name));
            if (pipelines.empty()) pipelines = standard_pipelines();

            const std::filesystem::path out_dir = bench_out;
            PlannerConfig run_config = config;
            run_config.diagnostics_root = out_dir / "diagnostics";
            std::vector<BenchmarkRecord> records;
            int failures = 0;
            for (const PolygonROI& roi : corpus) {
                for (const PipelineSpec& spec : pipelines) {
                    try {
                        const PipelineResult r = run_pipeline(roi, spec, run_config);
                        records.push_back(r.record);
                        if (bench_svg) write_text(out_dir / "svg" / (roi.id + "_" + spec.name + ".svg"), render_svg(roi, r));
                    } catch (const CoverageError& e) {
                        ++failures;
                        std::fprintf(stderr, "coverage failure: %s (diagnostics in %s)\n", e.what(),
                                     e.diagnostics_dir().c_str());
                    }
                }
            }
            {
                std::ostringstream csv;
                write_records_csv(csv, records);
                write_text(out_dir / "metrics.csv", csv.str());
            }
            if (failures > 0) {
                std::fprintf(stderr, "%d run(s) failed the coverage check\n", failures);
                return kExitCoverage;
            }
            const OverheadTable table = aggregate(records);
            std::ostringstream summary;
            write_summary_csv(summary, table);
            write_text(out_dir / "summary.csv", summary.str());
            const std::string text = format_summary(table);
            write_text(out_dir / "summary.txt", text);
            std::printf("%zu polygons x %zu pipelines\n%s", corpus.size(), pipelines.size(), text.c_str());
            return 0;
        }

        if (*verify) {
            const PlannerConfig config = verify_cfg.resolve();
            const PolygonROI roi = pick_polygon(verify_roi, verify_id);
            const double w = footprint_width(config.footprint);
            const CellRegion region = rasterize(roi, default_grid(roi, w));
            const std::vector<Polyline> paths = plan_waypoints(read_json(verify_plan));
            const double ratio = coverage_ratio(region, paths, CoverageParams{config.alpha, w});
            const bool ok = ratio >= config.alpha;
            std::printf("%s: coverage %s over %zu cells (alpha %s) %s\n", roi.id.c_str(), format_number(ratio).c_str(),
                        region.size(), format_number(config.alpha).c_str(), ok ? "PASS" : "FAIL");
            return ok ? 0 : kExitCoverage;
        }
    } catch (const CoverageError& e) {
        std::fprintf(stderr, "error: %s\ndiagnostics: %s\n", e.what(), e.diagnostics_dir().c_str());
        return kExitCoverage;
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitInput;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitInput;
    }
    return 0;
}
