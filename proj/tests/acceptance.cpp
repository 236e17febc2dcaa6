// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "swath/bench.hpp"
#include "swath/errors.hpp"
#include "swath/io.hpp"
#include "swath/kinodynamics.hpp"

using namespace swath;

namespace {

constexpr std::uint64_t kCorpusSeed = 1;
constexpr int kCorpusSize = 200;
constexpr double kAlpha = 0.99;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Verdict {
    bool pass = true;
    std::string detail;
};

int failures = 0;

void report(int number, const std::string& title, const std::function<Verdict()>& body) {
    Verdict v;
    try {
        v = body();
    } catch (const std::exception& e) {
        v = {false, std::string("exception: ") + e.what()};
    }
    if (!v.pass) ++failures;
    std::printf("[%s] %d %s: %s\n", v.pass ? "PASS" : "FAIL", number, title.c_str(), v.detail.c_str());
    std::fflush(stdout);
}

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

const std::vector<PolygonROI>& corpus() {
    static const std::vector<PolygonROI> c = generate_corpus(kCorpusSeed, kCorpusSize);
    return c;
}

PlannerConfig default_config() {
    PlannerConfig c;
    c.alpha = kAlpha;
    c.seed = 7;
    return c;
}

/// Every corpus polygon through every standard pipeline, computed once.
struct BenchRuns {
    std::vector<std::vector<PipelineResult>> results;  ///< [polygon][pipeline]
    std::string error;
};

const BenchRuns& bench_runs() {
    static const BenchRuns runs = [] {
        BenchRuns r;
        const PlannerConfig config = default_config();
        for (const PolygonROI& roi : corpus()) {
            std::vector<PipelineResult> row;
            for (const PipelineSpec& spec : standard_pipelines()) {
                try {
                    row.push_back(run_pipeline(roi, spec, config));
                } catch (const std::exception& e) {
                    if (r.error.empty()) r.error = roi.id + "/" + spec.name + ": " + e.what();
                    row.emplace_back();
                }
            }
            r.results.push_back(std::move(row));
        }
        return r;
    }();
    return runs;
}

std::size_t pipeline_index(const std::string& name) {
    const auto& ps = standard_pipelines();
    for (std::size_t i = 0; i < ps.size(); ++i)
        if (ps[i].name == name) return i;
    throw InvalidSpecError("unknown pipeline " + name);
}

bool partition_set_sound(const CellRegion& source, const PartitionSet& set, std::string& why) {
    std::set<Cell> seen;
    for (const Partition& p : set.partitions) {
        for (const Cell& c : p.region.cells()) {
            if (!source.contains(c)) {
                why = "cell outside source";
                return false;
            }
            if (!seen.insert(c).second) {
                why = "cell in two partitions";
                return false;
            }
        }
        if (!oracle::monotone_by_runs(p.region, Axis::horizontal) && !oracle::monotone_by_runs(p.region, Axis::vertical)) {
            why = "partition monotone along neither axis";
            return false;
        }
    }
    if (seen.size() != source.size()) {
        why = "union misses cells";
        return false;
    }
    return true;
}

std::size_t max_candidates(const CandidateTable& t) {
    std::size_t m = 0;
    for (const auto& row : t) m = std::max(m, row.size());
    return m;
}

Verdict criterion_soundness() {
    double elapsed = 0;
    int failures_here = 0;
    std::string first;
    std::size_t parts = 0;
    for (const PolygonROI& roi : corpus()) {
        const CellRegion region = rasterize(roi, default_grid(roi, 1.0));
        const auto t0 = Clock::now();
        const PartitionSet set = partition_region(region, Decomposer::ours);
        elapsed += seconds_since(t0);
        parts += set.partitions.size();
        std::string why;
        if (!partition_set_sound(region, set, why)) {
            ++failures_here;
            if (first.empty()) first = roi.id + ": " + why;
        }
    }
    return {failures_here == 0 && elapsed < 60.0,
            fmt("%d polygons, %zu partitions, %d failures, %.2f s (limit 60 s)%s", kCorpusSize, parts, failures_here,
                elapsed, first.empty() ? "" : (", first: " + first).c_str())};
}

Verdict criterion_monotone_oracle() {
    Rng rng(500);
    int disagreements = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const CellRegion r = oracle::random_cells(rng, rng.range(1, 12), rng.range(1, 12), rng.uniform(0.3, 0.95));
        for (Axis a : {Axis::horizontal, Axis::vertical})
            if (is_monotone(axis_probe(r, a)) != oracle::monotone_by_runs(r, a)) ++disagreements;
    }
    return {disagreements == 0, fmt("500 regions x 2 axes, %d disagreements", disagreements)};
}

Verdict criterion_routing_oracle() {
    Rng rng(300);
    int mismatches = 0, state_violations = 0;
    double worst = 0;
    const auto t0 = Clock::now();
    for (int trial = 0; trial < 100; ++trial) {
        const int n = rng.range(1, 7);
        const CandidateTable t = oracle::random_table(rng, n, 4);
        const double rho = 0.15;
        DPStats stats;
        const double dp = held_karp(t, CostParams{rho}, {}, &stats).total_cost;
        const double brute = oracle::brute_force_route(t, rho).cost;
        const double rel = std::abs(dp - brute) / std::max(1.0, std::abs(brute));
        worst = std::max(worst, rel);
        if (rel > 1e-9) ++mismatches;
        if (stats.states > (std::size_t{1} << n) * static_cast<std::size_t>(n) * max_candidates(t)) ++state_violations;
    }
    const double elapsed = seconds_since(t0);
    return {mismatches == 0 && state_violations == 0 && elapsed < 120.0,
            fmt("100 instances (N<=7, M<=4), %d mismatches, worst rel %.3g (tol 1e-9), %d state-bound violations, "
                "%.2f s (limit 120 s)",
                mismatches, worst, state_violations, elapsed)};
}

Verdict criterion_coverage() {
    const BenchRuns& runs = bench_runs();
    if (!runs.error.empty()) return {false, "pipeline error: " + runs.error};
    int checked = 0, failed = 0;
    double lowest = 1.0;
    std::string first;
    for (const auto& row : runs.results) {
        for (const PipelineResult& r : row) {
            const double w = r.grid.cell_size;
            const double sampled = oracle::sampled_coverage(r.region, {r.plan.stitched}, w, kAlpha, 20);
            lowest = std::min(lowest, sampled);
            ++checked;
            if (sampled < kAlpha || r.record.coverage < kAlpha) {
                ++failed;
                if (first.empty()) first = r.record.polygon + "/" + r.record.pipeline;
            }
        }
    }
    return {failed == 0, fmt("%d runs, %d below alpha=%.2f, lowest sampled ratio %.4f%s", checked, failed, kAlpha,
                             lowest, first.empty() ? "" : (", first: " + first).c_str())};
}

Verdict criterion_goldens() {
    std::vector<std::string> problems;
    const CellRegion u = oracle::from_rows({"#.#", "#.#", "###"}, 2.0);
    const double gh = gap_severity(axis_probe(u, Axis::horizontal)).severity;
    const double gv = gap_severity(axis_probe(u, Axis::vertical)).severity;
    const std::size_t u_parts = merge_pass(decompose(u)).partitions.size();
    if (gh != 4.0) problems.push_back(fmt("G_H=%g", gh));
    if (gv != 0.0) problems.push_back(fmt("G_V=%g", gv));
    if (u_parts != 1) problems.push_back(fmt("U partitions=%zu", u_parts));

    const double w = 2.0;
    PlannerConfig config = default_config();
    config.footprint = FootprintSpec::from_width(w);
    const Ring hole{{w, w}, {w, 2 * w}, {2 * w, 2 * w}, {2 * w, w}};
    const PolygonROI ring = make_roi("ring", {{0, 0}, {3 * w, 0}, {3 * w, 3 * w}, {0, 3 * w}}, {hole});
    const int ours = run_pipeline(ring, pipeline_by_name("OURS"), config).record.partitions;
    const int bcd = run_pipeline(ring, pipeline_by_name("BCD-DP"), config).record.partitions;
    if (ours != 2) problems.push_back(fmt("ring ours=%d", ours));
    if (bcd != 3) problems.push_back(fmt("ring BCD=%d", bcd));
    const PolygonROI u_roi = make_roi("u", {{0, 0}, {3 * w, 0}, {3 * w, 3 * w}, {2 * w, 3 * w}, {2 * w, w}, {w, w}, {w, 3 * w}, {0, 3 * w}});
    const int u_pipeline = run_pipeline(u_roi, pipeline_by_name("OURS"), config).record.partitions;
    if (u_pipeline != 1) problems.push_back(fmt("U polygon partitions=%d", u_pipeline));

    std::string detail = fmt("U: G_H=%g (2w=%g), G_V=%g, parts=%zu; ring: ours=%d, BCD=%d", gh, 2 * w, gv, u_parts, ours, bcd);
    for (const std::string& p : problems) detail += "; mismatch " + p;
    return {problems.empty(), detail};
}

Verdict criterion_trends() {
    const BenchRuns& runs = bench_runs();
    if (!runs.error.empty()) return {false, "pipeline error: " + runs.error};
    const std::size_t ours = pipeline_index("OURS"), bcd = pipeline_index("BCD-DP"), nn = pipeline_index("NN");
    double sum_ours = 0, sum_bcd = 0;
    int dp_wins = 0;
    const CostParams params = default_config().cost;
    for (const auto& row : runs.results) {
        sum_ours += row[ours].record.partitions;
        sum_bcd += row[bcd].record.partitions;
        if (path_cost(row[ours].record, params) <= path_cost(row[nn].record, params) * (1 + 1e-12)) ++dp_wins;
    }
    const double n = static_cast<double>(runs.results.size());
    const double share = dp_wins / n;
    return {sum_ours <= sum_bcd && share >= 0.80,
            fmt("mean partitions ours %.3f vs BCD %.3f; DP path cost <= NN on %d/%d polygons (%.1f%%, need 80%%)",
                sum_ours / n, sum_bcd / n, dp_wins, static_cast<int>(n), 100 * share)};
}

Verdict criterion_kinodynamics() {
    const MotionLimits limits{5.0, 2.5, std::numeric_limits<double>::infinity()};
    const double t10 = rest_to_rest_time(10.0, limits);
    const double t100 = rest_to_rest_time(100.0, limits);
    bool monotone = true;
    double previous = -1;
    for (int turns = 0; turns <= 10; ++turns) {
        // Staircase of turns+1 equal legs, 40 m in total.
        const double leg = 40.0 / (turns + 1);
        Polyline path{{0, 0}};
        for (int k = 0; k <= turns; ++k) {
            const Point last = path.back();
            path.push_back(k % 2 == 0 ? Point{last.x + leg, last.y} : Point{last.x, last.y + leg});
        }
        const double t = time_parameterize(path, limits).total;
        if (!(t > previous)) monotone = false;
        previous = t;
    }
    return {t10 == 4.0 && t100 == 22.0 && monotone,
            fmt("d=10 -> %.17g s, d=100 -> %.17g s, strictly increasing over 0..10 turns: %s", t10, t100,
                monotone ? "yes" : "no")};
}

Verdict criterion_determinism() {
    int differing = 0, runs = 0;
    PlannerConfig config = default_config();
    config.seed = 11;
    for (int k = 0; k < 10; ++k) {
        const PolygonROI& roi = corpus()[static_cast<std::size_t>(k * 17)];
        for (const PipelineSpec& spec : standard_pipelines()) {
            const std::string a = plan_document(run_pipeline(roi, spec, config)).dump();
            const std::string b = plan_document(run_pipeline(roi, spec, config)).dump();
            ++runs;
            if (a != b) ++differing;
        }
    }
    Rng rng(8);
    int changed = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const CandidateTable t = oracle::random_table(rng, rng.range(2, 7), 4);
        CandidateTable big = t;
        for (auto& row : big) {
            for (SweepCandidate& c : row) {
                c.entry = 3.0 * c.entry;
                c.exit = 3.0 * c.exit;
                c.length *= 3.0;
                for (Point& p : c.waypoints) p = 3.0 * p;
            }
        }
        const GlobalPlan base = held_karp(t, CostParams{0.15});
        const GlobalPlan scaled = held_karp(big, CostParams{0.45});
        if (base.order != scaled.order || base.choices != scaled.choices) ++changed;
    }
    return {differing == 0 && changed == 0,
            fmt("%d repeated runs, %d differing plan documents; 50 scaled instances (s=3), %d changed argmins", runs,
                differing, changed)};
}

/// Comb of five 16 x 102 teeth on a 112 x 20 base, each tooth pierced by a
/// 4 x 20 window: exactly 10,000 unit cells and no axis along which the whole
/// region is monotone.
PolygonROI large_comb() {
    Ring outer{{0, 0}, {112, 0}};
    std::vector<Ring> holes;
    for (int k = 4; k >= 0; --k) {
        const double x0 = 24.0 * k, x1 = x0 + 16.0;
        outer.push_back({x1, 122});
        outer.push_back({x0, 122});
        if (k > 0) {
            outer.push_back({x0, 20});
            outer.push_back({x0 - 8.0, 20});
        }
        holes.push_back({{x0 + 6, 60}, {x0 + 6, 80}, {x0 + 10, 80}, {x0 + 10, 60}});
    }
    return make_roi("comb-10000", outer, holes);
}

Verdict criterion_performance() {
    const PolygonROI roi = large_comb();
    PlannerConfig config = default_config();
    const auto t0 = Clock::now();
    const PipelineResult r = run_pipeline(roi, pipeline_by_name("OURS"), config);
    const double elapsed = r.record.plan_ms / 1000.0;
    const double wall = seconds_since(t0);
    const int n = r.record.partitions;
    DPStats stats;
    held_karp(r.candidates, config.cost, ExactOptions{config.exact_limit, std::nullopt}, &stats);
    const std::size_t bound = (std::size_t{1} << n) * static_cast<std::size_t>(n) * max_candidates(r.candidates);
    const bool ok = r.region.size() == 10000 && n <= 15 && elapsed < 10.0 && stats.states <= bound && r.record.note.empty();
    return {ok, fmt("%zu cells, N=%d, decompose+route %.3f s (limit 10 s, full pipeline %.3f s), DP states %zu <= %zu",
                    r.region.size(), n, elapsed, wall, stats.states, bound)};
}

}  // namespace

int main() {
    const auto t0 = Clock::now();
    report(1, "decomposition soundness", criterion_soundness);
    report(2, "monotonicity oracle", criterion_monotone_oracle);
    report(3, "routing oracle", criterion_routing_oracle);
    report(4, "coverage completeness", criterion_coverage);
    report(5, "golden fixtures", criterion_goldens);
    report(6, "trend reproduction", criterion_trends);
    report(7, "kinodynamic closed forms", criterion_kinodynamics);
    report(8, "scale and determinism", criterion_determinism);
    report(9, "performance envelope", criterion_performance);
    std::printf("%d of 9 criteria failed (%.1f s)\n", failures, seconds_since(t0));
    return failures == 0 ? 0 : 1;
}
