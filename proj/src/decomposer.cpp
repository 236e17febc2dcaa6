#include "swath/decomposer.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <tuple>

#include "swath/errors.hpp"

namespace swath {

std::string to_string(Axis axis) { return axis == Axis::horizontal ? "horizontal" : "vertical"; }

std::vector<Axis> AxisSet::list() const {
    std::vector<Axis> out;
    if (horizontal) out.push_back(Axis::horizontal);
    if (vertical) out.push_back(Axis::vertical);
    return out;
}

namespace {

// Runs of consecutive indices along each line, as [first, last] cell indices.
struct Run {
    std::int32_t line;
    std::int32_t first;
    std::int32_t last;
};

std::vector<Run> runs_along(const CellRegion& region, Axis axis) {
    std::vector<std::pair<std::int32_t, std::int32_t>> keys;  // (line, position)
    keys.reserve(region.size());
    for (const Cell& c : region.cells()) {
        if (axis == Axis::horizontal)
            keys.emplace_back(c.row, c.col);
        else
            keys.emplace_back(c.col, c.row);
    }
    if (axis == Axis::vertical) std::sort(keys.begin(), keys.end());
    std::vector<Run> runs;
    for (const auto& [line, pos] : keys) {
        // A boundary crossing occurs wherever occupancy flips along the line.
        if (!runs.empty() && runs.back().line == line && runs.back().last + 1 == pos)
            runs.back().last = pos;
        else
            runs.push_back({line, pos, pos});
    }
    return runs;
}

}  // namespace

AxisProbe axis_probe(const CellRegion& region, Axis axis) {
    AxisProbe probe;
    probe.axis = axis;
    const GridSpec& g = region.grid();
    for (const Run& r : runs_along(region, axis)) {
        if (probe.lines.empty() || probe.lines.back().index != r.line) {
            ProbeLine line;
            line.index = r.line;
            if (axis == Axis::horizontal) {
                line.band_low = g.y_at(r.line);
                line.band_high = g.y_at(r.line + 1);
                line.coordinate = g.y_at(r.line + 0.5);
            } else {
                line.band_low = g.x_at(r.line);
                line.band_high = g.x_at(r.line + 1);
                line.coordinate = g.x_at(r.line + 0.5);
            }
            probe.lines.push_back(std::move(line));
        }
        if (axis == Axis::horizontal)
            probe.lines.back().intervals.emplace_back(g.x_at(r.first), g.x_at(r.last + 1));
        else
            probe.lines.back().intervals.emplace_back(g.y_at(r.first), g.y_at(r.last + 1));
    }
    return probe;
}

bool is_monotone(const AxisProbe& probe) {
    return std::all_of(probe.lines.begin(), probe.lines.end(),
                       [](const ProbeLine& l) { return l.intervals.size() == 1; });
}

AxisSet feasibility(const CellRegion& region) {
    return {is_monotone(axis_probe(region, Axis::horizontal)), is_monotone(axis_probe(region, Axis::vertical))};
}

GapReport gap_severity(const AxisProbe& probe) {
    GapReport report;
    report.axis = probe.axis;
    for (const ProbeLine& line : probe.lines) {
        if (line.intervals.size() < 2) continue;
        for (std::size_t k = 0; k + 1 < line.intervals.size(); ++k)
            report.severity += line.intervals[k + 1].first - line.intervals[k].second;
        GapBand band;
        band.axis = probe.axis;
        band.low = line.band_low;
        band.high = line.band_high;
        const double span_lo = line.intervals.front().first;
        const double span_hi = line.intervals.back().second;
        if (probe.axis == Axis::horizontal)
            band.bounding_box = {span_lo, line.band_low, span_hi, line.band_high};
        else
            band.bounding_box = {line.band_low, span_lo, line.band_high, span_hi};
        report.bands.push_back(band);
    }
    return report;
}

namespace {

std::int32_t to_line(const GridSpec& g, Axis axis, double coord) {
    const double origin = axis == Axis::horizontal ? g.origin.y : g.origin.x;
    return static_cast<std::int32_t>(std::lround((coord - origin) / g.cell_size));
}

CutLine make_cut(const GridSpec& g, Axis axis, std::int32_t line, double raw) {
    return {axis, axis == Axis::horizontal ? g.y_at(line) : g.x_at(line), line, raw};
}

// Interior grid lines of the region on the cut axis: [lo, hi].
std::pair<std::int32_t, std::int32_t> interior_lines(const CellRegion& region, Axis axis) {
    const CellBounds& b = region.bounds();
    if (axis == Axis::horizontal) return {b.min_row + 1, b.max_row};
    return {b.min_col + 1, b.max_col};
}

}  // namespace

CutLine select_cut(const CellRegion& region, const GapReport& horizontal, const GapReport& vertical) {
    const bool use_h = horizontal.severity >= vertical.severity && !horizontal.bands.empty();
    const GapReport& chosen = use_h ? horizontal : vertical;
    if (chosen.bands.empty()) throw ContractError("select_cut requires a region that is non-monotone on both axes");
    const Axis axis = use_h ? Axis::horizontal : Axis::vertical;
    const GridSpec& g = region.grid();

    std::int32_t lo_line = to_line(g, axis, chosen.bands.front().low);
    std::int32_t hi_line = to_line(g, axis, chosen.bands.front().high);
    for (const GapBand& band : chosen.bands) {
        lo_line = std::min(lo_line, to_line(g, axis, band.low));
        hi_line = std::max(hi_line, to_line(g, axis, band.high));
    }
    const double origin = axis == Axis::horizontal ? g.origin.y : g.origin.x;
    const double raw = origin + 0.5 * (lo_line + hi_line) * g.cell_size;
    // Nearest grid line, half-way midpoints to the lower one (indices are non-negative).
    std::int32_t line = (lo_line + hi_line) / 2;

    const auto [first, last] = interior_lines(region, axis);
    if (first > last) throw CutError("no interior grid line on the " + to_string(axis) + " axis");
    line = std::clamp(line, first, last);
    return make_cut(g, axis, line, raw);
}

CutLine fallback_cut(const CellRegion& region, const GapReport& report) {
    if (report.bands.empty()) throw CutError("fallback cut needs a gap band");
    const GridSpec& g = region.grid();
    const auto [first, last] = interior_lines(region, report.axis);
    const GapBand* lowest = &report.bands.front();
    for (const GapBand& b : report.bands)
        if (b.low < lowest->low) lowest = &b;
    for (double c : {lowest->low, lowest->high}) {
        const std::int32_t line = to_line(g, report.axis, c);
        if (line >= first && line <= last) return make_cut(g, report.axis, line, c);
    }
    throw CutError("gap band has no interior bounding grid line");
}

std::pair<CellRegion, CellRegion> split_region(const CellRegion& region, const CutLine& cut) {
    std::vector<Cell> below, above;
    for (const Cell& c : region.cells()) {
        const std::int32_t pos = cut.axis == Axis::horizontal ? c.row : c.col;
        (pos < cut.grid_line ? below : above).push_back(c);
    }
    return {CellRegion(region.grid(), std::move(below)), CellRegion(region.grid(), std::move(above))};
}

PartitionSet make_partition_set(const CellRegion& source, std::vector<CellRegion> parts) {
    std::sort(parts.begin(), parts.end(),
              [](const CellRegion& a, const CellRegion& b) { return a.cells().front() < b.cells().front(); });
    PartitionSet set;
    set.source_region = source;
    const CellBounds b = source.bounds();
    const auto width = static_cast<std::size_t>(std::max(0, b.width()));
    std::vector<int> label(width * static_cast<std::size_t>(std::max(0, b.height())), -1);
    auto at = [&](std::int32_t col, std::int32_t row) -> int {
        if (col < b.min_col || col > b.max_col || row < b.min_row || row > b.max_row) return -1;
        return label[static_cast<std::size_t>(row - b.min_row) * width + static_cast<std::size_t>(col - b.min_col)];
    };

    for (std::size_t i = 0; i < parts.size(); ++i) {
        Partition p;
        p.id = static_cast<int>(i);
        p.region = parts[i].with_id("p" + std::to_string(i));
        p.feasible_axes = feasibility(p.region);
        for (const Cell& c : p.region.cells()) {
            if (c.col < b.min_col || c.col > b.max_col || c.row < b.min_row || c.row > b.max_row)
                throw ContractError("partition cell outside source region");
            label[static_cast<std::size_t>(c.row - b.min_row) * width + static_cast<std::size_t>(c.col - b.min_col)] =
                p.id;
        }
        set.partitions.push_back(std::move(p));
    }
    std::set<std::pair<int, int>> pairs;
    for (const Partition& p : set.partitions) {
        for (const Cell& c : p.region.cells()) {
            for (const Cell n : {Cell{c.col + 1, c.row}, Cell{c.col, c.row + 1}}) {
                const int other = at(n.col, n.row);
                if (other >= 0 && other != p.id) pairs.emplace(std::min(p.id, other), std::max(p.id, other));
            }
        }
    }
    for (const auto& [a, bb] : pairs) {
        set.partitions[static_cast<std::size_t>(a)].neighbors.push_back(bb);
        set.partitions[static_cast<std::size_t>(bb)].neighbors.push_back(a);
    }
    for (Partition& p : set.partitions) std::sort(p.neighbors.begin(), p.neighbors.end());
    return set;
}

PartitionSet decompose(const CellRegion& region, DecompositionTrace* trace) {
    if (region.empty()) throw EmptyRegionError("cannot decompose an empty region");
    if (!is_connected(region)) throw ContractError("decompose requires a 4-connected region");

    std::vector<CellRegion> leaves;
    std::vector<CellRegion> work{region};
    std::size_t cuts = 0;
    while (!work.empty()) {
        CellRegion cur = std::move(work.back());
        work.pop_back();
        const AxisProbe ph = axis_probe(cur, Axis::horizontal);
        const AxisProbe pv = axis_probe(cur, Axis::vertical);
        if (is_monotone(ph) || is_monotone(pv)) {
            leaves.push_back(std::move(cur));
            continue;
        }
        const GapReport gh = gap_severity(ph);
        const GapReport gv = gap_severity(pv);
        CutLine cut;
        try {
            cut = select_cut(cur, gh, gv);
        } catch (const CutError&) {
            cut = fallback_cut(cur, gh.severity >= gv.severity ? gh : gv);
        }
        if (trace) {
            trace->cuts.push_back(cut);
            const GapReport& used = cut.axis == Axis::horizontal ? gh : gv;
            trace->bands.insert(trace->bands.end(), used.bands.begin(), used.bands.end());
        }
        auto [below, above] = split_region(cur, cut);
        // Each cut removes at least one cell from every child, so the number
        // of cuts can never exceed the cell count.
        assert(!below.empty() && !above.empty());
        if (below.empty() || above.empty() || ++cuts > region.size())
            throw std::logic_error("decomposition failed to make progress");
        for (CellRegion* side : {&above, &below})
            for (CellRegion& comp : connected_components(*side)) work.push_back(std::move(comp));
    }
    return make_partition_set(region, std::move(leaves));
}

namespace {

CellRegion unite(const CellRegion& a, const CellRegion& b) {
    std::vector<Cell> cells(a.cells().begin(), a.cells().end());
    cells.insert(cells.end(), b.cells().begin(), b.cells().end());
    return CellRegion(a.grid(), std::move(cells));
}

using PartKey = std::tuple<Cell, std::size_t>;

PartKey key_of(const Partition& p) { return {p.region.cells().front(), p.region.size()}; }

}  // namespace

PartitionSet merge_pass(const PartitionSet& parts) {
    PartitionSet cur = parts;
    std::set<std::pair<PartKey, PartKey>> rejected;
    while (true) {
        struct Candidate {
            std::size_t combined;
            int a;
            int b;
        };
        std::vector<Candidate> cands;
        for (const Partition& p : cur.partitions)
            for (int n : p.neighbors)
                if (n > p.id)
                    cands.push_back({p.region.size() + cur.partitions[static_cast<std::size_t>(n)].region.size(),
                                     p.id, n});
        std::sort(cands.begin(), cands.end(), [](const Candidate& x, const Candidate& y) {
            if (x.combined != y.combined) return x.combined > y.combined;
            if (x.a != y.a) return x.a < y.a;
            return x.b < y.b;
        });
        bool merged = false;
        for (const Candidate& c : cands) {
            const Partition& pa = cur.partitions[static_cast<std::size_t>(c.a)];
            const Partition& pb = cur.partitions[static_cast<std::size_t>(c.b)];
            const auto key = std::make_pair(key_of(pa), key_of(pb));
            if (rejected.count(key)) continue;
            CellRegion joined = unite(pa.region, pb.region);
            if (feasibility(joined).empty()) {
                rejected.insert(key);
                continue;
            }
            std::vector<CellRegion> next;
            for (const Partition& p : cur.partitions)
                if (p.id != c.a && p.id != c.b) next.push_back(p.region);
            next.push_back(std::move(joined));
            cur = make_partition_set(cur.source_region, std::move(next));
            merged = true;
            break;
        }
        if (!merged) break;
    }
    return cur;
}

PartitionSet bcd_decompose(const CellRegion& region) {
    if (region.empty()) throw EmptyRegionError("cannot decompose an empty region");
    struct Active {
        std::int32_t first;
        std::int32_t last;
        std::size_t part;
    };
    std::vector<std::vector<Cell>> parts;
    std::vector<Active> prev;
    const std::vector<Run> runs = runs_along(region, Axis::horizontal);

    auto open = [&]() {
        parts.emplace_back();
        return parts.size() - 1;
    };
    auto add = [&](std::size_t part, const Run& r) {
        for (std::int32_t c = r.first; c <= r.last; ++c) parts[part].push_back({c, r.line});
    };

    std::size_t i = 0;
    std::int32_t prev_row = 0;
    bool have_prev = false;
    while (i < runs.size()) {
        const std::int32_t row = runs[i].line;
        std::vector<Run> cur_runs;
        while (i < runs.size() && runs[i].line == row) cur_runs.push_back(runs[i++]);
        if (!have_prev || row != prev_row + 1) prev.clear();

        // Components of the overlap graph between the previous row's runs and this row's.
        const std::size_t np = prev.size(), nc = cur_runs.size();
        std::vector<std::size_t> parent(np + nc);
        for (std::size_t k = 0; k < parent.size(); ++k) parent[k] = k;
        auto find = [&](std::size_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (std::size_t a = 0; a < np; ++a)
            for (std::size_t c = 0; c < nc; ++c)
                if (prev[a].first <= cur_runs[c].last && cur_runs[c].first <= prev[a].last)
                    parent[find(a)] = find(np + c);

        std::vector<Active> next(nc);
        std::vector<bool> done(nc, false);
        for (std::size_t c = 0; c < nc; ++c) {
            if (done[c]) continue;
            const std::size_t root = find(np + c);
            std::vector<std::size_t> ps, cs;
            for (std::size_t a = 0; a < np; ++a)
                if (find(a) == root) ps.push_back(a);
            for (std::size_t k = 0; k < nc; ++k)
                if (find(np + k) == root) cs.push_back(k);
            for (std::size_t k : cs) {
                std::size_t part;
                if (cs.size() == 1 && !ps.empty()) {
                    // Continue (one parent) or merge (several parents): the
                    // leftmost parent's cell carries on.
                    part = prev[ps.front()].part;
                } else {
                    // Split or fresh start: every run opens a new cell.
                    part = open();
                }
                add(part, cur_runs[k]);
                next[k] = {cur_runs[k].first, cur_runs[k].last, part};
                done[k] = true;
            }
        }
        prev = std::move(next);
        prev_row = row;
        have_prev = true;
    }

    std::vector<CellRegion> regions;
    regions.reserve(parts.size());
    for (auto& cells : parts) regions.emplace_back(region.grid(), std::move(cells));
    return make_partition_set(region, std::move(regions));
}

}  // namespace swath
