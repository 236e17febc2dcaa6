#include "swath/io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "swath/errors.hpp"

namespace swath {

namespace {

Json points_json(std::span<const Point> pts) {
    Json arr = Json::array();
    for (const Point& p : pts) arr.push_back({p.x, p.y});
    return arr;
}

Ring points_from_json(const Json& j, const std::string& what) {
    if (!j.is_array()) throw InvalidSpecError(what + " must be an array of [x, y] pairs");
    Ring out;
    for (const Json& p : j) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number())
            throw InvalidSpecError(what + " must be an array of [x, y] pairs");
        out.push_back({p[0].get<double>(), p[1].get<double>()});
    }
    return out;
}

template <class T>
void read_field(const Json& obj, const char* key, T& target) {
    if (!obj.contains(key)) return;
    try {
        target = obj.at(key).get<T>();
    } catch (const Json::exception& e) {
        throw InvalidSpecError(std::string("config field '") + key + "': " + e.what());
    }
}

}  // namespace

Json to_json(const PolygonROI& roi) {
    Json holes = Json::array();
    for (const Ring& h : roi.holes) holes.push_back(points_json(h));
    return {{"id", roi.id}, {"outer", points_json(roi.outer)}, {"holes", holes}};
}

PolygonROI roi_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("outer")) throw InvalidSpecError("polygon entry needs an 'outer' ring");
    const std::string id = j.contains("id") ? j.at("id").get<std::string>() : std::string("roi");
    std::vector<Ring> holes;
    if (j.contains("holes")) {
        if (!j.at("holes").is_array()) throw InvalidSpecError("'holes' must be an array of rings");
        for (const Json& h : j.at("holes")) holes.push_back(points_from_json(h, "hole ring"));
    }
    return make_roi(id, points_from_json(j.at("outer"), "outer ring"), std::move(holes));
}

Json rois_to_json(std::span<const PolygonROI> rois) {
    Json arr = Json::array();
    for (const PolygonROI& r : rois) arr.push_back(to_json(r));
    return {{"polygons", arr}};
}

std::vector<PolygonROI> rois_from_json(const Json& j) {
    const Json* list = &j;
    if (j.is_object()) {
        if (j.contains("polygons")) {
            list = &j.at("polygons");
        } else {
            return {roi_from_json(j)};
        }
    }
    if (!list->is_array()) throw InvalidSpecError("ROI document must hold a 'polygons' array");
    std::vector<PolygonROI> out;
    for (const Json& p : *list) out.push_back(roi_from_json(p));
    return out;
}

Json to_json(const GridSpec& g) {
    return {{"origin", {g.origin.x, g.origin.y}}, {"cell_size", g.cell_size}, {"columns", g.columns}, {"rows", g.rows}};
}

Json to_json(const PartitionSet& set, const std::string& polygon_id) {
    Json parts = Json::array();
    for (const Partition& p : set.partitions) {
        Json cells = Json::array();
        for (const Cell& c : p.region.cells()) cells.push_back({c.col, c.row});
        Json axes = Json::array();
        for (Axis a : p.feasible_axes.list()) axes.push_back(to_string(a));
        const RegionOutline outline = trace_outline(p.region);
        Json outer = outline.outers.empty() ? Json::array() : points_json(outline.outers.front());
        Json holes = Json::array();
        for (const Ring& h : outline.holes) holes.push_back(points_json(h));
        parts.push_back({{"id", p.id},
                         {"outer", outer},
                         {"holes", holes},
                         {"cells", cells},
                         {"feasible_axes", axes},
                         {"neighbors", p.neighbors}});
    }
    return {{"id", polygon_id}, {"grid", to_json(set.source_region.grid())}, {"partitions", parts}};
}

Json plan_document(const PipelineResult& r) {
    Json connectors = Json::array();
    for (const Segment& s : r.plan.connectors) connectors.push_back({{s.a.x, s.a.y}, {s.b.x, s.b.y}});
    Json plan = {{"id", r.record.polygon},
                 {"order", r.plan.order},
                 {"choices", r.plan.choices},
                 {"total_cost", r.plan.total_cost},
                 {"waypoints", points_json(r.plan.stitched)},
                 {"connectors", connectors}};
    return {{"id", r.record.polygon}, {"pipeline", r.record.pipeline}, {"plans", Json::array({plan})}};
}

std::vector<Polyline> plan_waypoints(const Json& doc) {
    std::vector<Polyline> out;
    auto take = [&](const Json& plan) {
        if (!plan.is_object() || !plan.contains("waypoints")) throw InvalidSpecError("plan entry needs 'waypoints'");
        out.push_back(points_from_json(plan.at("waypoints"), "waypoints"));
    };
    if (doc.is_object() && doc.contains("plans")) {
        for (const Json& p : doc.at("plans")) take(p);
    } else if (doc.is_object()) {
        take(doc);
    } else {
        throw InvalidSpecError("plan document must be an object");
    }
    return out;
}

Json to_json(const PlannerConfig& c) {
    Json footprint = Json::object();
    if (c.footprint.width) footprint["width"] = *c.footprint.width;
    if (c.footprint.altitude) footprint["altitude"] = *c.footprint.altitude;
    if (c.footprint.half_angle) footprint["half_angle"] = *c.footprint.half_angle;
    Json motion = {{"v_max", c.motion.v_max}, {"a_max", c.motion.a_max}};
    motion["j_max"] = std::isinf(c.motion.j_max) ? Json("inf") : Json(c.motion.j_max);
    return {{"footprint", footprint},
            {"coverage", {{"alpha", c.alpha}}},
            {"cost", {{"rho", c.cost.rho}}},
            {"motion", motion},
            {"solver", {{"exact_limit", c.exact_limit}}},
            {"ga",
             {{"lambda_turns", c.ga.lambda_turns},
              {"population", c.ga.population},
              {"generations", c.ga.generations},
              {"elite_fraction", c.ga.elite_fraction},
              {"tournament_size", c.ga.tournament_size},
              {"p_mut_order", c.ga.p_mut_order},
              {"p_mut_choice", c.ga.p_mut_choice},
              {"p_crossover", c.ga.p_crossover}}},
            {"seed", c.seed}};
}

PlannerConfig config_from_json(const Json& j, PlannerConfig c) {
    if (!j.is_object()) throw InvalidSpecError("config must be a JSON object");
    if (j.contains("footprint")) {
        const Json& f = j.at("footprint");
        FootprintSpec spec;
        double v = 0;
        if (f.contains("width")) {
            read_field(f, "width", v);
            spec.width = v;
        }
        if (f.contains("altitude")) {
            read_field(f, "altitude", v);
            spec.altitude = v;
        }
        if (f.contains("half_angle")) {
            read_field(f, "half_angle", v);
            spec.half_angle = v;
        }
        c.footprint = spec;
    }
    if (j.contains("coverage")) read_field(j.at("coverage"), "alpha", c.alpha);
    if (j.contains("cost")) read_field(j.at("cost"), "rho", c.cost.rho);
    if (j.contains("motion")) {
        const Json& m = j.at("motion");
        read_field(m, "v_max", c.motion.v_max);
        read_field(m, "a_max", c.motion.a_max);
        if (m.contains("j_max")) {
            const Json& jm = m.at("j_max");
            if (jm.is_string() && (jm == "inf" || jm == "infinity")) {
                c.motion.j_max = std::numeric_limits<double>::infinity();
            } else if (jm.is_null()) {
                c.motion.j_max = std::numeric_limits<double>::infinity();
            } else {
                read_field(m, "j_max", c.motion.j_max);
            }
        }
    }
    if (j.contains("solver")) read_field(j.at("solver"), "exact_limit", c.exact_limit);
    if (j.contains("ga")) {
        const Json& g = j.at("ga");
        read_field(g, "lambda_turns", c.ga.lambda_turns);
        read_field(g, "population", c.ga.population);
        read_field(g, "generations", c.ga.generations);
        read_field(g, "elite_fraction", c.ga.elite_fraction);
        read_field(g, "tournament_size", c.ga.tournament_size);
        read_field(g, "p_mut_order", c.ga.p_mut_order);
        read_field(g, "p_mut_choice", c.ga.p_mut_choice);
        read_field(g, "p_crossover", c.ga.p_crossover);
    }
    read_field(j, "seed", c.seed);
    c.ga.seed = c.seed;
    validate(c);
    return c;
}

Json read_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InvalidSpecError("cannot open " + path.string());
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InvalidSpecError(path.string() + ": " + e.what());
    }
}

void write_json(const std::filesystem::path& path, const Json& j) { write_text(path, j.dump(2) + "\n"); }

void write_text(const std::filesystem::path& path, const std::string& text) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidSpecError("cannot write " + path.string());
    out << text;
}

}  // namespace swath
