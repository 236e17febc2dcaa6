#include "swath/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace swath {

namespace {

const char* kPalette[] = {"#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462",
                          "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd", "#ccebc5", "#ffed6f"};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

}  // namespace

std::string render_svg(const SvgLayers& L) {
    Box view{0, 0, 1, 1};
    bool have = false;
    auto grow = [&](const Box& b) {
        if (!have) {
            view = b;
            have = true;
            return;
        }
        view.min_x = std::min(view.min_x, b.min_x);
        view.min_y = std::min(view.min_y, b.min_y);
        view.max_x = std::max(view.max_x, b.max_x);
        view.max_y = std::max(view.max_y, b.max_y);
    };
    if (L.roi) grow(bounding_box(L.roi->outer));
    if (L.region && !L.region->empty()) grow(L.region->grid().bounds());
    if (L.path && !L.path->empty()) grow(bounding_box(*L.path));
    const double pad = 0.05 * std::max(view.width(), view.height()) + 1e-9;
    view.min_x -= pad;
    view.min_y -= pad;
    view.max_x += pad;
    view.max_y += pad;
    const double stroke = std::max(view.width(), view.height()) / 400.0;

    // Flip y so north is up.
    auto X = [&](double x) { return num(x); };
    auto Y = [&](double y) { return num(view.max_y + view.min_y - y); };
    auto points = [&](std::span<const Point> pts) {
        std::string s;
        for (const Point& p : pts) s += X(p.x) + "," + Y(p.y) + " ";
        return s;
    };

    std::ostringstream o;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(view.min_x) << ' ' << num(view.min_y) << ' '
      << num(view.width()) << ' ' << num(view.height()) << "\">\n";
    o << "<style>.cell{stroke:#666;stroke-width:" << num(stroke * 0.3)
      << "}.band{fill:#444;fill-opacity:0.15}.cut{stroke:#1f4e9c;stroke-dasharray:" << num(stroke * 4) << ";stroke-width:"
      << num(stroke * 1.5) << "}.roi{fill:none;stroke:#000;stroke-width:" << num(stroke)
      << "}.path{fill:none;stroke:#111;stroke-width:" << num(stroke * 1.2)
      << "}.connector{fill:none;stroke:#d62728;stroke-width:" << num(stroke * 1.5) << "}</style>\n";

    if (L.region) {
        const GridSpec& g = L.region->grid();
        std::vector<int> owner(L.region->size(), -1);
        if (L.partitions) {
            for (const Partition& p : L.partitions->partitions) {
                for (const Cell& c : p.region.cells()) {
                    const auto cells = L.region->cells();
                    const auto it = std::lower_bound(cells.begin(), cells.end(), c);
                    if (it != cells.end() && *it == c) owner[static_cast<std::size_t>(it - cells.begin())] = p.id;
                }
            }
        }
        o << "<g id=\"cells\">\n";
        for (std::size_t i = 0; i < L.region->size(); ++i) {
            const Box b = g.cell_box(L.region->cells()[i]);
            const char* fill = owner[i] < 0 ? "#e8e8e8" : kPalette[static_cast<std::size_t>(owner[i]) % std::size(kPalette)];
            o << "<rect class=\"cell\" x=\"" << X(b.min_x) << "\" y=\"" << Y(b.max_y) << "\" width=\"" << num(b.width())
              << "\" height=\"" << num(b.height()) << "\" fill=\"" << fill << "\"/>\n";
        }
        o << "</g>\n";
    }
    if (L.bands) {
        o << "<g id=\"bands\">\n";
        for (const GapBand& band : *L.bands) {
            const Box& b = band.bounding_box;
            o << "<rect class=\"band\" x=\"" << X(b.min_x) << "\" y=\"" << Y(b.max_y) << "\" width=\"" << num(b.width())
              << "\" height=\"" << num(b.height()) << "\"/>\n";
        }
        o << "</g>\n";
    }
    if (L.roi) {
        o << "<g id=\"roi\">\n<polygon class=\"roi\" points=\"" << points(L.roi->outer) << "\"/>\n";
        for (const Ring& h : L.roi->holes) o << "<polygon class=\"roi\" points=\"" << points(h) << "\"/>\n";
        o << "</g>\n";
    }
    if (L.cuts && L.region) {
        const Box gb = L.region->grid().bounds();
        o << "<g id=\"cuts\">\n";
        for (const CutLine& c : *L.cuts) {
            Point a{gb.min_x, c.coordinate}, b{gb.max_x, c.coordinate};
            if (c.axis == Axis::vertical) a = {c.coordinate, gb.min_y}, b = {c.coordinate, gb.max_y};
            o << "<line class=\"cut\" x1=\"" << X(a.x) << "\" y1=\"" << Y(a.y) << "\" x2=\"" << X(b.x) << "\" y2=\""
              << Y(b.y) << "\"/>\n";
        }
        o << "</g>\n";
    }
    if (L.path && !L.path->empty()) o << "<polyline class=\"path\" points=\"" << points(*L.path) << "\"/>\n";
    if (L.connectors) {
        o << "<g id=\"connectors\">\n";
        for (const Segment& s : *L.connectors) {
            o << "<line class=\"connector\" x1=\"" << X(s.a.x) << "\" y1=\"" << Y(s.a.y) << "\" x2=\"" << X(s.b.x)
              << "\" y2=\"" << Y(s.b.y) << "\"/>\n";
        }
        o << "</g>\n";
    }
    o << "</svg>\n";
    return o.str();
}

std::string render_svg(const PolygonROI& roi, const PipelineResult& r) {
    SvgLayers layers;
    layers.roi = &roi;
    layers.region = &r.region;
    layers.partitions = &r.partitions;
    layers.cuts = &r.cuts;
    layers.bands = &r.bands;
    layers.path = &r.plan.stitched;
    layers.connectors = &r.plan.connectors;
    return render_svg(layers);
}

}  // namespace swath
