#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "swath/bench.hpp"
#include "swath/errors.hpp"

namespace swath {

double overhead(double m, double m_min) {
    if (!(m_min > 0.0)) throw ContractError("overhead needs a positive best value");
    if (m < m_min) throw ContractError("overhead value is below the best value");
    return (m - m_min) / m_min;
}

OverheadTable aggregate(std::span<const BenchmarkRecord> records) {
    std::vector<std::string> polygons, pipelines;
    std::map<std::pair<std::string, std::string>, const BenchmarkRecord*> cell;
    for (const BenchmarkRecord& r : records) {
        if (std::find(polygons.begin(), polygons.end(), r.polygon) == polygons.end()) polygons.push_back(r.polygon);
        if (std::find(pipelines.begin(), pipelines.end(), r.pipeline) == pipelines.end()) pipelines.push_back(r.pipeline);
        if (!cell.emplace(std::pair{r.polygon, r.pipeline}, &r).second)
            throw IncompleteMatrixError("duplicate record for " + r.polygon + " / " + r.pipeline);
    }
    if (cell.size() != polygons.size() * pipelines.size())
        throw IncompleteMatrixError("records do not cover every (polygon, pipeline) pair");

    OverheadTable table;
    const std::size_t np = pipelines.size();
    std::vector<double> sum_t(np, 0), sum_l(np, 0), sum_k(np, 0);
    std::vector<int> cnt_t(np, 0), cnt_l(np, 0), cnt_k(np, 0), wins(np, 0), top3(np, 0);

    for (const std::string& poly : polygons) {
        std::vector<const BenchmarkRecord*> row;
        for (const std::string& pipe : pipelines) row.push_back(cell.at({poly, pipe}));
        double best_t = row[0]->time, best_l = row[0]->length, best_k = row[0]->turns;
        for (const BenchmarkRecord* r : row) {
            best_t = std::min(best_t, r->time);
            best_l = std::min(best_l, r->length);
            best_k = std::min(best_k, static_cast<double>(r->turns));
        }
        for (std::size_t p = 0; p < np; ++p) {
            OverheadEntry e{poly, pipelines[p], std::nullopt, std::nullopt, std::nullopt};
            if (best_t > 0) {
                e.time = overhead(row[p]->time, best_t);
                sum_t[p] += *e.time;
                ++cnt_t[p];
            }
            if (best_l > 0) {
                e.length = overhead(row[p]->length, best_l);
                sum_l[p] += *e.length;
                ++cnt_l[p];
            }
            if (best_k > 0) {
                e.turns = overhead(row[p]->turns, best_k);
                sum_k[p] += *e.turns;
                ++cnt_k[p];
            }
            table.entries.push_back(std::move(e));

            const auto better = std::count_if(row.begin(), row.end(), [&](const BenchmarkRecord* o) { return o->time < row[p]->time; });
            if (better == 0) ++wins[p];
            if (better < 3) ++top3[p];
        }
        table.skipped += (best_t > 0 ? 0 : 1) + (best_l > 0 ? 0 : 1) + (best_k > 0 ? 0 : 1);
    }

    for (std::size_t p = 0; p < np; ++p) {
        auto mean = [](double s, int n) { return n ? s / n : 0.0; };
        table.rows.push_back({pipelines[p], mean(sum_t[p], cnt_t[p]), mean(sum_l[p], cnt_l[p]),
                              mean(sum_k[p], cnt_k[p]), wins[p], top3[p]});
    }
    std::stable_sort(table.rows.begin(), table.rows.end(),
                     [](const PipelineSummary& a, const PipelineSummary& b) { return a.mu_time < b.mu_time; });
    return table;
}

std::string format_number(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, res.ptr);
}

namespace {

constexpr const char* kRecordHeader = "polygon,pipeline,length,turns,time,partitions,plan_ms,coverage,valid,note";

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cur += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(std::move(cur));
    return fields;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

double parse_double(const std::string& s) {
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size()) throw InvalidSpecError("bad number in CSV: '" + s + "'");
    return v;
}

int parse_int(const std::string& s) {
    int v = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size()) throw InvalidSpecError("bad integer in CSV: '" + s + "'");
    return v;
}

std::string percent(double ratio) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f%%", 100.0 * ratio);
    return buf;
}

}  // namespace

void write_records_csv(std::ostream& out, std::span<const BenchmarkRecord> records) {
    out << kRecordHeader << '\n';
    for (const BenchmarkRecord& r : records) {
        out << csv_field(r.polygon) << ',' << csv_field(r.pipeline) << ',' << format_number(r.length) << ','
            << r.turns << ',' << format_number(r.time) << ',' << r.partitions << ',' << format_number(r.plan_ms) << ','
            << format_number(r.coverage) << ',' << (r.valid ? "true" : "false") << ',' << csv_field(r.note) << '\n';
    }
}

std::vector<BenchmarkRecord> read_records_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != kRecordHeader) throw InvalidSpecError("unexpected metrics CSV header");
    std::vector<BenchmarkRecord> out;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto f = split_csv_line(line);
        if (f.size() != 10) throw InvalidSpecError("metrics CSV row has " + std::to_string(f.size()) + " fields");
        BenchmarkRecord r;
        r.polygon = f[0];
        r.pipeline = f[1];
        r.length = parse_double(f[2]);
        r.turns = parse_int(f[3]);
        r.time = parse_double(f[4]);
        r.partitions = parse_int(f[5]);
        r.plan_ms = parse_double(f[6]);
        r.coverage = parse_double(f[7]);
        if (f[8] != "true" && f[8] != "false") throw InvalidSpecError("bad validity flag in CSV: '" + f[8] + "'");
        r.valid = f[8] == "true";
        r.note = f[9];
        out.push_back(std::move(r));
    }
    return out;
}

void write_summary_csv(std::ostream& out, const OverheadTable& table) {
    out << "pipeline,mu_time,mu_length,mu_turns,wins,top3\n";
    for (const PipelineSummary& r : table.rows) {
        out << csv_field(r.pipeline) << ',' << format_number(r.mu_time) << ',' << format_number(r.mu_length) << ','
            << format_number(r.mu_turns) << ',' << r.wins << ',' << r.top3 << '\n';
    }
}

std::string format_summary(const OverheadTable& table) {
    std::ostringstream s;
    char line[160];
    std::snprintf(line, sizeof line, "%-10s %10s %10s %10s %6s %6s\n", "pipeline", "mu_T", "mu_L", "mu_K", "Win", "Top3");
    s << line;
    for (const PipelineSummary& r : table.rows) {
        std::snprintf(line, sizeof line, "%-10s %10s %10s %10s %6d %6d\n", r.pipeline.c_str(), percent(r.mu_time).c_str(),
                      percent(r.mu_length).c_str(), percent(r.mu_turns).c_str(), r.wins, r.top3);
        s << line;
    }
    if (table.skipped > 0) s << table.skipped << " (polygon, metric) cells skipped: best value is zero\n";
    return s.str();
}

}  // namespace swath
