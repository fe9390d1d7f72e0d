#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "selfemb/errors.hpp"
#include "selfemb/experiments.hpp"

namespace selfemb::cli {

namespace {

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string cell(const json& value) {
    if (value.is_string()) return csv_escape(value.get<std::string>());
    if (value.is_boolean()) return value.get<bool>() ? "true" : "false";
    if (value.is_number_float()) return format_double(value.get<double>());
    return value.dump();
}

}  // namespace

std::string format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", value);
    return buf;
}

bool RunReport::all_pass() const {
    return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.pass; });
}

json RunReport::to_json() const {
    json verdict_list = json::array();
    for (const Verdict& v : verdicts) {
        verdict_list.push_back(json{{"name", v.name}, {"pass", v.pass}, {"detail", v.detail}});
    }
    return json{{"config", config},
                {"rows", rows},
                {"summary", summary},
                {"verdicts", verdict_list},
                {"pass", all_pass()}};
}

std::string RunReport::to_csv() const {
    std::string out;
    if (rows.empty()) return out;
    bool first = true;
    for (const auto& [key, value] : rows.front().items()) {
        (void)value;
        if (!first) out += ',';
        first = false;
        out += csv_escape(key);
    }
    out += '\n';
    for (const json& row : rows) {
        first = true;
        for (const auto& [key, value] : row.items()) {
            (void)key;
            if (!first) out += ',';
            first = false;
            out += cell(value);
        }
        out += '\n';
    }
    return out;
}

std::string RunReport::to_svg() const {
    if (svg_x.empty() || svg_y.empty()) {
        throw std::logic_error("RunReport::to_svg: report has no chart series");
    }
    std::vector<std::pair<double, double>> points;
    for (const json& row : rows) {
        if (!row.contains(svg_x) || !row.contains(svg_y)) continue;
        if (!row[svg_x].is_number() || !row[svg_y].is_number()) continue;
        points.emplace_back(row[svg_x].get<double>(), row[svg_y].get<double>());
    }
    if (points.empty()) {
        throw std::logic_error("RunReport::to_svg: no numeric points for the chart");
    }
    double xmin = points[0].first, xmax = points[0].first;
    double ymin = points[0].second, ymax = points[0].second;
    for (const auto& [x, y] : points) {
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
    }
    if (xmax == xmin) xmax = xmin + 1.0;
    if (ymax == ymin) ymax = ymin + 1.0;

    const double w = 640.0, h = 400.0, margin = 50.0;
    auto px = [&](double x) { return margin + (x - xmin) / (xmax - xmin) * (w - 2 * margin); };
    auto py = [&](double y) { return h - margin - (y - ymin) / (ymax - ymin) * (h - 2 * margin); };
    char buf[160];

    std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 640 400\">\n";
    std::snprintf(buf, sizeof(buf),
                  "  <line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" stroke=\"black\"/>\n",
                  margin, h - margin, w - margin, h - margin);
    svg += buf;
    std::snprintf(buf, sizeof(buf),
                  "  <line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" stroke=\"black\"/>\n",
                  margin, margin, margin, h - margin);
    svg += buf;
    svg += "  <polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\" points=\"";
    for (const auto& [x, y] : points) {
        std::snprintf(buf, sizeof(buf), "%.3f,%.3f ", px(x), py(y));
        svg += buf;
    }
    svg += "\"/>\n";
    std::snprintf(buf, sizeof(buf),
                  "  <text x=\"%.1f\" y=\"%.1f\" font-size=\"12\">%s = [%s, %s]</text>\n", margin,
                  h - margin + 30, svg_x.c_str(), format_double(xmin).c_str(),
                  format_double(xmax).c_str());
    svg += buf;
    std::snprintf(buf, sizeof(buf),
                  "  <text x=\"%.1f\" y=\"%.1f\" font-size=\"12\">%s = [%s, %s]</text>\n", margin,
                  margin - 15, svg_y.c_str(), format_double(ymin).c_str(),
                  format_double(ymax).c_str());
    svg += buf;
    svg += "</svg>\n";
    return svg;
}

std::vector<std::string> write_outputs(const RunReport& report, const ExperimentConfig& config) {
    if (config.out.empty()) {
        throw config_error("no output path configured (--out)");
    }
    std::vector<std::string> written;
    for (const std::string& fmt : config.formats) {
        std::string path = config.out + "." + fmt;
        std::string payload;
        if (fmt == "json") {
            payload = report.to_json().dump(2);
            payload += '\n';
        } else if (fmt == "csv") {
            payload = report.to_csv();
        } else if (fmt == "svg") {
            if (report.svg_x.empty()) continue;  // experiment has no numeric sweep
            payload = report.to_svg();
        } else {
            throw config_error("unknown output format '" + fmt + "'");
        }
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
        out << payload;
        written.push_back(std::move(path));
    }
    return written;
}

}  // namespace selfemb::cli
