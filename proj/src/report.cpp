#include "rieffel/report.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace rieffel {

namespace {

nlohmann::ordered_json to_json(const CheckRecord& c) {
    nlohmann::ordered_json j;
    j["check"] = c.check;
    j["anchor"] = c.anchor;
    j["backend"] = c.backend;
    j["params"] = c.params.is_null() ? nlohmann::ordered_json::object() : c.params;
    j["residual"] = c.residual;
    j["tol"] = c.tol;
    j["pass"] = c.pass;
    if (c.seconds >= 0.0) j["seconds"] = c.seconds;
    return j;
}

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += "\"\"";
        else out += ch;
    }
    out += "\"";
    return out;
}

} // namespace

std::string to_jsonl(const Report& r) {
    std::string out;
    for (const auto& c : r) {
        out += to_json(c).dump();
        out += "\n";
    }
    return out;
}

Report parse_jsonl(const std::string& text) {
    Report r;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto j = nlohmann::ordered_json::parse(line);
        CheckRecord c;
        c.check = j.at("check").get<std::string>();
        c.anchor = j.at("anchor").get<std::string>();
        c.backend = j.at("backend").get<std::string>();
        c.params = j.at("params");
        c.residual = j.at("residual").get<double>();
        c.tol = j.at("tol").get<double>();
        c.pass = j.at("pass").get<bool>();
        if (j.contains("seconds")) c.seconds = j.at("seconds").get<double>();
        r.push_back(std::move(c));
    }
    return r;
}

std::string to_csv(const Report& r) {
    std::string out = "check,anchor,backend,params,residual,tol,pass,seconds\n";
    for (const auto& c : r) {
        std::ostringstream line;
        line << csv_quote(c.check) << ',' << csv_quote(c.anchor) << ','
             << csv_quote(c.backend) << ',' << csv_quote(c.params.dump()) << ',';
        line.precision(17);
        line << c.residual << ',' << c.tol << ',' << (c.pass ? "true" : "false") << ',';
        if (c.seconds >= 0.0) line << c.seconds;
        line << '\n';
        out += line.str();
    }
    return out;
}

std::string to_svg(const Report& r) {
    const int W = 900, H = 420, ML = 70, MR = 20, MT = 30, MB = 50;
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W
        << "\" height=\"" << H << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (r.empty()) {
        svg << "<text x=\"20\" y=\"40\">empty report</text>\n</svg>\n";
        return svg.str();
    }
    double lo = 0.0, hi = -300.0;
    for (const auto& c : r) {
        const double v = std::log10(std::max(c.residual, 1e-18));
        const double t = std::log10(std::max(c.tol, 1e-18));
        lo = std::min({lo, v, t});
        hi = std::max({hi, v, t});
    }
    lo -= 0.5;
    hi += 0.5;
    const auto xmap = [&](size_t i) {
        return ML + double(W - ML - MR) * (r.size() > 1 ? double(i) / double(r.size() - 1) : 0.5);
    };
    const auto ymap = [&](double logv) {
        return MT + (H - MT - MB) * (hi - logv) / (hi - lo);
    };
    // axis with decade ticks
    svg << "<line x1=\"" << ML << "\" y1=\"" << MT << "\" x2=\"" << ML
        << "\" y2=\"" << H - MB << "\" stroke=\"black\"/>\n";
    for (int d = int(std::ceil(lo)); d <= int(std::floor(hi)); ++d) {
        const double y = ymap(d);
        svg << "<line x1=\"" << ML - 4 << "\" y1=\"" << y << "\" x2=\"" << ML
            << "\" y2=\"" << y << "\" stroke=\"black\"/>"
            << "<text x=\"8\" y=\"" << y + 4 << "\" font-size=\"11\">1e" << d
            << "</text>\n";
    }
    static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                   "#ff7f0e", "#8c564b"};
    std::map<std::string, int> color_of;
    // residual markers + tolerance dashes, grouped by check id for color
    std::map<std::string, std::string> polys;
    for (size_t i = 0; i < r.size(); ++i) {
        auto it = color_of.find(r[i].check);
        if (it == color_of.end())
            it = color_of.emplace(r[i].check, int(color_of.size()) % 6).first;
        const double x = xmap(i);
        const double y = ymap(std::log10(std::max(r[i].residual, 1e-18)));
        const double yt = ymap(std::log10(std::max(r[i].tol, 1e-18)));
        std::ostringstream pt;
        pt << x << "," << y << " ";
        polys[r[i].check] += pt.str();
        svg << "<line x1=\"" << x - 6 << "\" y1=\"" << yt << "\" x2=\"" << x + 6
            << "\" y2=\"" << yt << "\" stroke=\"gray\" stroke-dasharray=\"3,2\"/>\n";
    }
    for (const auto& [name, pts] : polys) {
        svg << "<polyline fill=\"none\" stroke=\"" << colors[color_of[name]]
            << "\" points=\"" << pts << "\"/>\n";
    }
    int li = 0;
    for (const auto& [name, col] : color_of) {
        svg << "<text x=\"" << ML + 10 + 150 * (li % 5) << "\" y=\""
            << H - 12 - 16 * (li / 5) << "\" font-size=\"11\" fill=\""
            << colors[col] << "\">" << name << "</text>\n";
        ++li;
    }
    svg << "</svg>\n";
    return svg.str();
}

std::string render(const Report& r, const std::string& format) {
    if (format == "jsonl") return to_jsonl(r);
    if (format == "csv") return to_csv(r);
    if (format == "svg") return to_svg(r);
    throw std::invalid_argument("render: unknown format " + format);
}

int count_failures(const Report& r) {
    return int(std::count_if(r.begin(), r.end(),
                             [](const CheckRecord& c) { return !c.pass; }));
}

} // namespace rieffel
