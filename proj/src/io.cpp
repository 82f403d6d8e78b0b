#include "hypgrow/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "hypgrow/errors.hpp"

namespace hypgrow {

namespace {

const char kHeader[] = "t,g,f,env_lo,env_hi";

std::string num17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string num6(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::optional<double> parse_field(const std::string& field, int line,
                                  bool required) {
    if (field.empty()) {
        if (required)
            throw ParseError("csv line " + std::to_string(line) +
                             ": required field is empty");
        return std::nullopt;
    }
    double v = 0.0;
    const char* first = field.data();
    const char* last = first + field.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last)
        throw ParseError("csv line " + std::to_string(line) +
                         ": bad number '" + field + "'");
    return v;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

void write_file_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    std::FILE* out = std::fopen(tmp.c_str(), "wb");
    if (!out) throw IoError("cannot open " + tmp + " for writing");
    const bool wrote =
        std::fwrite(content.data(), 1, content.size(), out) == content.size();
    const bool closed = std::fclose(out) == 0;
    if (!wrote || !closed) {
        std::remove(tmp.c_str());
        throw IoError("failed writing " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw IoError("cannot move " + tmp + " to " + path);
    }
}

void emit_profile_csv(const ProfileTable& t, const std::string& path) {
    if (t.rows.empty())
        throw PreconditionError("emit_profile_csv: empty table");
    std::string body = kHeader;
    body += '\n';
    for (const ProfileRow& row : t.rows) {
        body += num17(row.t);
        body += ',';
        body += num17(row.g);
        body += ',';
        if (row.f) body += num17(*row.f);
        body += ',';
        if (row.env_lo) body += num17(*row.env_lo);
        body += ',';
        if (row.env_hi) body += num17(*row.env_hi);
        body += '\n';
    }
    write_file_atomic(path, body);
}

std::vector<CsvRow> read_profile_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::string line;
    if (!std::getline(in, line)) throw ParseError("csv: empty file");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kHeader)
        throw ParseError("csv: expected header '" + std::string(kHeader) +
                         "', got '" + line + "'");
    std::vector<CsvRow> rows;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() && in.eof()) break;
        const std::vector<std::string> f = split_fields(line);
        if (f.size() != 5)
            throw ParseError("csv line " + std::to_string(lineno) + ": got " +
                             std::to_string(f.size()) + " fields, want 5");
        CsvRow row;
        row.t = *parse_field(f[0], lineno, true);
        row.g = *parse_field(f[1], lineno, true);
        row.f = parse_field(f[2], lineno, false);
        row.env_lo = parse_field(f[3], lineno, false);
        row.env_hi = parse_field(f[4], lineno, false);
        rows.push_back(row);
    }
    if (rows.empty()) throw ParseError("csv: no data rows");
    return rows;
}

namespace {

// Fixed canvas; margins leave room for tick labels and the axis names.
constexpr double kW = 640.0, kH = 480.0;
constexpr double kL = 70.0, kR = 24.0, kT = 24.0, kB = 56.0;

struct Scale {
    double lo = 0.0, hi = 1.0, px0 = 0.0, px1 = 1.0;

    double operator()(double v) const {
        return px0 + (v - lo) / (hi - lo) * (px1 - px0);
    }
};

std::string polyline(const std::vector<std::pair<double, double>>& pts,
                     const Scale& sx, const Scale& sy, const char* style) {
    std::string out = "  <polyline fill=\"none\" ";
    out += style;
    out += " points=\"";
    bool first = true;
    for (const auto& [x, y] : pts) {
        if (!first) out += ' ';
        first = false;
        out += num6(sx(x));
        out += ',';
        out += num6(sy(y));
    }
    out += "\"/>\n";
    return out;
}

}  // namespace

void emit_svg_plot(const std::string& in_csv, const std::string& out_svg) {
    const std::vector<CsvRow> rows = read_profile_csv(in_csv);

    const bool has_f =
        std::any_of(rows.begin(), rows.end(),
                    [](const CsvRow& r) { return r.f.has_value(); });
    const bool has_env =
        std::any_of(rows.begin(), rows.end(), [](const CsvRow& r) {
            return r.env_lo.has_value() || r.env_hi.has_value();
        });

    std::vector<std::pair<double, double>> main_pts, lo_pts, hi_pts;
    for (const CsvRow& r : rows) {
        if (has_f) {
            if (r.f) main_pts.emplace_back(r.t, *r.f);
        } else {
            main_pts.emplace_back(r.t, r.g);
        }
        if (r.env_lo) lo_pts.emplace_back(r.t, *r.env_lo);
        if (r.env_hi) hi_pts.emplace_back(r.t, *r.env_hi);
    }
    if (main_pts.empty()) throw ParseError("csv: no plottable values");

    double xlo = rows.front().t, xhi = rows.back().t;
    double ylo = main_pts.front().second, yhi = ylo;
    auto widen = [&](const std::vector<std::pair<double, double>>& pts) {
        for (const auto& [x, y] : pts) {
            xlo = std::min(xlo, x);
            xhi = std::max(xhi, x);
            ylo = std::min(ylo, y);
            yhi = std::max(yhi, y);
        }
    };
    widen(main_pts);
    if (has_env) {
        widen(lo_pts);
        widen(hi_pts);
    }
    if (xhi - xlo < 1e-300) xhi = xlo + 1.0;
    if (yhi - ylo < 1e-12) {
        ylo -= 0.5;
        yhi += 0.5;
    }
    const double ypad = 0.05 * (yhi - ylo);
    ylo -= ypad;
    yhi += ypad;

    const Scale sx{xlo, xhi, kL, kW - kR};
    const Scale sy{ylo, yhi, kH - kB, kT};  // y grows upward

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" "
           "height=\"480\" viewBox=\"0 0 640 480\">\n";
    svg += "  <rect width=\"640\" height=\"480\" fill=\"white\"/>\n";

    // axes
    svg += "  <line x1=\"" + num6(kL) + "\" y1=\"" + num6(kH - kB) +
           "\" x2=\"" + num6(kW - kR) + "\" y2=\"" + num6(kH - kB) +
           "\" stroke=\"black\"/>\n";
    svg += "  <line x1=\"" + num6(kL) + "\" y1=\"" + num6(kT) + "\" x2=\"" +
           num6(kL) + "\" y2=\"" + num6(kH - kB) + "\" stroke=\"black\"/>\n";

    // ticks, 5 per axis
    for (int i = 0; i <= 4; ++i) {
        const double xv = xlo + (xhi - xlo) * i / 4.0;
        const double yv = ylo + (yhi - ylo) * i / 4.0;
        const double xp = sx(xv);
        const double yp = sy(yv);
        svg += "  <line x1=\"" + num6(xp) + "\" y1=\"" + num6(kH - kB) +
               "\" x2=\"" + num6(xp) + "\" y2=\"" + num6(kH - kB + 5.0) +
               "\" stroke=\"black\"/>\n";
        svg += "  <text x=\"" + num6(xp) + "\" y=\"" + num6(kH - kB + 18.0) +
               "\" font-size=\"11\" text-anchor=\"middle\">" + num6(xv) +
               "</text>\n";
        svg += "  <line x1=\"" + num6(kL - 5.0) + "\" y1=\"" + num6(yp) +
               "\" x2=\"" + num6(kL) + "\" y2=\"" + num6(yp) +
               "\" stroke=\"black\"/>\n";
        svg += "  <text x=\"" + num6(kL - 8.0) + "\" y=\"" + num6(yp + 4.0) +
               "\" font-size=\"11\" text-anchor=\"end\">" + num6(yv) +
               "</text>\n";
    }

    // axis names
    svg += "  <text x=\"" + num6((kL + kW - kR) / 2.0) + "\" y=\"" +
           num6(kH - 12.0) + "\" font-size=\"13\" text-anchor=\"middle\">t"
           "</text>\n";
    svg += "  <text x=\"16\" y=\"" + num6((kT + kH - kB) / 2.0) +
           "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 "
           "16 " +
           num6((kT + kH - kB) / 2.0) + ")\">f_m(t)</text>\n";

    if (has_env) {
        svg += polyline(lo_pts, sx, sy,
                        "stroke=\"#2b8a3e\" stroke-width=\"1.2\" "
                        "stroke-dasharray=\"5 3\"");
        svg += polyline(hi_pts, sx, sy,
                        "stroke=\"#c92a2a\" stroke-width=\"1.2\" "
                        "stroke-dasharray=\"5 3\"");
    }
    svg += polyline(main_pts, sx, sy,
                    "stroke=\"#1c64b4\" stroke-width=\"1.6\"");

    svg += "</svg>\n";
    write_file_atomic(out_svg, svg);
}

}  // namespace hypgrow
