#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hypgrow/errors.hpp"
#include "hypgrow/io.hpp"
#include "hypgrow/metrics.hpp"
#include "hypgrow/profile.hpp"
#include "hypgrow/verify.hpp"

namespace {

using namespace hypgrow;

// Exit codes: 0 done, 1 computation failed (verify: at least one fail),
// 2 usage, 3 missing file, 4 I/O, 5 parse.
enum { kOk = 0, kFailed = 1, kUsage = 2, kNoFile = 3, kIo = 4, kParse = 5 };

constexpr MetricKind kAllMetrics[] = {
    MetricKind::j,           MetricKind::k,         MetricKind::s,
    MetricKind::sigma,       MetricKind::sigma_tilde, MetricKind::c,
    MetricKind::alpha,       MetricKind::delta,     MetricKind::v,
    MetricKind::tau,         MetricKind::tau_tilde, MetricKind::rho_ball,
    MetricKind::rho_halfspace,
};

std::string metric_tag_list() {
    std::string out;
    for (MetricKind m : kAllMetrics) {
        if (!out.empty()) out += ", ";
        out += metric_name(m);
    }
    return out;
}

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

MetricKind metric_or_usage(const std::string& tag) {
    try {
        return metric_from_name(tag);
    } catch (const ParseError&) {
        throw UsageError("unknown metric '" + tag +
                         "'; valid metrics: " + metric_tag_list());
    }
}

Point parse_point(const std::string& text, const char* flag) {
    std::vector<double> coords;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::string field =
            text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        double v = 0.0;
        const char* first = field.data();
        const char* last = first + field.size();
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc{} || ptr != last || field.empty())
            throw UsageError(std::string(flag) + ": bad coordinate '" + field +
                             "' in '" + text + "'");
        coords.push_back(v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    Point p(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) p[i] = coords[i];
    return p;
}

std::string read_file_checked(const std::string& path) {
    if (!std::filesystem::exists(path))
        throw std::filesystem::filesystem_error(
            "no such file", path,
            std::make_error_code(std::errc::no_such_file_or_directory));
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

DomainPtr load_domain(const std::string& path) {
    return parse_domain(read_file_checked(path));
}

void check_dim(const Point& p, const Domain& d, const char* flag) {
    if (static_cast<int>(p.dim()) != d.dim())
        throw UsageError(std::string(flag) + ": point has " +
                         std::to_string(p.dim()) + " coordinates, domain '" +
                         d.tag() + "' needs " + std::to_string(d.dim()));
}

Json boundary_point_json(const BoundaryPoint& b) {
    if (b.at_infinity) return Json{{"at_infinity", true}};
    Json coords = Json::array();
    for (std::size_t i = 0; i < b.p.dim(); ++i) coords.push_back(b.p[i]);
    return coords;
}

int cmd_dist(const std::string& domain_file, const std::string& metric,
             const std::string& from, const std::string& to) {
    DomainPtr d = load_domain(domain_file);
    const MetricKind m = metric_or_usage(metric);
    const Point u = parse_point(from, "--from");
    const Point w = parse_point(to, "--to");
    check_dim(u, *d, "--from");
    check_dim(w, *d, "--to");

    const MetricResult r = evaluate(*d, m, u, w);
    Json out;
    out["metric"] = metric_name(m);
    out["value"] = r.value;
    out["lower"] = r.lower;
    out["upper"] = r.upper;
    out["method"] = r.method;
    if (r.witness_a) out["witness_a"] = boundary_point_json(*r.witness_a);
    if (r.witness_b) out["witness_b"] = boundary_point_json(*r.witness_b);
    std::cout << out.dump(2) << "\n";
    return kOk;
}

int cmd_profile(const std::string& domain_file, const std::string& metric,
                const std::string& direction, double t_max, int steps,
                const std::string& out) {
    DomainPtr d = load_domain(domain_file);
    std::optional<MetricKind> m;
    if (!metric.empty()) m = metric_or_usage(metric);
    const Point dir = parse_point(direction, "--direction");
    check_dim(dir, *d, "--direction");

    const ProfileTable table = profile(*d, m, dir, t_max, steps);
    emit_profile_csv(table, out);
    std::cout << out << ": " << table.rows.size() << " rows\n";
    return kOk;
}

int cmd_verify(const std::vector<std::string>& selection, double tol_scale,
               const std::string& report_out) {
    const SuiteReport rep = run_suite(selection, tol_scale);
    std::cout << report_text(rep);
    if (!report_out.empty())
        write_file_atomic(report_out, report_json(rep).dump(2) + "\n");
    return rep.failed() > 0 ? kFailed : kOk;
}

int cmd_plot(const std::string& in_csv, const std::string& out_svg) {
    if (!std::filesystem::exists(in_csv))
        throw std::filesystem::filesystem_error(
            "no such file", in_csv,
            std::make_error_code(std::errc::no_such_file_or_directory));
    emit_svg_plot(in_csv, out_svg);
    std::cout << out_svg << "\n";
    return kOk;
}

int check_thread_cap() {
    const char* env = std::getenv("HYPGROW_THREADS");
    if (!env) return kOk;
    const std::string text(env);
    int v = 0;
    const char* first = text.data();
    const char* last = first + text.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last || v < 0) {
        std::cerr << "HYPGROW_THREADS must be a non-negative integer (0 = "
                     "auto), got '"
                  << text << "'\n";
        return kUsage;
    }
    // evaluation is sequential, so any cap is honored as-is
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "hyperbolic-type distances and ray growth profiles in starlike "
        "plane domains"};
    app.require_subcommand(1);

    std::string domain_file, metric, from, to, direction, out, in_csv;
    std::string report_out;
    double t_max = 0.0, tol_scale = 1.0;
    int steps = 64;
    std::vector<std::string> selection;

    CLI::App* dist = app.add_subcommand("dist", "evaluate one distance");
    dist->add_option("--domain", domain_file, "domain spec file (json)")
        ->required();
    dist->add_option("--metric", metric, "metric tag")->required();
    dist->add_option("--from", from, "first point, comma separated")
        ->required();
    dist->add_option("--to", to, "second point, comma separated")->required();

    CLI::App* prof = app.add_subcommand("profile", "tabulate growth along a ray");
    prof->add_option("--domain", domain_file, "domain spec file (json)")
        ->required();
    prof->add_option("--metric", metric,
                     "metric tag; omit for the boundary distance only");
    prof->add_option("--direction", direction, "ray direction, comma separated")
        ->required();
    prof->add_option("--t-max", t_max, "largest ray parameter")->required();
    prof->add_option("--steps", steps, "grid steps (default 64)");
    prof->add_option("--out", out, "output csv path")->required();

    CLI::App* verify = app.add_subcommand("verify", "run the claim suite");
    verify->add_option("--select", selection,
                       "claim id prefixes to run (default: all)");
    verify->add_option("--tol-scale", tol_scale,
                       "multiply every tolerance (default 1)");
    verify->add_option("--report-out", report_out, "also write a json report");

    CLI::App* plot = app.add_subcommand("plot", "render a profile csv as svg");
    plot->add_option("--in", in_csv, "profile csv path")->required();
    plot->add_option("--out", out, "output svg path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    }

    if (const int rc = check_thread_cap(); rc != kOk) return rc;

    try {
        if (dist->parsed()) return cmd_dist(domain_file, metric, from, to);
        if (prof->parsed())
            return cmd_profile(domain_file, metric, direction, t_max, steps,
                               out);
        if (verify->parsed())
            return cmd_verify(selection, tol_scale, report_out);
        if (plot->parsed()) return cmd_plot(in_csv, out);
    } catch (const UsageError& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << e.what() << "\n";
        return kNoFile;
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return kParse;
    } catch (const IoError& e) {
        std::cerr << e.what() << "\n";
        return kIo;
    } catch (const PreconditionError& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return kFailed;
    }
    return kUsage;
}
