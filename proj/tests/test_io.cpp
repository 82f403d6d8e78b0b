#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "hypgrow/domain.hpp"
#include "hypgrow/errors.hpp"
#include "hypgrow/io.hpp"
#include "hypgrow/profile.hpp"

using namespace hypgrow;
namespace fs = std::filesystem;

namespace {

fs::path work() {
    const fs::path p = fs::temp_directory_path() / "hypgrow_io_tests";
    fs::create_directories(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spit(const fs::path& p, const std::string& body) {
    std::ofstream out(p, std::ios::binary);
    out << body;
}

int count_occurrences(const std::string& hay, const std::string& needle) {
    int n = 0;
    for (std::size_t at = hay.find(needle); at != std::string::npos;
         at = hay.find(needle, at + needle.size()))
        ++n;
    return n;
}

}  // namespace

TEST_CASE("profile csv round-trips bit for bit") {
    auto d = make_ball(Point::xy(0.0, 0.0), 1.0);
    const ProfileTable tab =
        profile(*d, MetricKind::j, Point::xy(1.0, 0.0), 0.9, 9);
    const fs::path path = work() / "ball_j.csv";
    emit_profile_csv(tab, path.string());

    const std::string text = slurp(path);
    CHECK(text.rfind("t,g,f,env_lo,env_hi\n", 0) == 0);
    CHECK(count_occurrences(text, "\n") == 11);  // header + 10 rows

    // the t = 0.5 row carries log 2 at full precision
    char log2[40];
    std::snprintf(log2, sizeof log2, "%.17g", std::log(2.0));
    CHECK(text.find(std::string("\n0.5,") ) != std::string::npos);
    CHECK(text.find(log2) != std::string::npos);

    const std::vector<CsvRow> rows = read_profile_csv(path.string());
    REQUIRE(rows.size() == tab.rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].t == tab.rows[i].t);
        CHECK(rows[i].g == tab.rows[i].g);
        REQUIRE(rows[i].f.has_value() == tab.rows[i].f.has_value());
        if (rows[i].f) CHECK(*rows[i].f == *tab.rows[i].f);
        REQUIRE(rows[i].env_lo.has_value() == tab.rows[i].env_lo.has_value());
        if (rows[i].env_lo) CHECK(*rows[i].env_lo == *tab.rows[i].env_lo);
        REQUIRE(rows[i].env_hi.has_value() == tab.rows[i].env_hi.has_value());
        if (rows[i].env_hi) CHECK(*rows[i].env_hi == *tab.rows[i].env_hi);
    }
}

TEST_CASE("boundary-distance-only tables leave the metric columns empty") {
    auto d = make_comb(20);
    const ProfileTable tab =
        profile(*d, std::nullopt, Point::xy(1.0, 0.0), 0.95, 96);
    const fs::path path = work() / "comb_g.csv";
    emit_profile_csv(tab, path.string());

    const std::vector<CsvRow> rows = read_profile_csv(path.string());
    REQUIRE(rows.size() == 97);
    int sign_changes = 0;
    int prev = 0;
    for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
        CHECK(!rows[i].f);
        CHECK(!rows[i].env_lo);
        CHECK(!rows[i].env_hi);
        const double inc = rows[i + 1].g - rows[i].g;
        const int sg = (inc > 0.0) - (inc < 0.0);
        if (sg != 0 && prev != 0 && sg != prev) ++sign_changes;
        if (sg != 0) prev = sg;
    }
    CHECK(sign_changes >= 3);
}

TEST_CASE("csv writer rejects an empty table") {
    ProfileTable empty;
    CHECK_THROWS_AS(emit_profile_csv(empty, (work() / "x.csv").string()),
                    PreconditionError);
}

TEST_CASE("csv reader rejects malformed input") {
    const fs::path p = work() / "bad.csv";

    CHECK_THROWS_AS(read_profile_csv((work() / "missing.csv").string()),
                    IoError);

    spit(p, "wrong,header\n0,1,,,\n");
    CHECK_THROWS_AS(read_profile_csv(p.string()), ParseError);

    spit(p, "t,g,f,env_lo,env_hi\n");
    CHECK_THROWS_AS(read_profile_csv(p.string()), ParseError);

    spit(p, "t,g,f,env_lo,env_hi\n0,1,,\n");
    CHECK_THROWS_AS(read_profile_csv(p.string()), ParseError);

    spit(p, "t,g,f,env_lo,env_hi\n0,oops,,,\n");
    CHECK_THROWS_AS(read_profile_csv(p.string()), ParseError);

    spit(p, "t,g,f,env_lo,env_hi\n,1,,,\n");
    CHECK_THROWS_AS(read_profile_csv(p.string()), ParseError);

    spit(p, "t,g,f,env_lo,env_hi\n0,1,0.5,,\n");
    CHECK(read_profile_csv(p.string()).size() == 1);
}

TEST_CASE("svg plot is deterministic and counts its curves") {
    auto d = make_comb(20);
    const fs::path gcsv = work() / "comb_plot.csv";
    emit_profile_csv(profile(*d, std::nullopt, Point::xy(1.0, 0.0), 0.95, 96),
                     gcsv.string());

    const fs::path svg1 = work() / "comb1.svg";
    const fs::path svg2 = work() / "comb2.svg";
    emit_svg_plot(gcsv.string(), svg1.string());
    emit_svg_plot(gcsv.string(), svg2.string());
    const std::string body = slurp(svg1);
    CHECK(body == slurp(svg2));
    CHECK(count_occurrences(body, "<polyline") == 1);
    CHECK(body.find(">t</text>") != std::string::npos);
    CHECK(body.find("f_m(t)") != std::string::npos);

    auto ball = make_ball(Point::xy(0.0, 0.0), 1.0);
    const fs::path jcsv = work() / "ball_plot.csv";
    emit_profile_csv(profile(*ball, MetricKind::j, Point::xy(1.0, 0.0), 0.9, 16),
                     jcsv.string());
    const fs::path svg3 = work() / "ball.svg";
    emit_svg_plot(jcsv.string(), svg3.string());
    CHECK(count_occurrences(slurp(svg3), "<polyline") == 3);

    const fs::path bad = work() / "bad_plot.csv";
    spit(bad, "nope\n");
    CHECK_THROWS_AS(emit_svg_plot(bad.string(), (work() / "x.svg").string()),
                    ParseError);
}

TEST_CASE("atomic write replaces content and leaves no temp file") {
    const fs::path p = work() / "atomic.txt";
    write_file_atomic(p.string(), "first");
    CHECK(slurp(p) == "first");
    write_file_atomic(p.string(), "second");
    CHECK(slurp(p) == "second");
    CHECK(!fs::exists(p.string() + ".tmp"));
}
