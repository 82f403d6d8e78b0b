#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "hypgrow/sup_solver.hpp"

using namespace hypgrow;

namespace {

Point pt(double x, double y) { return Point{{x, y}}; }

// Quotient |q - num| / |q - den|, with a prescribed value at infinity markers.
BoundaryFunctional quotient(Point num, Point den, double at_inf) {
    return [num, den, at_inf](const BoundaryPoint& q) {
        if (q.at_infinity) return at_inf;
        return dist(q.p, num) / dist(q.p, den);
    };
}

BoundaryPairFunctional seittenranta_form(Point u, Point w) {
    const double uw = dist(u, w);
    return [u, w, uw](const BoundaryPoint& a, const BoundaryPoint& b) {
        if (a.at_infinity && b.at_infinity) return 0.0;
        if (a.at_infinity) return std::log1p(uw / dist(b.p, w));
        if (b.at_infinity) return std::log1p(uw / dist(a.p, u));
        return std::log1p(dist(a.p, b.p) * uw / (dist(a.p, u) * dist(b.p, w)));
    };
}

std::vector<DomainPtr> catalog() {
    return {
        make_ball(pt(0, 0), 1.0),
        make_half_space(-1.0),
        make_g1(pt(1, 0)),
        make_g2(pt(1, 0)),
        make_g3(pt(1, 0)),
        make_alpha_sharp(pt(1, 0)),
        make_quadrant(pt(1, 1)),
        make_circular_notched(),
        make_polynomial(2),
        make_comb(20),
    };
}

}  // namespace

TEST_CASE("ball distance quotients locate antipodal and nearest witnesses") {
    auto d = make_ball(pt(0, 0), 1.0);
    const Point u = pt(0, 0);
    const Point w = pt(0.5, 0);

    SupResult far = sup_boundary(*d, quotient(w, u, 1.0));
    CHECK(std::abs(far.value - 1.5) <= 1e-12);
    CHECK(!far.witness_a.at_infinity);
    CHECK(std::abs(far.witness_a.p[0] - (-1.0)) <= 1e-5);
    CHECK(std::abs(far.witness_a.p[1]) <= 1e-5);
    CHECK(!far.witness_b.has_value());
    CHECK(far.evaluations > 0);

    SupResult close = sup_boundary(*d, quotient(u, w, 1.0));
    CHECK(std::abs(close.value - 2.0) <= 1e-12);
    CHECK(std::abs(close.witness_a.p[0] - 1.0) <= 1e-5);
    CHECK(std::abs(close.witness_a.p[1]) <= 1e-5);

    SupResult zero = sup_boundary(*d, [](const BoundaryPoint&) { return 0.0; });
    CHECK(zero.value == 0.0);
    CHECK(zero.enclosure_radius == 0.0);
}

TEST_CASE("brute force agrees with the refined solver on the ball") {
    auto d = make_ball(pt(0, 0), 1.0);
    auto F = quotient(pt(0.5, 0), pt(0, 0), 1.0);

    SupResult solved = sup_boundary(*d, F);
    SupResult dense = brute_force_sup(*d, F, 100000);
    CHECK(solved.value >= dense.value - 1e-10);
    CHECK(std::abs(solved.value - dense.value) <= 1e-6);

    // A maximizer off the cardinal directions, to exercise nested budgets.
    auto G = quotient(pt(0.3, 0.4), pt(0, 0), 1.0);
    SupResult coarse = brute_force_sup(*d, G, 1000);
    SupResult fine = brute_force_sup(*d, G, 10000);
    CHECK(fine.value >= coarse.value);
    CHECK(std::abs(fine.value - 1.5) <= 1e-6);
}

TEST_CASE("separable pair sup splits into two apex witnesses") {
    auto d = make_alpha_sharp(pt(1, 0));
    const Point u = pt(0, 0);
    const Point w = pt(0.5, 0);

    BoundaryFunctional Fa = [&](const BoundaryPoint& q) {
        if (q.at_infinity) return 0.0;
        return std::log(dist(q.p, w) / dist(q.p, u));
    };
    BoundaryFunctional Fb = [&](const BoundaryPoint& q) {
        if (q.at_infinity) return 0.0;
        return std::log(dist(q.p, u) / dist(q.p, w));
    };

    SupResult r = sup_boundary_pairs_separable(*d, Fa, Fb);
    CHECK(std::abs(r.value - std::log(3.0)) <= 1e-12);
    REQUIRE(r.witness_b.has_value());
    CHECK(std::abs(r.witness_a.p[0] - (-1.0)) <= 1e-9);
    CHECK(std::abs(r.witness_a.p[1]) <= 1e-9);
    CHECK(std::abs((*r.witness_b).p[0] - 1.0) <= 1e-9);
    CHECK(std::abs((*r.witness_b).p[1]) <= 1e-9);

    // The general pair solver reaches the same value on the same objective.
    BoundaryPairFunctional joint = [&](const BoundaryPoint& a, const BoundaryPoint& b) {
        return Fa(a) + Fb(b);
    };
    SupResult g = sup_boundary_pairs(*d, joint);
    CHECK(std::abs(g.value - std::log(3.0)) <= 1e-9);
}

TEST_CASE("pair sup finds the ordered witness pair on the cut sector domain") {
    auto d = make_g3(pt(1, 0));
    const Point u = pt(0, 0);
    const Point w = pt(0.5, 0);
    auto F = seittenranta_form(u, w);

    SupResult r = sup_boundary_pairs(*d, F);
    CHECK(std::abs(r.value - std::log(3.0)) <= 1e-9);
    REQUIRE(r.witness_b.has_value());
    CHECK(!r.witness_a.at_infinity);
    CHECK(!(*r.witness_b).at_infinity);
    CHECK(std::abs(r.witness_a.p[0] - (-1.0)) <= 1e-6);
    CHECK(std::abs(r.witness_a.p[1]) <= 1e-6);
    CHECK(std::abs((*r.witness_b).p[0] - 1.0) <= 1e-6);
    CHECK(std::abs((*r.witness_b).p[1]) <= 1e-6);
    // Swapping the pair is strictly worse, so the order must be preserved.
    CHECK(F(r.witness_a, *r.witness_b) == r.value);
    CHECK(F(*r.witness_b, r.witness_a) < r.value);
}

TEST_CASE("pair sup selects a marker when the sup lives at infinity") {
    auto d = make_g2(pt(1, 0));
    auto F = seittenranta_form(pt(0, 0), pt(0.5, 0));

    SupResult r = sup_boundary_pairs(*d, F);
    CHECK(std::abs(r.value - std::log(2.0)) <= 1e-12);
    CHECK(r.witness_a.at_infinity);
    REQUIRE(r.witness_b.has_value());
    CHECK(!(*r.witness_b).at_infinity);
    CHECK(std::abs((*r.witness_b).p[0] - 1.0) <= 1e-9);
    CHECK(std::abs((*r.witness_b).p[1]) <= 1e-9);
}

TEST_CASE("sphere quotient maxima match closed forms and shrink with radius") {
    const Point u = pt(0, 0);
    const Point w = pt(0.5, 0);
    const std::vector<double> radii = {1.0, 1.5, 2.0, 4.0};

    double prev_far = std::numeric_limits<double>::infinity();
    double prev_close = std::numeric_limits<double>::infinity();
    for (double r : radii) {
        auto d = make_ball(pt(0, 0), r);
        double vfar = sup_boundary(*d, quotient(w, u, 1.0)).value;
        double vclose = sup_boundary(*d, quotient(u, w, 1.0)).value;
        CHECK(std::abs(vfar - (r + 0.5) / r) <= 1e-9);
        CHECK(std::abs(vclose - r / (r - 0.5)) <= 1e-9);
        CHECK(vfar <= prev_far);
        CHECK(vclose <= prev_close);
        prev_far = vfar;
        prev_close = vclose;
    }
}

TEST_CASE("marker value is the limit of the ratio along the ray") {
    auto d = make_g2(pt(1, 0));
    auto F = quotient(pt(0.5, 0), pt(0, 0), 1.0);

    SupResult r = sup_boundary(*d, F);
    CHECK(r.value == 1.0);
    CHECK(r.witness_a.at_infinity);

    // A point far along the first boundary ray approaches the marker value.
    auto curves = d->boundary_curves();
    const double s = 1e6;
    BoundaryPoint far = curves[0].eval(s / (s + 1.0));
    CHECK(!far.at_infinity);
    CHECK(std::abs(F(far) - 1.0) <= 1e-3);
}

TEST_CASE("repeated runs are bit identical") {
    auto d = make_g3(pt(1, 0));
    auto F = quotient(pt(0.5, 0), pt(0, 0), 1.0);

    SupResult r1 = sup_boundary(*d, F);
    SupResult r2 = sup_boundary(*d, F);
    CHECK(r1.value == r2.value);
    CHECK(r1.evaluations == r2.evaluations);
    CHECK(r1.enclosure_radius == r2.enclosure_radius);
    CHECK(r1.witness_a.at_infinity == r2.witness_a.at_infinity);
    CHECK(r1.witness_a.p[0] == r2.witness_a.p[0]);
    CHECK(r1.witness_a.p[1] == r2.witness_a.p[1]);

    auto P = seittenranta_form(pt(0, 0), pt(0.5, 0));
    SupResult p1 = sup_boundary_pairs(*d, P);
    SupResult p2 = sup_boundary_pairs(*d, P);
    CHECK(p1.value == p2.value);
    CHECK(p1.evaluations == p2.evaluations);
    CHECK(p1.witness_a.p[0] == p2.witness_a.p[0]);
    CHECK((*p1.witness_b).p[0] == (*p2.witness_b).p[0]);
}

TEST_CASE("refined solver never falls below dense sampling across the catalog") {
    for (const auto& d : catalog()) {
        const Point u = pt(0, 0);
        const double d0 = d->dist_boundary(u);
        const Point n = d->nearest_boundary_direction();
        const Point w = (0.4 * d0) * n;
        const double uw = dist(u, w);

        std::vector<BoundaryFunctional> fs;
        fs.push_back([&, u, w, uw](const BoundaryPoint& q) {
            if (q.at_infinity) return 0.0;
            return uw / (dist(q.p, u) + dist(q.p, w));
        });
        fs.push_back([&, u, w, uw](const BoundaryPoint& q) {
            if (q.at_infinity) return 0.0;
            return uw / (dist(q.p, u) * dist(q.p, w));
        });
        fs.push_back([&, u, w](const BoundaryPoint& q) {
            if (q.at_infinity) return 0.0;
            return angle(u, q.p, w);
        });
        fs.push_back(quotient(w, u, 1.0));

        for (const auto& F : fs) {
            SupResult solved = sup_boundary(*d, F, 4096);
            SupResult dense = brute_force_sup(*d, F, 4096);
            SupResult small = brute_force_sup(*d, F, 1000);
            CHECK(solved.value >= dense.value - 1e-10);
            CHECK(solved.value >= small.value - 1e-10);
        }
    }
}

TEST_CASE("budget and finiteness guards") {
    auto d = make_ball(pt(0, 0), 1.0);
    auto F = quotient(pt(0.5, 0), pt(0, 0), 1.0);
    auto P = seittenranta_form(pt(0, 0), pt(0.5, 0));

    CHECK_THROWS_AS(sup_boundary(*d, F, 8), PreconditionError);
    CHECK_THROWS_AS(sup_boundary_pairs(*d, P, 100), PreconditionError);
    CHECK_THROWS_AS(brute_force_sup(*d, F, 999), PreconditionError);
    CHECK_THROWS_AS(brute_force_sup_pairs(*d, P, 999), PreconditionError);

    BoundaryFunctional bad = [](const BoundaryPoint&) {
        return std::numeric_limits<double>::quiet_NaN();
    };
    CHECK_THROWS_AS(sup_boundary(*d, bad), NonFiniteValueError);

    auto g2 = make_g2(pt(1, 0));
    BoundaryFunctional marker_blows_up = [](const BoundaryPoint& q) {
        if (q.at_infinity) return std::numeric_limits<double>::infinity();
        return 0.0;
    };
    CHECK_THROWS_AS(sup_boundary(*g2, marker_blows_up), NonFiniteValueError);
}
