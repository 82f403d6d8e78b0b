#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hypgrow/profile.hpp"

using namespace hypgrow;

namespace {

const double PI = std::acos(-1.0);

Point pt(double x, double y) { return Point{x, y}; }

}  // namespace

TEST_CASE("envelope formulas at the reference offset") {
    const double d0 = 1.0, t = 0.5;

    auto e = envelope(MetricKind::j, d0, t);
    CHECK(e.lo == doctest::Approx(std::log(1.5)).epsilon(1e-15));
    REQUIRE(e.hi.has_value());
    CHECK(*e.hi == doctest::Approx(std::log(2.0)).epsilon(1e-15));
    CHECK(envelope(MetricKind::k, d0, t).lo == e.lo);

    e = envelope(MetricKind::s, d0, t);
    CHECK(e.lo == doctest::Approx(0.2).epsilon(1e-15));
    CHECK(*e.hi == doctest::Approx(1.0 / 3.0).epsilon(1e-15));

    e = envelope(MetricKind::sigma, d0, t);
    CHECK(e.lo == doctest::Approx(std::tan(0.1 * PI)).epsilon(1e-15));
    CHECK(*e.hi == doctest::Approx(std::tan(PI / 6.0)).epsilon(1e-15));

    e = envelope(MetricKind::sigma_tilde, d0, t);
    CHECK(e.lo == doctest::Approx(4.0 / PI * std::tan(0.1 * PI)).epsilon(1e-15));
    CHECK(*e.hi == doctest::Approx(4.0 / PI * std::tan(PI / 6.0)).epsilon(1e-15));

    e = envelope(MetricKind::c, d0, t);
    CHECK(e.lo == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(*e.hi == doctest::Approx(1.0).epsilon(1e-15));

    e = envelope(MetricKind::alpha, d0, t);
    CHECK(e.lo == doctest::Approx(std::log(1.5)).epsilon(1e-15));
    CHECK(*e.hi == doctest::Approx(std::log(3.0)).epsilon(1e-15));

    e = envelope(MetricKind::delta, d0, t);
    CHECK(e.lo == doctest::Approx(std::log(1.5)).epsilon(1e-15));
    CHECK(*e.hi == doctest::Approx(std::log(3.0)).epsilon(1e-15));

    e = envelope(MetricKind::v, d0, t);
    CHECK(e.lo == 0.0);
    CHECK(*e.hi == doctest::Approx(PI / 6.0).epsilon(1e-15));

    e = envelope(MetricKind::tau, d0, t);
    CHECK(e.lo == 0.0);
    CHECK(*e.hi == doctest::Approx(0.5 / (std::sqrt(0.75) + 1.0)).epsilon(1e-15));
    CHECK(*e.hi == doctest::Approx(std::tan(PI / 12.0)).epsilon(1e-12));

    e = envelope(MetricKind::tau_tilde, d0, t);
    CHECK(*e.hi == doctest::Approx(2.0 * std::tan(PI / 12.0)).epsilon(1e-12));

    e = envelope(MetricKind::rho_ball, d0, t);
    CHECK(e.lo == doctest::Approx(std::asinh(0.5 / std::sqrt(0.75))).epsilon(1e-15));
    CHECK(*e.hi == e.lo);

    e = envelope(MetricKind::rho_halfspace, d0, t);
    CHECK(e.lo == doctest::Approx(std::log(2.0)).epsilon(1e-15));
    CHECK(*e.hi == e.lo);
}

TEST_CASE("envelope drops the upper bound outside the inner ball") {
    auto e = envelope(MetricKind::j, 1.0, 1.0);
    CHECK_FALSE(e.hi.has_value());
    CHECK(e.lo == doctest::Approx(std::log(2.0)).epsilon(1e-15));

    e = envelope(MetricKind::delta, 2.0, 7.5);
    CHECK_FALSE(e.hi.has_value());
    CHECK(e.lo == doctest::Approx(std::log(1.0 + 7.5 / 2.0)).epsilon(1e-15));

    // at t = 0 both bounds collapse to zero
    e = envelope(MetricKind::sigma, 1.0, 0.0);
    CHECK(e.lo == 0.0);
    REQUIRE(e.hi.has_value());
    CHECK(*e.hi == 0.0);

    CHECK_THROWS_AS(envelope(MetricKind::j, 0.0, 0.5), PreconditionError);
    CHECK_THROWS_AS(envelope(MetricKind::j, 1.0, -0.1), PreconditionError);
}

TEST_CASE("profile grid on the unit ball") {
    auto d = make_ball(pt(0.0, 0.0), 1.0);
    auto table = profile(*d, MetricKind::j, pt(2.0, 0.0), 0.9, 9);

    CHECK(table.rows.size() == 10);
    CHECK(table.direction.c[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(table.direction.c[1] == 0.0);
    CHECK(table.metric.has_value());
    CHECK(*table.metric == MetricKind::j);
    CHECK(table.domain.at("type").get<std::string>() == "ball");

    const auto& r0 = table.rows[0];
    CHECK(r0.t == 0.0);
    CHECK(r0.g == doctest::Approx(1.0).epsilon(1e-15));
    REQUIRE(r0.f.has_value());
    CHECK(*r0.f == 0.0);
    CHECK(*r0.env_lo == 0.0);
    CHECK(*r0.env_hi == 0.0);

    for (std::size_t i = 1; i < table.rows.size(); ++i)
        CHECK(table.rows[i].t > table.rows[i - 1].t);

    const auto& r5 = table.rows[5];
    CHECK(r5.t == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(r5.g == doctest::Approx(0.5).epsilon(1e-14));
    REQUIRE(r5.f.has_value());
    CHECK(*r5.f == doctest::Approx(std::log(2.0)).epsilon(1e-12));
    CHECK(*r5.env_lo == doctest::Approx(std::log(1.5)).epsilon(1e-12));
    REQUIRE(r5.env_hi.has_value());
    CHECK(*r5.env_hi == doctest::Approx(std::log(2.0)).epsilon(1e-12));
    CHECK(*r5.env_lo <= *r5.f + 1e-12);
    CHECK(*r5.f <= *r5.env_hi + 1e-12);
}

TEST_CASE("distance only profile on the comb") {
    auto d = make_comb(20);
    auto table = profile(*d, std::nullopt, pt(1.0, 0.0), 0.9, 18);

    CHECK_FALSE(table.metric.has_value());
    CHECK(table.rows.size() == 19);
    const auto& r0 = table.rows[0];
    CHECK(r0.g == 0.5);
    CHECK_FALSE(r0.f.has_value());
    CHECK_FALSE(r0.env_lo.has_value());
    CHECK_FALSE(r0.env_hi.has_value());

    const auto& mid = table.rows[10];
    CHECK(mid.t == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(mid.g == 0.25);  // nearest tooth base sits straight above
    CHECK_FALSE(mid.f.has_value());
}

TEST_CASE("tangent transform overflow drops the value but keeps the row") {
    // ray grazing the inner end of the first tooth at offset ~5e-14
    auto d = make_comb(6);
    const Point dir = normalized(pt(1e-13, 1.0));

    auto table = profile(*d, MetricKind::sigma, dir, 0.9, 9);
    CHECK(table.rows.size() == 10);
    REQUIRE(table.rows[4].f.has_value());  // t = 0.4, below the tooth
    for (std::size_t i = 5; i < table.rows.size(); ++i) {
        CAPTURE(i);
        CHECK_FALSE(table.rows[i].f.has_value());
        CHECK(table.rows[i].env_lo.has_value());  // envelope columns stay
        CHECK(table.rows[i].g > 0.0);
        CHECK(table.rows[i].g < 1e-12);
    }

    auto tv = profile(*d, MetricKind::tau, dir, 0.9, 9);
    REQUIRE(tv.rows[4].f.has_value());
    CHECK_FALSE(tv.rows[6].f.has_value());
    CHECK_FALSE(tv.rows[9].f.has_value());

    // the untransformed families still produce every value
    auto vv = profile(*d, MetricKind::v, dir, 0.9, 9);
    for (const auto& row : vv.rows) {
        REQUIRE(row.f.has_value());
        CHECK(*row.f <= PI);
    }
}

TEST_CASE("profile rejects rays that leave the domain") {
    auto ball = make_ball(pt(0.0, 0.0), 1.0);
    CHECK_THROWS_AS(profile(*ball, MetricKind::j, pt(1.0, 0.0), 1.2, 9), OutsideDomainError);
    try {
        profile(*ball, MetricKind::j, pt(1.0, 0.0), 1.2, 9);
    } catch (const OutsideDomainError& ex) {
        CHECK(std::string(ex.what()).find("t=1") != std::string::npos);
    }

    CHECK_THROWS_AS(profile(*ball, MetricKind::j, pt(1.0, 0.0), 0.9, 1), PreconditionError);
    CHECK_THROWS_AS(profile(*ball, MetricKind::j, pt(1.0, 0.0), 0.0, 9), PreconditionError);
    CHECK_THROWS_AS(profile(*ball, MetricKind::j, Point{1.0, 0.0, 0.0}, 0.5, 9),
                    PreconditionError);
}

TEST_CASE("derivative at zero matches the radial closed forms") {
    auto ball = make_ball(pt(0.0, 0.0), 1.0);
    auto est = derivative_at_zero(*ball, MetricKind::j, pt(1.0, 0.0));
    CHECK(est.value == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(est.lo <= est.value);
    CHECK(est.value <= est.hi);
    CHECK(est.step_sequence.size() == 11);
    CHECK(est.step_sequence.front() == doctest::Approx(std::ldexp(1.0, -6)).epsilon(1e-15));
    CHECK(est.step_sequence.back() == doctest::Approx(std::ldexp(1.0, -16)).epsilon(1e-15));

    CHECK(derivative_at_zero(*ball, MetricKind::k, pt(0.0, 1.0)).value ==
          doctest::Approx(1.0).epsilon(1e-6));
    CHECK(derivative_at_zero(*ball, MetricKind::sigma_tilde, pt(1.0, 0.0)).value ==
          doctest::Approx(1.0).epsilon(1e-4));
    CHECK(derivative_at_zero(*ball, MetricKind::c, pt(1.0, 0.0)).value ==
          doctest::Approx(1.0).epsilon(1e-4));
    CHECK(derivative_at_zero(*ball, MetricKind::tau_tilde, pt(1.0, 0.0)).value ==
          doctest::Approx(1.0).epsilon(1e-4));
    CHECK(derivative_at_zero(*ball, MetricKind::rho_ball, pt(1.0, 0.0)).value ==
          doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("derivative extremes at the sharp configurations") {
    auto g3 = make_g3(pt(1.0, 0.0));
    auto est = derivative_at_zero(*g3, MetricKind::delta, pt(1.0, 0.0));
    CHECK(est.value == doctest::Approx(2.0).epsilon(1e-4));

    auto g2 = make_g2(pt(1.0, 0.0));
    CHECK(derivative_at_zero(*g2, MetricKind::alpha, pt(1.0, 0.0)).value ==
          doctest::Approx(1.0).epsilon(1e-4));
    CHECK(derivative_at_zero(*g2, MetricKind::delta, pt(1.0, 0.0)).value ==
          doctest::Approx(1.0).epsilon(1e-4));

    auto g1 = make_g1(pt(1.0, 0.0));
    CHECK(derivative_at_zero(*g1, MetricKind::j, pt(1.0, 0.0)).value ==
          doctest::Approx(1.0).epsilon(1e-6));
    CHECK(derivative_at_zero(*g1, MetricKind::c, pt(1.0, 0.0)).value ==
          doctest::Approx(1.0).epsilon(1e-4));
}

TEST_CASE("profile values stay within the envelope across the catalog") {
    struct Probe {
        DomainPtr d;
        MetricKind m;
    };
    const Probe probes[] = {
        {make_g1(pt(1.0, 0.0)), MetricKind::j},
        {make_g2(pt(1.0, 0.0)), MetricKind::s},
        {make_g3(pt(1.0, 0.0)), MetricKind::delta},
        {make_quadrant(pt(1.0, 1.0)), MetricKind::c},
        {make_alpha_sharp(pt(1.0, 0.0)), MetricKind::alpha},
        {make_circular_notched(), MetricKind::v},
    };
    for (const auto& pr : probes) {
        const Point origin(2);
        const double d0 = pr.d->dist_boundary(origin);
        const Point dir = pr.d->nearest_boundary_direction();
        auto table = profile(*pr.d, pr.m, dir, 0.9 * d0, 16);
        for (const auto& row : table.rows) {
            CAPTURE(pr.d->tag());
            CAPTURE(row.t);
            REQUIRE(row.f.has_value());
            CHECK(*row.f >= *row.env_lo - 1e-6);
            REQUIRE(row.env_hi.has_value());
            CHECK(*row.f <= *row.env_hi + 1e-6);
        }
    }
}

TEST_CASE("distance along the ray is one lipschitz") {
    for (const auto& d : {make_comb(12), make_circular_notched(), make_polynomial(2)}) {
        const Point origin(2);
        const double d0 = d->dist_boundary(origin);
        auto table = profile(*d, std::nullopt, Point{1.0, 0.0}, 0.9, 64);
        CHECK(table.rows[0].g == doctest::Approx(d0).epsilon(1e-15));
        for (std::size_t i = 1; i < table.rows.size(); ++i) {
            const double dg = std::fabs(table.rows[i].g - table.rows[i - 1].g);
            const double dt = table.rows[i].t - table.rows[i - 1].t;
            CHECK(dg <= dt + 1e-12);
        }
    }
}
