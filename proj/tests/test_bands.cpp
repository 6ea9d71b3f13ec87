#include <doctest.h>

#include <cmath>

#include "msae/band_plan.hpp"
#include "msae/errors.hpp"

using namespace msae;

TEST_SUITE_BEGIN("bands");

TEST_CASE("Q = 1.5 is the dyadic decomposition") {
    BandPlan p = constant_q_plan(3, 1.5);
    REQUIRE(p.edges.size() == 4);
    CHECK(p.edges[0] == 0.0);
    CHECK(p.edges[1] == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(p.edges[2] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(p.edges[3] == 1.0);

    BandPlan p5 = constant_q_plan(5, 1.5);
    const double expect[] = {0.0, 1.0 / 16, 1.0 / 8, 1.0 / 4, 1.0 / 2, 1.0};
    for (int i = 0; i <= 5; ++i)
        CHECK(p5.edges[static_cast<std::size_t>(i)] == doctest::Approx(expect[i]).epsilon(1e-15));
}

TEST_CASE("constant-Q edges evaluate rho powers") {
    BandPlan p = constant_q_plan(2, 2.0); // rho = 5/3
    CHECK(p.edges[1] == doctest::Approx(0.6).epsilon(1e-15));
    CHECK(p.edges[2] == 1.0);
}

TEST_CASE("uniform plans partition evenly") {
    BandPlan p = uniform_plan(4);
    for (int b = 0; b <= 4; ++b)
        CHECK(p.edges[static_cast<std::size_t>(b)] == doctest::Approx(b / 4.0));
    CHECK(uniform_plan(1).edges == std::vector<double>{0.0, 1.0});
}

TEST_CASE("invalid parameters are rejected") {
    CHECK_THROWS_AS(uniform_plan(0), DomainError);
    CHECK_THROWS_AS(constant_q_plan(0, 1.5), DomainError);
    CHECK_THROWS_AS(constant_q_plan(3, 0.5), DomainError);
    CHECK_THROWS_AS(constant_q_plan(3, 0.2), DomainError);
}

TEST_CASE("measured_q recovers the design Q for b >= 2") {
    for (double q : {0.75, 1.0, 1.5, 2.0, 2.5, 4.0}) {
        BandPlan p = constant_q_plan(5, q);
        for (int b = 2; b <= 5; ++b)
            CHECK(std::fabs(measured_q(p, b) - q) < 1e-12);
        // band 1 is pinned to DC and always measures 0.5
        CHECK(measured_q(p, 1) == doctest::Approx(0.5));
    }
}

TEST_CASE("measured_q on a uniform plan") {
    BandPlan p = uniform_plan(2);
    CHECK(measured_q(p, 1) == doctest::Approx(0.5)); // center 0.25, width 0.5
    CHECK_THROWS_AS(measured_q(p, 0), DomainError);
    CHECK_THROWS_AS(measured_q(p, 3), DomainError);
}

TEST_CASE("dyadic top band measures Q = 1.5") {
    for (int bands : {2, 3, 5, 7}) {
        BandPlan p = constant_q_plan(bands, 1.5);
        CHECK(measured_q(p, bands) == doctest::Approx(1.5));
    }
}

TEST_CASE("edges increase strictly and rho exceeds 1") {
    for (double q : {0.51, 0.75, 1.5, 10.0}) {
        BandPlan p = constant_q_plan(6, q);
        for (std::size_t i = 1; i < p.edges.size(); ++i)
            CHECK(p.edges[i] > p.edges[i - 1]);
        CHECK(p.edges.back() == 1.0);
    }
}

TEST_CASE("explicit plans are validated") {
    CHECK_NOTHROW(explicit_plan({0.0, 0.3, 1.0}));
    CHECK_THROWS_AS(explicit_plan({0.0, 0.5, 0.4, 1.0}), DomainError);
    CHECK_THROWS_AS(explicit_plan({0.1, 1.0}), DomainError);
    CHECK_THROWS_AS(explicit_plan({0.0, 0.5}), DomainError);
}

TEST_SUITE_END();
