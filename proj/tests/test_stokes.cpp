#include <doctest.h>

#include <cmath>
#include <random>

#include "ewkb/errors.hpp"
#include "ewkb/stokes.hpp"
#include "helpers.hpp"

using namespace ewkb;
using testing_util::poly;
using cd = std::complex<double>;

TEST_SUITE("stokes")
{
    TEST_CASE("canonical rays")
    {
        auto a = canonical_ray_angles(0);
        CHECK(a[0] == doctest::Approx(0));
        CHECK(a[1] == doctest::Approx(2 * M_PI / 3));
        CHECK(a[2] == doctest::Approx(-2 * M_PI / 3));
        auto b = canonical_ray_angles(3 * M_PI / 2);  // base π stays at π
        CHECK(b[0] == doctest::Approx(M_PI));
        CHECK(b[1] == doctest::Approx(-M_PI / 3));
        auto d = canonical_stokes_lines(0.3, 2.0, 11);
        REQUIRE(d.lines.size() == 3);
        CHECK(std::abs(d.lines[1].nodes.back()) == doctest::Approx(2.0));
        CHECK(std::arg(d.lines[1].nodes.back()) == doctest::Approx(0.2 + 2 * M_PI / 3));
    }

    TEST_CASE("sector classification")
    {
        CHECK(classify_sector(std::polar(1.0, M_PI / 3), 0) == Sector::S1);
        CHECK(classify_sector(cd(-1, 0), 0) == Sector::S2);
        CHECK(classify_sector(std::polar(1.0, -M_PI / 3), 0) == Sector::Sm1);
        CHECK(classify_sector(cd(2, 0), 0) == Sector::L0);
        CHECK(classify_sector(std::polar(0.5, 2 * M_PI / 3), 0) == Sector::L1);
        CHECK(classify_sector(std::polar(0.5, -2 * M_PI / 3), 0) == Sector::Lm1);
        CHECK(sector_name(Sector::Sm1) == "S-1");
        CHECK(is_line(Sector::L1));
        CHECK_FALSE(is_line(Sector::S2));
        CHECK_THROWS_AS(classify_sector(cd(0, 0), 0), ValidationError);
    }

    TEST_CASE("property: classification turns with alpha")
    {
        std::mt19937 rng(6);
        std::uniform_real_distribution<double> ang(-M_PI, M_PI), rad(0.1, 3);
        for (int trial = 0; trial < 200; ++trial) {
            cd z = std::polar(rad(rng), ang(rng));
            double alpha = ang(rng);
            CHECK(classify_sector(z * std::polar(1.0, 2 * alpha / 3), alpha, 1e-12) == classify_sector(z, 0, 1e-12));
        }
    }

    TEST_CASE("Stokes condition for V = q")
    {
        auto V = poly({0, 1});
        for (double th : {0.3, 1.0, -2.5}) {
            const double r = 1.3;
            double expect = (2.0 / 3) * std::pow(r, 1.5) * std::sin(1.5 * th);
            CHECK(stokes_condition(V, std::polar(r, th), 0) == doctest::Approx(expect).epsilon(1e-12));
        }
        for (double a : canonical_ray_angles(0)) CHECK(std::abs(stokes_condition(V, std::polar(1.0, a), 0)) < 1e-13);
        CHECK_THROWS_AS(stokes_condition(poly({1, 1}), cd(1, 0), 0), ValidationError);
        CHECK_THROWS_AS(stokes_condition(poly({0, 0, 1}), cd(1, 0), 0), NotSimpleTurningPoint);
    }

    TEST_CASE("traced curves for V = q follow the canonical rays")
    {
        TraceOptions opt;
        opt.extent = 2.0;
        for (double alpha : {0.0, 0.6}) {
            auto d = potential_stokes_curves(poly({0, 1}), alpha, opt);
            auto rays = canonical_ray_angles(alpha);
            REQUIRE(d.lines.size() == 3);
            for (std::size_t k = 0; k < 3; ++k) {
                CHECK(std::abs(d.lines[k].nodes.back()) >= 2.0);
                for (std::size_t i = 1; i < d.lines[k].nodes.size(); ++i)
                    CHECK(std::abs(std::remainder(std::arg(d.lines[k].nodes[i]) - rays[k], 2 * M_PI)) < 1e-6);
            }
        }
    }

    TEST_CASE("traced curves for V = q + q^2/2")
    {
        auto V = poly({0, 1, Rational(1, 2)});
        auto d = potential_stokes_curves(V, 0);
        CHECK(d.max_node_residual < 1e-10);
        for (const auto& line : d.lines)
            for (const auto& q : line.nodes)
                if (q != cd(0, 0)) CHECK(std::abs(stokes_condition(V, q, 0)) < 1e-10);
        // branch 0 runs along the positive axis
        for (const auto& q : d.lines[0].nodes) CHECK(std::abs(q.imag()) < 1e-8);
        CHECK(d.lines[0].nodes.back().real() >= 3.0);
        // the other two are mirror images
        CHECK(std::abs(d.lines[1].nodes.back() - std::conj(d.lines[2].nodes.back())) < 1e-6);
    }

    TEST_CASE("escape from the analyticity region")
    {
        TraceOptions opt;
        opt.region_radius = 0.5;
        auto d = potential_stokes_curves(poly({0, 1}), 0, opt);
        for (const auto& l : d.lines) {
            CHECK(l.escaped);
            CHECK(std::abs(l.nodes.back()) < 0.6);
        }
        opt.throw_on_escape = true;
        CHECK_THROWS_AS(potential_stokes_curves(poly({0, 1}), 0, opt), TraceEscape);
        opt.step = 0;
        CHECK_THROWS_AS(potential_stokes_curves(poly({0, 1}), 0, opt), ValidationError);
    }
}
