#include <doctest.h>

#include "dunkl/rng.hpp"
#include "dunkl/rootsys.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/random/normal_distribution.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

using namespace dunkl;

TEST_CASE("gamma values")
{
    CHECK(gamma(RootSystemConfig::type_a(3, 2.0)) == doctest::Approx(3.0));
    CHECK(gamma(RootSystemConfig::type_b(3, 2.0, 0.5)) == doctest::Approx(9.0));
    CHECK(gamma(RootSystemConfig::type_a(1, 2.0)) == 0.0);
    CHECK(rank(RootSystemConfig::type_a(4, 1.0)) == 3);
    CHECK(rank(RootSystemConfig::type_b(4, 1.0, 0.0)) == 4);
}

TEST_CASE("gamma equals the multiplicity sum over enumerated positive roots")
{
    for (int n = 1; n <= 8; ++n) {
        for (const auto& cfg : {RootSystemConfig::type_a(n, 1.5), RootSystemConfig::type_b(n, 1.5, 0.7)}) {
            const auto roots = positive_roots(cfg);
            const double sum = std::accumulate(roots.begin(), roots.end(), 0.0,
                                               [](double s, const PositiveRoot& r) { return s + r.kappa; });
            CHECK(sum == doctest::Approx(gamma(cfg)).epsilon(1e-14));
            const std::size_t expected = cfg.kind == RootKind::TypeA ? n * (n - 1) / 2 : n * n;
            CHECK(roots.size() == expected);
        }
    }
}

TEST_CASE("config validation")
{
    CHECK_THROWS_AS(RootSystemConfig::type_b(2, 0.5, 1.0), DomainError);
    CHECK_THROWS_AS(RootSystemConfig::type_a(0, 1.0), DomainError);
    CHECK_THROWS_AS(RootSystemConfig::type_a(2, -1.0), DomainError);
    CHECK_NOTHROW(RootSystemConfig::type_a(2, 0.3));
}

TEST_CASE("log_weight values and degenerate sentinel")
{
    const auto a2 = RootSystemConfig::type_a(2, 2.0);
    CHECK(log_weight(a2, {0.0, 1.0}) == doctest::Approx(0.0));
    CHECK(log_weight(a2, {0.0, 2.0}) == doctest::Approx(2.0 * std::log(2.0)));
    CHECK(log_weight(RootSystemConfig::type_b(1, 2.0, 0.5), {1.0}) == doctest::Approx(0.0));
    CHECK(log_weight(a2, {1.0, 1.0}) == kNegInf);
    CHECK(log_weight(RootSystemConfig::type_b(2, 2.0, 0.5), {0.0, 1.0}) == kNegInf);
    CHECK(log_weight(RootSystemConfig::type_b(2, 2.0, 0.5), {-1.0, 1.0}) == kNegInf);
}

TEST_CASE("log_weight symmetry and homogeneity")
{
    auto rng = Xoshiro256pp::stream(7, 0);
    boost::random::normal_distribution<double> normal;
    for (int n = 2; n <= 5; ++n) {
        for (const auto& cfg : {RootSystemConfig::type_a(n, 1.3), RootSystemConfig::type_b(n, 2.7, 1.2)}) {
            Vec x(static_cast<std::size_t>(n));
            for (auto& v : x) v = normal(rng);
            const double lw = log_weight(cfg, x);
            Vec y = x;
            std::reverse(y.begin(), y.end());
            if (cfg.kind == RootKind::TypeB) y[0] = -y[0];
            CHECK(log_weight(cfg, y) == doctest::Approx(lw).epsilon(1e-12));
            const double c = 1.7;
            Vec z = x;
            for (auto& v : z) v *= c;
            CHECK(log_weight(cfg, z) == doctest::Approx(cfg.beta * gamma(cfg) * std::log(c) + lw).epsilon(1e-12));
        }
    }
}

TEST_CASE("Selberg constant at N=1 and against quadrature")
{
    CHECK(log_selberg_const(RootSystemConfig::type_a(1, 3.3)) == doctest::Approx(0.5 * std::log(2 * std::numbers::pi)));

    boost::math::quadrature::exp_sinh<double> half_line;
    // N=2 TypeA: split x into centre of mass and relative coordinate d = (x2-x1)/sqrt2
    for (double beta : {1.0, 2.0, 4.0}) {
        const double rel = 2.0 * half_line.integrate([beta](double d) {
            return d > 0.0 ? std::exp(-0.5 * d * d + beta * std::log(std::numbers::sqrt2 * d)) : 0.0;
        });
        const double c = std::sqrt(2.0 * std::numbers::pi) * rel;
        CHECK(std::exp(log_selberg_const(RootSystemConfig::type_a(2, beta))) == doctest::Approx(c).epsilon(1e-9));
    }
    CHECK(std::exp(log_selberg_const(RootSystemConfig::type_a(2, 2.0))) == doctest::Approx(4.0 * std::numbers::pi));

    for (double nu : {0.5, 1.0, 2.5}) {
        for (double beta : {1.0, 2.0, 3.5}) {
            const auto cfg = RootSystemConfig::type_b(1, beta, nu);
            const double q = 2.0 * half_line.integrate([&](double x) {
                return x > 0.0 ? std::exp(-0.5 * x * x + beta * (nu + 0.5) * std::log(x)) : 0.0;
            });
            CHECK(std::exp(log_selberg_const(cfg)) == doctest::Approx(q).epsilon(1e-9));
        }
    }
}

TEST_CASE("Selberg constant against Monte Carlo for N <= 3")
{
    auto rng = Xoshiro256pp::stream(11, 3);
    boost::random::normal_distribution<double> normal;
    for (const auto& cfg : {RootSystemConfig::type_a(3, 2.0), RootSystemConfig::type_b(2, 2.0, 0.5),
                            RootSystemConfig::type_b(3, 1.0, 1.0), RootSystemConfig::type_a(3, 1.0)}) {
        const int n = cfg.n;
        const double s2 = (n + cfg.beta * gamma(cfg)) / n;
        const double s = std::sqrt(s2);
        const long samples = 1'000'000;
        double mean = 0.0;
        double m2 = 0.0;
        Vec x(static_cast<std::size_t>(n));
        for (long k = 0; k < samples; ++k) {
            double r2 = 0.0;
            for (auto& v : x) {
                v = s * normal(rng);
                r2 += v * v;
            }
            const double lq = -0.5 * r2 / s2 - 0.5 * n * std::log(2 * std::numbers::pi * s2);
            const double f = std::exp(-0.5 * r2 + log_weight(cfg, x) - lq);
            const double d = f - mean;
            mean += d / (k + 1.0);
            m2 += d * (f - mean);
        }
        const double se = std::sqrt(m2 / (samples - 1.0) / samples);
        const double c = std::exp(log_selberg_const(cfg));
        CHECK(std::abs(mean - c) / c <= 0.01);
        CHECK(std::abs(mean - c) <= 4.0 * se);
    }
}

TEST_CASE("freezing constants")
{
    CHECK(freezing_constant(RootSystemConfig::type_a(2, 1.0)) == doctest::Approx(0.5 - 0.5 * std::log(2.0)));
    CHECK(freezing_constant(RootSystemConfig::type_a(1, 1.0)) == 0.0);
    CHECK(freezing_constant(RootSystemConfig::type_b(1, 1.0, 0.5)) == doctest::Approx(0.5));
}

TEST_CASE("Weyl chamber membership")
{
    const auto a3 = RootSystemConfig::type_a(3, 2.0);
    CHECK(in_weyl_chamber(a3, {0.0, 1.0, 2.0}));
    CHECK_FALSE(in_weyl_chamber(a3, {0.0, 0.0, 2.0}));
    CHECK_FALSE(in_weyl_chamber(RootSystemConfig::type_b(2, 2.0, 0.5), {-1.0, 2.0}));
    CHECK(in_weyl_chamber(RootSystemConfig::type_b(2, 2.0, 0.5), {1.0, 2.0}));
}

TEST_CASE("projection to the chamber")
{
    const auto a3 = RootSystemConfig::type_a(3, 2.0);
    Vec x{2.0, -1.0, 0.5};
    CHECK(project_to_chamber(a3, x.data()) == 0);
    CHECK(x == Vec{-1.0, 0.5, 2.0});

    Vec t{1.0, 1.0, 1.0};
    CHECK(project_to_chamber(a3, t.data()) == 2);
    CHECK(in_weyl_chamber(a3, t));

    const auto b2 = RootSystemConfig::type_b(2, 2.0, 0.5);
    Vec y{-0.3, 0.1};
    project_to_chamber(b2, y.data());
    CHECK(y[0] == doctest::Approx(0.1));
    CHECK(y[1] == doctest::Approx(0.3));
}

TEST_CASE("reflections fix the hyperplane and negate the root")
{
    const auto cfg = RootSystemConfig::type_b(3, 2.0, 0.5);
    const Vec v{0.3, -1.2, 2.0};
    for (const auto& a : positive_roots(cfg)) {
        const Vec r = reflect(a, v);
        CHECK(a.dot(r.data()) == doctest::Approx(-a.dot(v.data())));
        CHECK(std::inner_product(r.begin(), r.end(), r.begin(), 0.0)
              == doctest::Approx(std::inner_product(v.begin(), v.end(), v.begin(), 0.0)));
    }
}
