#include <doctest.h>

#include "dunkl/sde.hpp"

#include <boost/math/distributions/non_central_chi_squared.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>

using namespace dunkl;

namespace {

struct Moments {
    double mean = 0.0;
    double var = 0.0;
};

Moments moments(const std::vector<double>& xs)
{
    Moments m;
    for (double x : xs) m.mean += x;
    m.mean /= static_cast<double>(xs.size());
    for (double x : xs) m.var += (x - m.mean) * (x - m.mean);
    m.var /= static_cast<double>(xs.size() - 1);
    return m;
}

} // namespace

TEST_CASE("drift values")
{
    const auto a2 = RootSystemConfig::type_a(2, 2.0);
    const Vec b = drift(a2, {0.0, 1.0});
    CHECK(b[0] == doctest::Approx(-1.0));
    CHECK(b[1] == doctest::Approx(1.0));
    const Vec s = drift(RootSystemConfig::type_a(2, 3.7), {-0.4, 0.4});
    CHECK(s[0] == doctest::Approx(-s[1]));
    CHECK(drift(RootSystemConfig::type_b(1, 2.0, 0.5), {2.0})[0] == doctest::Approx(0.5));
    CHECK_THROWS_AS(drift(a2, {1.0, 1.0}), DomainError);
    CHECK_THROWS_AS(drift(RootSystemConfig::type_b(2, 2.0, 0.5), {0.0, 1.0}), DomainError);

    // TypeB drift against its definition with explicit sums
    const auto b3 = RootSystemConfig::type_b(3, 1.5, 0.8);
    const Vec x{0.3, 0.9, 2.0};
    const Vec d = drift(b3, x);
    for (int i = 0; i < 3; ++i) {
        double e = (2 * 0.8 + 1) / (2 * x[i]);
        for (int j = 0; j < 3; ++j)
            if (j != i) e += 1 / (x[i] - x[j]) + 1 / (x[i] + x[j]);
        CHECK(d[i] == doctest::Approx(0.75 * e));
    }
}

TEST_CASE("Euler step")
{
    const auto a1 = RootSystemConfig::type_a(1, 2.0);
    CHECK(euler_step(a1, {{0.3}, 0.0}, 0.1, {0.0}).positions[0] == doctest::Approx(0.3));
    const auto a2 = RootSystemConfig::type_a(2, 2.0);
    const auto s = euler_step(a2, {{0.0, 1.0}, 0.0}, 0.1, {0.0, 0.0});
    CHECK(s.positions[0] == doctest::Approx(-0.1));
    CHECK(s.positions[1] == doctest::Approx(1.1));
    CHECK(s.time == doctest::Approx(0.1));
    // raw step lands at -0.3, reflected to 0.3
    const auto b1 = RootSystemConfig::type_b(1, 2.0, 0.5);
    const double x0 = 1.0;
    const double dt = 0.01;
    const double z = (-0.3 - x0 - 1.0 / x0 * dt) / std::sqrt(dt);
    CHECK(euler_step(b1, {{x0}, 0.0}, dt, {z}).positions[0] == doctest::Approx(0.3));
}

TEST_CASE("simulate_paths with zero noise equals a single Euler step")
{
    SimPlan plan;
    plan.cfg = RootSystemConfig::type_a(2, 2.0);
    plan.dt = 0.1;
    plan.t_final = 0.1;
    plan.n_paths = 1;
    plan.initial = {0.0, 1.0};
    plan.noise_scale = 0.0;
    const auto r = simulate_paths(plan);
    const auto e = euler_step(plan.cfg, {plan.initial, 0.0}, 0.1, {0.0, 0.0});
    CHECK(r.finals[0] == doctest::Approx(e.positions[0]));
    CHECK(r.finals[1] == doctest::Approx(e.positions[1]));
    CHECK(r.steps_per_path == 1);
}

TEST_CASE("final partial step lands on t_final")
{
    SimPlan plan;
    plan.cfg = RootSystemConfig::type_a(2, 2.0);
    plan.dt = 0.3;
    plan.t_final = 1.0;
    plan.initial = {0.0, 1.0};
    plan.noise_scale = 0.0;
    const auto r = simulate_paths(plan);
    CHECK(r.steps_per_path == 4);
    // zero-noise flow preserves the centre of mass and grows the gap
    CHECK(r.finals[0] + r.finals[1] == doctest::Approx(1.0));
}

TEST_CASE("determinism independent of worker count")
{
    SimPlan plan;
    plan.cfg = RootSystemConfig::type_b(3, 2.0, 0.5);
    plan.dt = 1e-3;
    plan.t_final = 0.2;
    plan.n_paths = 257;
    plan.seed = 99;
    plan.initial = {0.1, 0.2, 0.3};
    plan.threads = 1;
    const auto r1 = simulate_paths(plan);
    plan.threads = 3;
    const auto r3 = simulate_paths(plan);
    CHECK(r1.finals == r3.finals);
    plan.seed = 100;
    CHECK(simulate_paths(plan).finals != r1.finals);
}

TEST_CASE("chamber preservation")
{
    SimPlan plan;
    plan.cfg = RootSystemConfig::type_a(4, 1.0);
    plan.dt = 2e-4;
    plan.t_final = 0.5;
    plan.n_paths = 200;
    plan.initial = {0.0, 0.01, 0.02, 0.03};
    const auto r = simulate_paths(plan);
    for (long p = 0; p < r.n_paths; ++p) {
        const auto s = r.path(p);
        CHECK(in_weyl_chamber(plan.cfg, Vec(s.begin(), s.end())));
    }
    const double per_step = static_cast<double>(r.tie_repairs) / (r.n_paths * r.steps_per_path);
    CHECK(per_step < 1e-6);
}

TEST_CASE("N=1 TypeA is Brownian motion")
{
    SimPlan plan;
    plan.cfg = RootSystemConfig::type_a(1, 2.0);
    plan.dt = 0.01;
    plan.t_final = 2.0;
    plan.n_paths = 100'000;
    plan.initial = {0.5};
    const auto r = simulate_paths(plan);
    const auto m = moments(r.finals);
    const double se_var = plan.t_final * std::sqrt(2.0 / plan.n_paths);
    CHECK(std::abs(m.var - plan.t_final) <= 3 * se_var);
    CHECK(std::abs(m.mean - 0.5) <= 3 * std::sqrt(plan.t_final / plan.n_paths));
}

TEST_CASE("N=1 TypeB is a Bessel process")
{
    // squared Bessel of dimension delta = 1 + beta (nu + 1/2): E[Y_t^2] = y0^2 + delta t
    for (const auto [beta, nu] : {std::pair{2.0, 1.0}, std::pair{2.0, 2.0}, std::pair{3.0, 1.0}}) {
        SimPlan plan;
        plan.cfg = RootSystemConfig::type_b(1, beta, nu);
        plan.dt = 2e-4;
        plan.t_final = 0.5;
        plan.n_paths = 100'000;
        plan.initial = {0.1};
        const auto r = simulate_paths(plan);
        std::vector<double> sq(r.finals.size());
        for (std::size_t i = 0; i < sq.size(); ++i) sq[i] = r.finals[i] * r.finals[i];
        const double delta = 1.0 + beta * (nu + 0.5);
        const double expected = 0.01 + delta * plan.t_final;
        CHECK(std::abs(moments(sq).mean - expected) / expected <= 0.05);
        if (beta == 2.0) CHECK(delta == doctest::Approx(2 * (nu + 1)));
    }
}

TEST_CASE("N=1 TypeB at nu = 1/2 matches the noncentral chi-squared law")
{
    // Y_t^2 / t is noncentral chi-squared with delta = 3 degrees of freedom and noncentrality y0^2 / t
    SimPlan plan;
    plan.cfg = RootSystemConfig::type_b(1, 2.0, 0.5);
    plan.dt = 2e-4;
    plan.t_final = 0.5;
    plan.n_paths = 100'000;
    plan.initial = {0.1};
    const auto r = simulate_paths(plan);
    const boost::math::non_central_chi_squared law(3.0, 0.01 / plan.t_final);
    for (double p : {0.1, 0.25, 0.5, 0.75, 0.9}) {
        const double q = boost::math::quantile(law, p) * plan.t_final;
        const auto below = std::count_if(r.finals.begin(), r.finals.end(), [q](double y) { return y * y < q; });
        CHECK(std::abs(static_cast<double>(below) / plan.n_paths - p) <= 0.01);
    }
}

TEST_CASE("TypeA translation covariance of the centre of mass")
{
    SimPlan plan;
    plan.cfg = RootSystemConfig::type_a(3, 2.0);
    plan.dt = 1e-3;
    plan.t_final = 0.5;
    plan.n_paths = 20'000;
    plan.initial = {0.0, 1.0, 2.0};
    auto cm = [](const PathEnsemble& r) {
        std::vector<double> c(static_cast<std::size_t>(r.n_paths));
        for (long p = 0; p < r.n_paths; ++p) {
            const auto s = r.path(p);
            c[static_cast<std::size_t>(p)] = std::accumulate(s.begin(), s.end(), 0.0) / 3.0;
        }
        return moments(c);
    };
    const auto m0 = cm(simulate_paths(plan));
    plan.initial = {2.5, 3.5, 4.5};
    plan.seed = 12345;
    const auto m1 = cm(simulate_paths(plan));
    const double se = std::sqrt(m0.var / plan.n_paths + m1.var / plan.n_paths);
    CHECK(std::abs((m1.mean - m0.mean) - 2.5) <= 3 * se);
}

TEST_CASE("scaled histogram")
{
    PathEnsemble one;
    one.n = 1;
    one.n_paths = 1;
    one.finals = {0.005};
    const auto h = scaled_histogram(one, 1.0, 0.0, 0.01, 0.01);
    REQUIRE(h.bins() == 1);
    CHECK(h.counts[0] == 1);
    CHECK(std::sqrt(2.0 * 100.0) == doctest::Approx(14.1421).epsilon(1e-5));

    SimPlan plan;
    plan.cfg = RootSystemConfig::type_a(3, 2.0);
    plan.dt = 1e-2;
    plan.t_final = 1.0;
    plan.n_paths = 1000;
    plan.initial = {0.0, 1.0, 2.0};
    const auto r = simulate_paths(plan);
    const auto hh = scaled_histogram(r, std::sqrt(2.0), -10.0, 10.0, 0.05);
    double integral = 0.0;
    for (std::size_t b = 0; b < hh.bins(); ++b) integral += hh.density(b) * hh.bin_width;
    const double missing = static_cast<double>(hh.underflow + hh.overflow) / plan.n_paths;
    CHECK(integral + missing == doctest::Approx(3.0));
}

TEST_CASE("relaxation bound")
{
    CHECK(relaxation_bound(init_stats({{0.0, 1.0, 2.0}}), 2.0) == 10.0);
    CHECK(relaxation_bound(init_stats({{1.0, 2.0, 3.0}}), 2.0) == 28.0);
    CHECK(relaxation_bound(init_stats({{0.0, 0.0}}), 5.0) == 0.0);
    const auto st = init_stats({{0.0}, {2.0}});
    CHECK(st.mean[0] == doctest::Approx(1.0));
    CHECK(st.variance_total == doctest::Approx(1.0));
    CHECK(relaxation_bound(st, 0.5) == doctest::Approx(2.0));
}

TEST_CASE("plan validation")
{
    SimPlan plan;
    plan.cfg = RootSystemConfig{RootKind::TypeB, 2, 0.5, 1.0};
    plan.initial = {0.1, 0.2};
    CHECK_THROWS_AS(simulate_paths(plan), DomainError);
    plan.cfg = RootSystemConfig::type_a(2, 2.0);
    plan.initial = {0.1};
    CHECK_THROWS_AS(simulate_paths(plan), DomainError);
    plan.initial = {0.1, 0.2};
    plan.dt = 2.0;
    CHECK_THROWS_AS(simulate_paths(plan), DomainError);
}
