#include <doctest.h>

#include "dunkl/equilibrium.hpp"
#include "dunkl/orthopoly.hpp"
#include "dunkl/rng.hpp"

#include <boost/random/normal_distribution.hpp>
#include <boost/random/uniform_real_distribution.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

using namespace dunkl;

namespace {

Vec random_chamber_point(const RootSystemConfig& cfg, Xoshiro256pp& rng)
{
    boost::random::normal_distribution<double> normal;
    for (;;) {
        Vec v(static_cast<std::size_t>(cfg.n));
        for (auto& x : v) x = 1.5 * normal(rng);
        project_to_chamber(cfg, v.data());
        bool ok = true;
        for (const auto& a : positive_roots(cfg))
            if (std::abs(a.dot(v.data())) < 0.15) ok = false;
        if (ok) return v;
    }
}

} // namespace

TEST_CASE("potential values and derivatives")
{
    const auto a2 = RootSystemConfig::type_a(2, 2.0);
    const double s = 1.0 / std::numbers::sqrt2;
    const auto at_h2 = potential(a2, {-s, s});
    CHECK(std::abs(at_h2.gradient[0]) < 1e-14);
    CHECK(std::abs(at_h2.gradient[1]) < 1e-14);
    const auto p = potential(a2, {0.0, 1.0});
    CHECK(p.value == doctest::Approx(0.5));
    CHECK(p.gradient[0] == doctest::Approx(1.0));
    CHECK(p.gradient[1] == doctest::Approx(0.0));
    CHECK_THROWS_AS(potential(a2, {1.0, 1.0}), DomainError);
}

TEST_CASE("potential gradient and Hessian against finite differences")
{
    auto rng = Xoshiro256pp::stream(3, 1);
    for (const auto& cfg : {RootSystemConfig::type_a(4, 1.0), RootSystemConfig::type_b(3, 1.0, 1.3)}) {
        const Vec v = random_chamber_point(cfg, rng);
        const auto pe = potential(cfg, v);
        const double h = 1e-5;
        for (int i = 0; i < cfg.n; ++i) {
            Vec vp = v;
            Vec vm = v;
            vp[i] += h;
            vm[i] -= h;
            const double fd = (potential_value(cfg, vp) - potential_value(cfg, vm)) / (2 * h);
            CHECK(pe.gradient[i] == doctest::Approx(fd).epsilon(1e-6));
            const auto gp = potential(cfg, vp).gradient;
            const auto gm = potential(cfg, vm).gradient;
            for (int j = 0; j < cfg.n; ++j)
                CHECK(pe.hessian(i, j) == doctest::Approx((gp[j] - gm[j]) / (2 * h)).epsilon(1e-5));
        }
    }
}

TEST_CASE("TypeB Hessian quadratic form and convexity")
{
    auto rng = Xoshiro256pp::stream(5, 2);
    boost::random::normal_distribution<double> normal;
    const double nu = 0.8;
    for (int n = 2; n <= 5; ++n) {
        const auto cfg = RootSystemConfig::type_b(n, 1.0, nu);
        for (int rep = 0; rep < 5; ++rep) {
            const Vec v = random_chamber_point(cfg, rng);
            Eigen::VectorXd u(n);
            for (int i = 0; i < n; ++i) u[i] = normal(rng);
            const auto H = potential(cfg, v).hessian;
            double q = 0.0;
            for (int i = 0; i < n; ++i) {
                q += u[i] * u[i] * (1 + (2 * nu + 1) / (2 * v[i] * v[i]));
                for (int j = 0; j < n; ++j) {
                    if (i == j) continue;
                    const double d = v[i] * v[i] - v[j] * v[j];
                    q += (std::pow(u[i] * v[i] - u[j] * v[j], 2) + std::pow(u[i] * v[j] - u[j] * v[i], 2)) / (d * d);
                }
            }
            CHECK(u.dot(H * u) == doctest::Approx(q).epsilon(1e-10));
            CHECK(u.dot(H * u) >= u.squaredNorm());
        }
        const auto ca = RootSystemConfig::type_a(n, 1.0);
        const Vec w = random_chamber_point(ca, rng);
        Eigen::VectorXd u = Eigen::VectorXd::Random(n);
        CHECK(u.dot(potential(ca, w).hessian * u) >= u.squaredNorm());
    }
}

TEST_CASE("peak set closed forms")
{
    const auto r = peak_set(RootSystemConfig::type_a(2, 1.0));
    CHECK(r.minimizer[0] == doctest::Approx(-1.0 / std::numbers::sqrt2).epsilon(1e-12));
    CHECK(r.minimizer[1] == doctest::Approx(1.0 / std::numbers::sqrt2).epsilon(1e-12));
    CHECK(r.identity_residuals.at("potential_minus_K") <= 1e-12);
    CHECK(r.identity_residuals.at("norm2_minus_gamma") <= 1e-12);

    const auto b = peak_set(RootSystemConfig::type_b(2, 1.0, 0.5));
    CHECK(b.minimizer[0] == doctest::Approx(std::sqrt(2 - std::numbers::sqrt2)).epsilon(1e-12));
    CHECK(b.minimizer[1] == doctest::Approx(std::sqrt(2 + std::numbers::sqrt2)).epsilon(1e-12));

    const auto one = peak_set(RootSystemConfig::type_a(1, 1.0));
    CHECK(one.minimizer[0] == 0.0);
    CHECK(one.potential_at_min == 0.0);
}

TEST_CASE("peak set equals polynomial zeros")
{
    for (int n = 1; n <= 30; ++n) {
        const auto r = peak_set(RootSystemConfig::type_a(n, 1.0));
        const auto h = hermite_zeros(n).zeros;
        for (int i = 0; i < n; ++i) CHECK(std::abs(r.minimizer[i] - h[i]) <= 1e-9);
        CHECK(r.identity_residuals.at("potential_minus_K") <= 1e-9);
        CHECK(r.identity_residuals.at("norm2_minus_gamma") <= 1e-9);
        for (double ev : r.hessian_eigenvalues) CHECK(ev >= 1.0 - 1e-12);
    }
    for (double nu : {0.5, 1.0, 2.5}) {
        for (int n = 1; n <= 25; ++n) {
            const auto r = peak_set(RootSystemConfig::type_b(n, 1.0, nu));
            const auto l = laguerre_zeros(n, nu - 0.5).zeros;
            for (int i = 0; i < n; ++i) CHECK(std::abs(r.minimizer[i] * r.minimizer[i] - l[i]) <= 1e-9 * std::max(1.0, l[i]));
            CHECK(r.identity_residuals.at("potential_minus_K") <= 1e-9);
            CHECK(r.identity_residuals.at("norm2_minus_gamma") <= 1e-9);
        }
    }
}

TEST_CASE("F tilde for TypeB")
{
    const auto [f1, g1] = potential_b_tilde({1.0, 1.0, 1.0});
    CHECK(std::abs(f1) < 1e-15);
    for (double g : g1) CHECK(g == 0.0);
    const auto [f2, g2] = potential_b_tilde({2.0});
    CHECK(f2 == doctest::Approx(2.0 - std::log(2.0) - 0.5));
    CHECK(g2[0] == doctest::Approx(1.5));
    const Vec v{0.4, 1.3, 2.2};
    const auto [f, g] = potential_b_tilde(v);
    for (int i = 0; i < 3; ++i) {
        Vec vp = v;
        Vec vm = v;
        vp[i] += 1e-6;
        vm[i] -= 1e-6;
        const double fd = (potential_b_tilde(vp).first - potential_b_tilde(vm).first) / 2e-6;
        CHECK(std::abs(fd - g[i]) <= 1e-6 * std::max(1.0, std::abs(g[i])));
    }
    CHECK_THROWS_AS(potential_b_tilde({-1.0}), DomainError);
}

TEST_CASE("steady-state log density values")
{
    for (int n = 2; n <= 5; ++n) {
        const auto cfg = RootSystemConfig::type_a(n, 3.0);
        const auto h = hermite_zeros(n).zeros;
        const double expected = std::lgamma(n + 1.0) + 0.5 * n * std::log(3.0 / (2 * std::numbers::pi));
        CHECK(steady_state_logdensity(cfg, h) == doctest::Approx(expected).epsilon(1e-10));
    }
    for (double beta : {0.5, 2.0, 7.0}) {
        const auto cfg = RootSystemConfig::type_a(1, beta);
        const double v = 0.7;
        const double expected = -beta * v * v / 2 + 0.5 * std::log(beta / (2 * std::numbers::pi));
        CHECK(steady_state_logdensity(cfg, {v}) == doctest::Approx(expected));
        CHECK(steady_state_logdensity_exact(cfg, {v}) == doctest::Approx(expected));
    }
    CHECK(steady_state_logdensity(RootSystemConfig::type_a(2, 2.0), {1.0, 1.0}) == kNegInf);
}

TEST_CASE("steady-state normalization and the z_beta relation by Monte Carlo")
{
    // proposal: isotropic Gaussian with the exact second moment, folded into the chamber
    auto rng = Xoshiro256pp::stream(17, 0);
    boost::random::normal_distribution<double> normal;
    for (const auto& cfg : {RootSystemConfig::type_a(2, 2.0), RootSystemConfig::type_b(2, 2.0, 0.5)}) {
        const int n = cfg.n;
        const double s2 = (n + cfg.beta * gamma(cfg)) / (n * cfg.beta);
        const long samples = 1'000'000;
        double sum_exact = 0.0;
        double sum_z = 0.0;
        double sq = 0.0;
        Vec v(static_cast<std::size_t>(n));
        const double lw = log_weyl_group_order(cfg);
        for (long k = 0; k < samples; ++k) {
            double r2 = 0.0;
            for (auto& x : v) {
                x = std::sqrt(s2) * normal(rng);
                r2 += x * x;
            }
            const double lq = -0.5 * r2 / s2 - 0.5 * n * std::log(2 * std::numbers::pi * s2);
            const double ez = std::exp(-cfg.beta * potential_value(cfg, v) - lq);
            sum_z += ez;
            Vec c = v;
            project_to_chamber(cfg, c.data());
            // folded proposal density on the chamber is |W| q
            const double e = std::exp(steady_state_logdensity_exact(cfg, c) - lq - lw);
            sum_exact += e;
            sq += e * e;
        }
        const double mass = sum_exact / samples;
        const double se = std::sqrt(sq / samples - mass * mass) / std::sqrt(static_cast<double>(samples));
        CHECK(std::abs(mass - 1.0) <= 0.01);
        CHECK(se < 0.003);
        const double z = sum_z / samples;
        const double z_pred = std::exp(-0.5 * (n + cfg.beta * gamma(cfg)) * std::log(cfg.beta) + log_selberg_const(cfg));
        CHECK(std::abs(z - z_pred) / z_pred <= 0.01);
    }
}

TEST_CASE("large-beta and exact steady states share their shape")
{
    const auto cfg = RootSystemConfig::type_b(3, 4.0, 1.0);
    auto rng = Xoshiro256pp::stream(2, 2);
    const Vec a = random_chamber_point(cfg, rng);
    const Vec b = random_chamber_point(cfg, rng);
    CHECK(steady_state_logdensity(cfg, a) - steady_state_logdensity_exact(cfg, a)
          == doctest::Approx(steady_state_logdensity(cfg, b) - steady_state_logdensity_exact(cfg, b)));
}

TEST_CASE("Gaussian steady-state approximation")
{
    for (double beta : {1.0, 5.0}) {
        const auto cfg = RootSystemConfig::type_a(1, beta);
        const double v = 0.3;
        CHECK(gaussian_steady_approx(cfg, {v})
              == doctest::Approx(std::sqrt(beta / (2 * std::numbers::pi)) * std::exp(-beta * v * v / 2)));
    }

    // total mass over R^N by Monte Carlo
    const auto cfg = RootSystemConfig::type_a(2, 20.0);
    const auto peak = peak_set(cfg);
    auto rng = Xoshiro256pp::stream(9, 9);
    boost::random::normal_distribution<double> normal;
    const double s = 1.2;
    const long samples = 400'000;
    double sum = 0.0;
    for (long k = 0; k < samples; ++k) {
        Vec v{s * normal(rng), s * normal(rng)};
        const double q = std::exp(-0.5 * (v[0] * v[0] + v[1] * v[1]) / (s * s)) / (2 * std::numbers::pi * s * s);
        sum += gaussian_steady_approx(cfg, peak, v) / q;
    }
    CHECK(std::abs(sum / samples - 1.0) <= 0.02);
}

TEST_CASE("variance about the peak follows the Hessian spectrum")
{
    // importance sampling of the exact steady state near s at beta = 100
    const double beta = 100.0;
    const auto cfg = RootSystemConfig::type_a(2, beta);
    const auto peak = peak_set(cfg);
    const auto H = potential(cfg, peak.minimizer).hessian;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H);
    auto rng = Xoshiro256pp::stream(4, 4);
    boost::random::normal_distribution<double> normal;
    const double inflate = 1.5;
    const long samples = 400'000;
    double wsum = 0.0;
    Eigen::Vector2d m2 = Eigen::Vector2d::Zero();
    for (long k = 0; k < samples; ++k) {
        Eigen::Vector2d z;
        double lq = 0.0;
        for (int j = 0; j < 2; ++j) {
            const double sd = inflate / std::sqrt(beta * es.eigenvalues()[j]);
            z[j] = sd * normal(rng);
            lq += -0.5 * z[j] * z[j] / (sd * sd) - std::log(sd);
        }
        const Eigen::Vector2d d = es.eigenvectors() * z;
        const Vec v{peak.minimizer[0] + d[0], peak.minimizer[1] + d[1]};
        if (!in_weyl_chamber(cfg, v)) continue;
        const double w = std::exp(-beta * (potential_value(cfg, v) - peak.potential_at_min) - lq);
        wsum += w;
        m2 += w * z.cwiseProduct(z);
    }
    m2 /= wsum;
    for (int j = 0; j < 2; ++j) {
        const double predicted = 1.0 / (beta * es.eigenvalues()[j]);
        CHECK(std::abs(m2[j] - predicted) / predicted <= 0.10);
    }
}

TEST_CASE("FKE residual of the steady state")
{
    const auto a2 = RootSystemConfig::type_a(2, 2.0);
    const auto ss = [&](const Vec& v) { return steady_state_logdensity(a2, v); };
    const auto r = fke_residual(a2, ss, {-0.5, 0.7}, 1e-4);
    CHECK(r.relative() <= 1e-4);

    const auto wrong = [](const Vec& v) { return -(v[0] * v[0] + v[1] * v[1]); };
    CHECK(fke_residual(a2, wrong, {-0.5, 0.7}, 1e-4).relative() >= 1e-2);

    const auto a1 = RootSystemConfig::type_a(1, 3.0);
    const auto ou = [](const Vec& v) { return -1.5 * v[0] * v[0]; };
    const auto r1 = fke_residual(a1, ou, {0.4}, 1e-4);
    CHECK(std::abs(r1.residual) <= 1e-6);

    CHECK_THROWS_AS(fke_residual(a2, ss, {0.0, 1e-5}, 1e-4), DomainError);

    auto rng = Xoshiro256pp::stream(21, 0);
    for (int n : {2, 3}) {
        for (const auto& cfg : {RootSystemConfig::type_a(n, 2.5), RootSystemConfig::type_b(n, 1.5, 0.7)}) {
            const auto f = [&](const Vec& v) { return steady_state_logdensity(cfg, v); };
            for (int k = 0; k < 5; ++k) CHECK(fke_residual(cfg, f, random_chamber_point(cfg, rng)).relative() <= 1e-4);
        }
    }
}

TEST_CASE("centre-of-mass gradient identity")
{
    const auto a2 = RootSystemConfig::type_a(2, 1.0);
    const double s = 1.0 / std::numbers::sqrt2;
    CHECK(cm_gradient_identity_residual(a2, {-s, s}) <= 1e-12);
    CHECK(cm_gradient_identity_residual(a2, {0.0, 1.0}) <= 1e-12);
    auto rng = Xoshiro256pp::stream(8, 8);
    for (int n = 1; n <= 4; ++n)
        for (const auto& cfg : {RootSystemConfig::type_a(n, 1.0), RootSystemConfig::type_b(n, 1.0, 1.7)})
            for (int k = 0; k < 5; ++k) {
                const Vec v = random_chamber_point(cfg, rng);
                const auto g = potential(cfg, v).gradient;
                double g2 = 0.0;
                for (double x : g) g2 += x * x;
                const double scale = std::max(1.0, g2);
                CHECK(cm_gradient_identity_residual(cfg, v) <= 1e-10 * scale);
            }
}
