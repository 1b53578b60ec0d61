#include "dunkl/equilibrium.hpp"

#include "dunkl/orthopoly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace dunkl {

namespace {

constexpr int kMaxNewton = 100;

double norm2(const Vec& v)
{
    return std::inner_product(v.begin(), v.end(), v.begin(), 0.0);
}

Vec initial_guess(const RootSystemConfig& cfg)
{
    const int n = cfg.n;
    const double g = gamma(cfg);
    Vec v(static_cast<std::size_t>(n));
    if (cfg.kind == RootKind::TypeA) {
        if (n == 1) return Vec{0.0};
        for (int i = 0; i < n; ++i) v[i] = i - 0.5 * (n - 1);
        const double s = std::sqrt(g / norm2(v));
        for (auto& x : v) x *= s;
    } else {
        const double top = 2.0 * g / (n + 1.0);
        for (int i = 0; i < n; ++i) v[i] = std::sqrt(top * (i + 1.0) / n);
    }
    return v;
}

double log_discriminant_a(const Vec& v)
{
    double acc = 0.0;
    for (std::size_t i = 1; i < v.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) acc += std::log(std::abs(v[i] - v[j]));
    return 2.0 * acc;
}

} // namespace

PotentialEval potential(const RootSystemConfig& cfg, const Vec& v)
{
    const int n = cfg.n;
    if (static_cast<int>(v.size()) != n) throw DomainError("potential: dimension mismatch");
    PotentialEval out;
    out.value = 0.5 * norm2(v);
    out.gradient = v;
    out.hessian = Eigen::MatrixXd::Identity(n, n);
    for (const auto& a : positive_roots(cfg)) {
        const double d = a.dot(v.data());
        if (d == 0.0 || !std::isfinite(d)) throw DomainError("potential: point lies on a chamber wall");
        out.value -= a.kappa * std::log(std::abs(d));
        const double g = a.kappa / d;
        const double h = a.kappa / (d * d);
        out.gradient[a.i] -= g;
        out.hessian(a.i, a.i) += h;
        if (a.j >= 0) {
            out.gradient[a.j] -= g * a.sign;
            out.hessian(a.j, a.j) += h;
            out.hessian(a.i, a.j) += h * a.sign;
            out.hessian(a.j, a.i) += h * a.sign;
        }
    }
    return out;
}

double potential_value(const RootSystemConfig& cfg, const Vec& v)
{
    double f = 0.5 * norm2(v);
    for (const auto& a : positive_roots(cfg)) {
        const double d = a.dot(v.data());
        if (d == 0.0) return std::numeric_limits<double>::infinity();
        f -= a.kappa * std::log(std::abs(d));
    }
    return f;
}

PotentialReport peak_set(const RootSystemConfig& cfg)
{
    cfg.validate();
    const int n = cfg.n;
    PotentialReport rep;
    rep.freezing_constant = freezing_constant(cfg);
    Vec v = initial_guess(cfg);

    auto grad_tol = [](const Vec& x) { return 1e-12 * std::max(1.0, std::sqrt(norm2(x))); };

    PotentialEval pe = potential(cfg, v);
    int it = 0;
    for (; it < kMaxNewton; ++it) {
        const double gnorm = std::sqrt(norm2(pe.gradient));
        if (gnorm <= grad_tol(v)) break;
        const Eigen::Map<const Eigen::VectorXd> g(pe.gradient.data(), n);
        const Eigen::VectorXd d = -pe.hessian.llt().solve(g);
        const double slope = g.dot(d);
        double step = 1.0;
        bool accepted = false;
        Vec trial(static_cast<std::size_t>(n));
        for (int ls = 0; ls < 60; ++ls, step *= 0.5) {
            for (int i = 0; i < n; ++i) trial[i] = v[i] + step * d[i];
            if (!in_weyl_chamber(cfg, trial)) continue;
            const double ft = potential_value(cfg, trial);
            if (ft <= pe.value + 1e-4 * step * slope) {
                accepted = true;
                break;
            }
            // at rounding level the value cannot decrease; accept on a smaller gradient
            if (std::abs(ft - pe.value) <= 1e-13 * std::max(1.0, std::abs(pe.value))) {
                const PotentialEval pt = potential(cfg, trial);
                if (norm2(pt.gradient) < norm2(pe.gradient)) {
                    accepted = true;
                    break;
                }
            }
        }
        if (!accepted) {
            if (gnorm <= 1e2 * grad_tol(v)) break;
            throw NumericError("peak_set: line search failed");
        }
        v = trial;
        pe = potential(cfg, v);
    }
    if (it == kMaxNewton) throw NumericError("peak_set: Newton did not converge");

    rep.minimizer = v;
    rep.potential_at_min = pe.value;
    rep.newton_iterations = it;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(pe.hessian);
    rep.hessian_eigenvalues.assign(es.eigenvalues().data(), es.eigenvalues().data() + n);

    rep.identity_residuals["potential_minus_K"] = std::abs(pe.value - rep.freezing_constant);
    rep.identity_residuals["norm2_minus_gamma"] = std::abs(norm2(v) - gamma(cfg));
    rep.identity_residuals["gradient_norm"] = std::sqrt(norm2(pe.gradient));

    double sum_ilogi = 0.0;
    for (int i = 2; i <= n; ++i) sum_ilogi += i * std::log(static_cast<double>(i));
    if (cfg.kind == RootKind::TypeA) {
        const double rhs = sum_ilogi - 0.5 * n * (n - 1.0) * std::numbers::ln2;
        rep.identity_residuals["log_discriminant"] = std::abs(log_discriminant_a(v) - rhs);
    } else {
        const double alpha = cfg.nu - 0.5;
        Vec l(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) l[i] = v[i] * v[i];
        double sum_log = 0.0;
        double rhs_log = 0.0;
        double rhs_disc = 0.0;
        for (int i = 1; i <= n; ++i) {
            sum_log += std::log(l[i - 1]);
            rhs_log += std::log(alpha + i);
            rhs_disc += (i - 1.0) * std::log(alpha + i) + i * std::log(static_cast<double>(i));
        }
        rep.identity_residuals["log_product"] = std::abs(sum_log - rhs_log);
        rep.identity_residuals["log_discriminant"] = std::abs(log_discriminant_a(l) - rhs_disc);
    }
    return rep;
}

std::pair<double, Vec> potential_b_tilde(const Vec& v)
{
    double f = 0.5 * norm2(v) - 0.5 * static_cast<double>(v.size());
    Vec g(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!(v[i] > 0.0)) throw DomainError("potential_b_tilde: coordinates must be positive");
        f -= std::log(v[i]);
        g[i] = v[i] - 1.0 / v[i];
    }
    return {f, g};
}

double steady_state_logdensity(const RootSystemConfig& cfg, const Vec& v)
{
    const double f = potential_value(cfg, v);
    if (!std::isfinite(f)) return kNegInf;
    const double n = cfg.n;
    const double b = cfg.beta;
    double log_pref = std::lgamma(n + 1.0);
    if (cfg.kind == RootKind::TypeA) log_pref += 0.5 * n * std::log(b / (2.0 * std::numbers::pi));
    else log_pref += 0.5 * n * std::log(2.0 * b);
    return log_pref - b * (f - freezing_constant(cfg));
}

double steady_state_logdensity_exact(const RootSystemConfig& cfg, const Vec& v)
{
    const double f = potential_value(cfg, v);
    if (!std::isfinite(f)) return kNegInf;
    const double b = cfg.beta;
    return log_weyl_group_order(cfg) + 0.5 * (cfg.n + b * gamma(cfg)) * std::log(b) - log_selberg_const(cfg) - b * f;
}

void for_each_weyl_image(const RootSystemConfig& cfg, const Vec& v, const std::function<void(const Vec&)>& fn)
{
    const int n = cfg.n;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    Vec img(static_cast<std::size_t>(n));
    do {
        if (cfg.kind == RootKind::TypeA) {
            for (int i = 0; i < n; ++i) img[i] = v[perm[i]];
            fn(img);
        } else {
            for (unsigned mask = 0; mask < (1u << n); ++mask) {
                for (int i = 0; i < n; ++i) img[i] = (mask >> i & 1u) ? -v[perm[i]] : v[perm[i]];
                fn(img);
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
}

double gaussian_steady_approx(const RootSystemConfig& cfg, const PotentialReport& peak, const Vec& v)
{
    const int n = cfg.n;
    if (cfg.kind == RootKind::TypeA && n > 8) throw DomainError("gaussian_steady_approx: TypeA limited to N <= 8");
    if (cfg.kind == RootKind::TypeB && n > 6) throw DomainError("gaussian_steady_approx: TypeB limited to N <= 6");
    const PotentialEval pe = potential(cfg, peak.minimizer);
    const Eigen::MatrixXd& H = pe.hessian;
    const double log_det = 2.0 * Eigen::MatrixXd(H.llt().matrixL()).diagonal().array().log().sum();
    const double b = cfg.beta;
    const double log_pref = 0.5 * n * std::log(b / (2.0 * std::numbers::pi)) + 0.5 * log_det - log_weyl_group_order(cfg);

    // H(rho s) = rho H rho^T, so each term is a Gaussian in rho^{-1} v about s
    const Eigen::Map<const Eigen::VectorXd> s(peak.minimizer.data(), n);
    double acc = 0.0;
    for_each_weyl_image(cfg, v, [&](const Vec& img) {
        const Eigen::Map<const Eigen::VectorXd> w(img.data(), n);
        const Eigen::VectorXd d = w - s;
        acc += std::exp(-0.5 * b * d.dot(H * d));
    });
    return std::exp(log_pref) * acc;
}

double gaussian_steady_approx(const RootSystemConfig& cfg, const Vec& v)
{
    return gaussian_steady_approx(cfg, peak_set(cfg), v);
}

FkeResidual fke_residual(const RootSystemConfig& cfg, const LogDensityFn& logdensity, const Vec& v, double h)
{
    const int n = cfg.n;
    const double vnorm = std::sqrt(norm2(v));
    if (!(h > 0.0)) h = 1e-4 * std::max(1.0, vnorm);
    const auto roots = positive_roots(cfg);
    for (const auto& a : roots) {
        if (std::abs(a.dot(v.data())) / std::sqrt(a.norm2()) <= 2.0 * h)
            throw DomainError("fke_residual: insufficient margin to the chamber walls");
    }
    const double l0 = logdensity(v);
    if (!std::isfinite(l0)) throw DomainError("fke_residual: density vanishes at v");
    auto g = [&](const Vec& x) { return std::exp(logdensity(x) - l0); };

    Vec grad(static_cast<std::size_t>(n));
    double lap = 0.0;
    Vec x = v;
    for (int i = 0; i < n; ++i) {
        x[i] = v[i] + h;
        const double gp = g(x);
        x[i] = v[i] - h;
        const double gm = g(x);
        x[i] = v[i];
        grad[i] = (gp - gm) / (2.0 * h);
        lap += (gp - 2.0 + gm) / (h * h);
    }

    FkeResidual out;
    auto add = [&out](double term) {
        out.residual += term;
        out.scale += std::abs(term);
    };
    add(lap / cfg.beta);
    double vdot = 0.0;
    for (int i = 0; i < n; ++i) vdot += v[i] * grad[i];
    add(vdot);
    add(static_cast<double>(n));
    for (const auto& a : roots) {
        const double d = a.dot(v.data());
        const double agrad = a.dot(grad.data());
        add(-a.kappa * agrad / d);
        const double refl = g(reflect(a, v));
        add(a.kappa * 0.5 * a.norm2() * (1.0 + refl) / (d * d));
    }
    return out;
}

double cm_gradient_identity_residual(const RootSystemConfig& cfg, const Vec& v)
{
    const PotentialEval pe = potential(cfg, v);
    const double lhs = norm2(pe.gradient);
    double rhs = norm2(v) - 2.0 * gamma(cfg);
    for (const auto& a : positive_roots(cfg)) {
        const double d = a.dot(v.data());
        rhs += a.norm2() * a.kappa * a.kappa / (d * d);
    }
    return std::abs(lhs - rhs);
}

} // namespace dunkl
