#include "dunkl/orthopoly.hpp"

#include "dunkl/rootsys.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

namespace dunkl {

std::pair<double, double> hermite_eval(int n, double x)
{
    if (n < 0) throw DomainError("hermite_eval: negative degree");
    if (n == 0) return {1.0, 0.0};
    double hm1 = 1.0;
    double h = 2.0 * x;
    for (int k = 1; k < n; ++k) {
        const double hp1 = 2.0 * x * h - 2.0 * k * hm1;
        hm1 = h;
        h = hp1;
    }
    return {h, 2.0 * n * hm1};
}

namespace {

double laguerre_value(int n, double alpha, double x)
{
    if (n < 0) return 0.0;
    if (n == 0) return 1.0;
    double lm1 = 1.0;
    double l = 1.0 + alpha - x;
    for (int k = 1; k < n; ++k) {
        const double lp1 = ((2.0 * k + alpha + 1.0 - x) * l - (k + alpha) * lm1) / (k + 1.0);
        lm1 = l;
        l = lp1;
    }
    return l;
}

using Evaluator = std::function<std::pair<double, double>(double)>;

// Newton polish; returns false on non-convergence.
bool newton_polish(const Evaluator& f, double& z, int max_iter = 100)
{
    for (int it = 0; it < max_iter; ++it) {
        const auto [p, dp] = f(z);
        if (dp == 0.0 || !std::isfinite(p) || !std::isfinite(dp)) return false;
        const double dz = p / dp;
        z -= dz;
        if (std::abs(dz) <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(z))) {
            const auto [p2, dp2] = f(z);
            if (dp2 != 0.0) z -= p2 / dp2;
            return true;
        }
    }
    return false;
}

bool certified(const Evaluator& f, const std::vector<double>& z, int n)
{
    if (static_cast<int>(z.size()) != n) return false;
    for (int i = 0; i < n; ++i) {
        if (!std::isfinite(z[i])) return false;
        if (i > 0 && !(z[i] > z[i - 1])) return false;
        const auto [p, dp] = f(z[i]);
        if (!(std::abs(p) <= 1e-10 * std::abs(dp) * std::max(1.0, std::abs(z[i])))) return false;
    }
    return true;
}

double bisect(const std::function<double(double)>& p, double a, double b)
{
    double fa = p(a);
    for (int it = 0; it < 200 && b - a > 1e-15 * std::max(1.0, std::abs(a)); ++it) {
        const double m = 0.5 * (a + b);
        const double fm = p(m);
        if (fm == 0.0) return m;
        if ((fm < 0.0) == (fa < 0.0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    return 0.5 * (a + b);
}

// Zeros of degree k interlace with those of degree k-1; build upwards.
std::vector<double> interlacing_zeros(int n, double lo, double hi,
                                      const std::function<double(int, double)>& value,
                                      const std::function<Evaluator(int)>& evaluator)
{
    std::vector<double> prev;
    for (int k = 1; k <= n; ++k) {
        std::vector<double> edges;
        edges.reserve(prev.size() + 2);
        edges.push_back(lo);
        edges.insert(edges.end(), prev.begin(), prev.end());
        edges.push_back(hi);
        auto pk = [&](double x) { return value(k, x); };
        const Evaluator fk = evaluator(k);
        std::vector<double> cur;
        cur.reserve(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) {
            double z = bisect(pk, edges[i], edges[i + 1]);
            double zp = z;
            if (newton_polish(fk, zp, 20) && zp > edges[i] && zp < edges[i + 1]) z = zp;
            cur.push_back(z);
        }
        prev = std::move(cur);
    }
    return prev;
}

} // namespace

std::pair<double, double> laguerre_eval(int n, double alpha, double x)
{
    if (n < 0) throw DomainError("laguerre_eval: negative degree");
    if (!(alpha > -1.0)) throw DomainError("laguerre_eval: alpha must exceed -1");
    // d/dx L_n^(a) = -L_{n-1}^(a+1), valid at x = 0 as well
    return {laguerre_value(n, alpha, x), -laguerre_value(n - 1, alpha + 1.0, x)};
}

PolyZeros hermite_zeros(int n)
{
    if (n < 1) throw DomainError("hermite_zeros: degree must be positive");
    const Evaluator f = [n](double x) { return hermite_eval(n, x); };

    // asymptotic guesses for the largest zeros, walking downwards
    std::vector<double> z(static_cast<std::size_t>(n));
    const int m = (n + 1) / 2;
    bool ok = true;
    double zz = 0.0;
    for (int i = 0; i < m && ok; ++i) {
        if (i == 0) {
            zz = std::sqrt(2.0 * n + 1.0) - 1.85575 * std::pow(2.0 * n + 1.0, -1.0 / 6.0);
        } else if (i == 1) {
            zz -= 1.14 * std::pow(static_cast<double>(n), 0.426) / zz;
        } else if (i == 2) {
            zz = 1.86 * zz - 0.86 * z[n - 1];
        } else if (i == 3) {
            zz = 1.91 * zz - 0.91 * z[n - 2];
        } else {
            zz = 2.0 * zz - z[n - i + 1];
        }
        ok = newton_polish(f, zz);
        z[n - 1 - i] = zz;
    }
    if (ok) {
        for (int i = 0; i < m; ++i) {
            if (n - 1 - i == i) z[i] = 0.0;
            else z[i] = -z[n - 1 - i];
        }
        if (n % 2 == 1) z[n / 2] = 0.0;
    }
    if (!ok || !certified(f, z, n)) {
        const double bound = 2.0 * std::sqrt(static_cast<double>(n)) + 2.0;
        z = interlacing_zeros(
            n, -bound, bound, [](int k, double x) { return hermite_eval(k, x).first; },
            [](int k) { return Evaluator([k](double x) { return hermite_eval(k, x); }); });
        if (!certified(f, z, n)) throw NumericError("hermite_zeros: failed to converge");
    }
    return {PolyKind::Hermite, n, 0.0, std::move(z)};
}

PolyZeros laguerre_zeros(int n, double alpha)
{
    if (n < 1) throw DomainError("laguerre_zeros: degree must be positive");
    if (!(alpha > -1.0)) throw DomainError("laguerre_zeros: alpha must exceed -1");
    const Evaluator f = [n, alpha](double x) { return laguerre_eval(n, alpha, x); };

    std::vector<double> z(static_cast<std::size_t>(n));
    bool ok = true;
    double zz = 0.0;
    for (int i = 0; i < n && ok; ++i) {
        if (i == 0) {
            zz = (1.0 + alpha) * (3.0 + 0.92 * alpha) / (1.0 + 2.4 * n + 1.8 * alpha);
        } else if (i == 1) {
            zz += (15.0 + 6.25 * alpha) / (1.0 + 0.9 * alpha + 2.5 * n);
        } else {
            const double ai = i - 1;
            zz += ((1.0 + 2.55 * ai) / (1.9 * ai) + 1.26 * ai * alpha / (1.0 + 3.5 * ai)) * (zz - z[i - 2])
                  / (1.0 + 0.3 * alpha);
        }
        ok = newton_polish(f, zz);
        z[i] = zz;
    }
    if (!ok || !certified(f, z, n) || !(z[0] > 0.0)) {
        const double hi = 4.0 * n + 2.0 * alpha + 10.0;
        z = interlacing_zeros(
            n, 0.0, hi, [alpha](int k, double x) { return laguerre_eval(k, alpha, x).first; },
            [alpha](int k) { return Evaluator([k, alpha](double x) { return laguerre_eval(k, alpha, x); }); });
        if (!certified(f, z, n)) throw NumericError("laguerre_zeros: failed to converge");
    }
    return {PolyKind::Laguerre, n, alpha, std::move(z)};
}

std::vector<double> hermite_functions(int kmax, double x)
{
    std::vector<double> psi(static_cast<std::size_t>(kmax + 1));
    psi[0] = std::exp(-0.5 * x * x - 0.25 * std::log(std::numbers::pi));
    if (kmax >= 1) psi[1] = std::numbers::sqrt2 * x * psi[0];
    for (int k = 1; k < kmax; ++k)
        psi[k + 1] = std::sqrt(2.0 / (k + 1.0)) * x * psi[k] - std::sqrt(k / (k + 1.0)) * psi[k - 1];
    return psi;
}

std::vector<double> laguerre_functions(int kmax, double alpha, double u)
{
    std::vector<double> ell(static_cast<std::size_t>(kmax + 1));
    ell[0] = std::exp(0.5 * alpha * std::log(u) - 0.5 * u - 0.5 * std::lgamma(alpha + 1.0));
    auto r = [alpha](int k) { return std::sqrt((k + 1.0) / (k + alpha + 1.0)); };
    if (kmax >= 1) ell[1] = (alpha + 1.0 - u) * r(0) * ell[0];
    for (int k = 1; k < kmax; ++k)
        ell[k + 1] = ((2.0 * k + alpha + 1.0 - u) * r(k) * ell[k] - (k + alpha) * r(k) * r(k - 1) * ell[k - 1])
                     / (k + 1.0);
    return ell;
}

double density_a_exact(int n, double t, double y)
{
    if (n < 1) throw DomainError("density_a_exact: n must be positive");
    if (!(t > 0.0)) throw DomainError("density_a_exact: t must be positive");
    const double z = y / std::sqrt(2.0 * t);
    const auto psi = hermite_functions(n + 1, z);
    const double N = n;
    const double bracket = N * psi[n] * psi[n] - std::sqrt(N * (N + 1.0)) * psi[n + 1] * psi[n - 1];
    return std::max(0.0, bracket) / std::sqrt(2.0 * t);
}

double density_b_exact(int n, double nu, double t, double y)
{
    if (n < 1) throw DomainError("density_b_exact: n must be positive");
    if (!(t > 0.0)) throw DomainError("density_b_exact: t must be positive");
    if (!(nu > -1.0)) throw DomainError("density_b_exact: nu must exceed -1");
    if (!(y > 0.0)) return 0.0;
    const double u = y * y / (2.0 * t);
    const auto ell = laguerre_functions(n + 1, nu, u);
    const double N = n;
    const double bracket = N * (N + nu) * ell[n] * ell[n] + std::sqrt(N * (N + nu)) * ell[n] * ell[n - 1]
                           - std::sqrt(N * (N + 1.0) * (N + nu) * (N + nu + 1.0)) * ell[n + 1] * ell[n - 1];
    return std::max(0.0, 2.0 * bracket / y);
}

} // namespace dunkl
