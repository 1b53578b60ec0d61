#include "dunkl/rootsys.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace dunkl {

std::string to_string(RootKind kind)
{
    return kind == RootKind::TypeA ? "A" : "B";
}

RootKind root_kind_from_string(const std::string& s)
{
    if (s == "A" || s == "a") return RootKind::TypeA;
    if (s == "B" || s == "b") return RootKind::TypeB;
    throw DomainError("unknown root system type '" + s + "' (expected A or B)");
}

RootSystemConfig RootSystemConfig::type_a(int n, double beta)
{
    RootSystemConfig cfg{RootKind::TypeA, n, beta, 0.0};
    cfg.validate();
    return cfg;
}

RootSystemConfig RootSystemConfig::type_b(int n, double beta, double nu)
{
    RootSystemConfig cfg{RootKind::TypeB, n, beta, nu};
    cfg.validate();
    return cfg;
}

void RootSystemConfig::validate() const
{
    if (n < 1) throw DomainError("particle count must be positive");
    if (!(beta > 0.0) || !std::isfinite(beta)) throw DomainError("beta must be positive and finite");
    if (kind == RootKind::TypeB) {
        if (beta < 1.0) throw DomainError("TypeB requires beta >= 1");
        if (!(nu >= 0.0) || !std::isfinite(nu)) throw DomainError("TypeB requires nu >= 0");
    }
}

std::vector<PositiveRoot> positive_roots(const RootSystemConfig& cfg)
{
    std::vector<PositiveRoot> roots;
    const int n = cfg.n;
    if (cfg.kind == RootKind::TypeA) {
        roots.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
        for (int i = 1; i < n; ++i)
            for (int j = 0; j < i; ++j)
                roots.push_back({i, j, -1, 1.0});
    } else {
        roots.reserve(static_cast<std::size_t>(n * n));
        const double k_short = cfg.nu + 0.5;
        for (int i = 0; i < n; ++i)
            roots.push_back({i, -1, 0, k_short});
        for (int i = 1; i < n; ++i)
            for (int j = 0; j < i; ++j) {
                roots.push_back({i, j, -1, 1.0});
                roots.push_back({i, j, +1, 1.0});
            }
    }
    return roots;
}

double gamma(const RootSystemConfig& cfg)
{
    const double n = cfg.n;
    if (cfg.kind == RootKind::TypeA) return n * (n - 1.0) / 2.0;
    return n * (n + cfg.nu - 0.5);
}

int rank(const RootSystemConfig& cfg)
{
    return cfg.kind == RootKind::TypeA ? cfg.n - 1 : cfg.n;
}

double log_weyl_group_order(const RootSystemConfig& cfg)
{
    double lw = std::lgamma(cfg.n + 1.0);
    if (cfg.kind == RootKind::TypeB) lw += cfg.n * std::numbers::ln2;
    return lw;
}

double weyl_group_order(const RootSystemConfig& cfg)
{
    return std::exp(log_weyl_group_order(cfg));
}

double log_weight(const RootSystemConfig& cfg, const Vec& x)
{
    const int n = cfg.n;
    double acc = 0.0;
    for (int i = 1; i < n; ++i)
        for (int j = 0; j < i; ++j) {
            const double d = cfg.kind == RootKind::TypeA ? x[i] - x[j] : x[i] * x[i] - x[j] * x[j];
            if (d == 0.0) return kNegInf;
            acc += std::log(std::abs(d));
        }
    acc *= cfg.beta;
    if (cfg.kind == RootKind::TypeB) {
        const double k_short = cfg.beta * (cfg.nu + 0.5);
        double s = 0.0;
        for (int i = 0; i < n; ++i) {
            if (x[i] == 0.0) {
                if (k_short == 0.0) continue;
                return kNegInf;
            }
            s += std::log(std::abs(x[i]));
        }
        acc += k_short * s;
    }
    return acc;
}

double log_selberg_const(const RootSystemConfig& cfg)
{
    const double b = cfg.beta;
    const double h = 0.5 * b;
    double acc = 0.0;
    if (cfg.kind == RootKind::TypeA) {
        const double half_log_2pi = 0.5 * std::log(2.0 * std::numbers::pi);
        for (int j = 1; j <= cfg.n; ++j)
            acc += half_log_2pi + std::lgamma(1.0 + j * h) - std::lgamma(1.0 + h);
        return acc;
    }
    acc = 0.5 * (b * gamma(cfg) + cfg.n) * std::numbers::ln2;
    for (int j = 1; j <= cfg.n; ++j)
        acc += std::lgamma(1.0 + j * h) + std::lgamma(h * (cfg.nu + j - 0.5) + 0.5) - std::lgamma(h + 1.0);
    return acc;
}

double freezing_constant(const RootSystemConfig& cfg)
{
    const double n = cfg.n;
    double sum_ilogi = 0.0;
    for (int i = 2; i <= cfg.n; ++i) sum_ilogi += i * std::log(static_cast<double>(i));
    if (cfg.kind == RootKind::TypeA)
        return 0.25 * n * (n - 1.0) * (1.0 + std::numbers::ln2) - 0.5 * sum_ilogi;
    double sum_b = 0.0;
    for (int i = 1; i <= cfg.n; ++i) {
        const double a = cfg.nu + i - 0.5;
        if (a > 0.0) sum_b += a * std::log(a);
    }
    return 0.5 * n * (n + cfg.nu - 0.5) - 0.5 * sum_ilogi - 0.5 * sum_b;
}

bool in_weyl_chamber(const RootSystemConfig& cfg, const Vec& x)
{
    if (static_cast<int>(x.size()) != cfg.n) return false;
    if (cfg.kind == RootKind::TypeB && !(x[0] > 0.0)) return false;
    for (int i = 1; i < cfg.n; ++i)
        if (!(x[i - 1] < x[i])) return false;
    return true;
}

int project_to_chamber(const RootSystemConfig& cfg, double* x)
{
    const int n = cfg.n;
    int repairs = 0;
    if (cfg.kind == RootKind::TypeB) {
        for (int i = 0; i < n; ++i) x[i] = std::abs(x[i]);
    }
    // insertion sort: states arrive nearly sorted
    for (int i = 1; i < n; ++i) {
        const double v = x[i];
        int k = i - 1;
        while (k >= 0 && x[k] > v) {
            x[k + 1] = x[k];
            --k;
        }
        x[k + 1] = v;
    }
    constexpr double eps = std::numeric_limits<double>::epsilon();
    if (cfg.kind == RootKind::TypeB && x[0] == 0.0) {
        x[0] = eps;
        ++repairs;
    }
    for (int i = 1; i < n; ++i) {
        if (!(x[i] > x[i - 1])) {
            x[i] = x[i - 1] + eps * std::max(1.0, std::abs(x[i - 1]));
            ++repairs;
        }
    }
    return repairs;
}

Vec reflect(const PositiveRoot& alpha, const Vec& v)
{
    Vec out = v;
    const double c = 2.0 * alpha.dot(v.data()) / alpha.norm2();
    out[alpha.i] -= c;
    if (alpha.j >= 0) out[alpha.j] -= c * alpha.sign;
    return out;
}

} // namespace dunkl
