#include "dunkl/symfunc.hpp"

#include "dunkl/rootsys.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>
#include <memory>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>
#include <tuple>

namespace dunkl {

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts))
{
}

Partition::Partition(std::vector<int> parts)
    : parts_(std::move(parts))
{
    for (int p : parts_)
        if (p < 0) throw DomainError("Partition: negative part");
    std::erase(parts_, 0);
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int Partition::weight() const
{
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::str() const
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    os << ')';
    return os.str();
}

void SymPoly::add(const Partition& p, double c)
{
    if (c == 0.0) return;
    auto [it, inserted] = coeffs.try_emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0.0) coeffs.erase(it);
    }
}

double SymPoly::coeff(const Partition& p) const
{
    const auto it = coeffs.find(p);
    return it == coeffs.end() ? 0.0 : it->second;
}

Partition conjugate(const Partition& lambda)
{
    std::vector<int> c(static_cast<std::size_t>(lambda[0]), 0);
    for (int p : lambda.parts())
        for (int j = 0; j < p; ++j) ++c[static_cast<std::size_t>(j)];
    return Partition(std::move(c));
}

bool dominance_leq(const Partition& mu, const Partition& lambda)
{
    if (mu.weight() != lambda.weight()) return false;
    const int len = std::max(mu.length(), lambda.length());
    int sm = 0;
    int sl = 0;
    for (int k = 0; k < len; ++k) {
        sm += mu[k];
        sl += lambda[k];
        if (sm > sl) return false;
    }
    return true;
}

std::vector<Partition> partitions_of(int weight, int max_len)
{
    if (weight < 0) throw DomainError("partitions_of: negative weight");
    std::vector<Partition> out;
    if (weight == 0) {
        out.emplace_back();
        return out;
    }
    if (max_len <= 0) return out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int largest) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) == max_len) return;
        for (int p = std::min(remaining, largest); p >= 1; --p) {
            // remaining slots must be able to absorb the rest
            if (static_cast<long>(p) * (max_len - static_cast<int>(cur.size())) < remaining) break;
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(weight, weight);
    return out;
}

double monomial_eval(const Partition& lambda, const std::vector<double>& x)
{
    const int n = static_cast<int>(x.size());
    if (lambda.length() > n) return 0.0;
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < lambda.length(); ++i) e[static_cast<std::size_t>(i)] = lambda[i];
    std::sort(e.begin(), e.end());
    double acc = 0.0;
    do {
        double term = 1.0;
        for (int i = 0; i < n; ++i)
            if (e[i]) term *= std::pow(x[i], e[i]);
        acc += term;
    } while (std::next_permutation(e.begin(), e.end()));
    return acc;
}

double elementary_eval(int k, const std::vector<double>& x)
{
    if (k < 0) return 0.0;
    std::vector<double> e(static_cast<std::size_t>(k + 1), 0.0);
    e[0] = 1.0;
    for (double xi : x)
        for (int j = k; j >= 1; --j) e[j] += xi * e[j - 1];
    return e[k];
}

double complete_homogeneous_eval(int k, const std::vector<double>& x)
{
    if (k < 0) return 0.0;
    std::vector<double> h(static_cast<std::size_t>(k + 1), 0.0);
    h[0] = 1.0;
    for (double xi : x)
        for (int j = 1; j <= k; ++j) h[j] += xi * h[j - 1];
    return h[k];
}

double schur_eval(const Partition& lambda, const std::vector<double>& x)
{
    const int n = static_cast<int>(x.size());
    if (lambda.length() > n) return 0.0;
    if (lambda.empty()) return 1.0;

    double min_gap = std::numeric_limits<double>::infinity();
    double scale = 0.0;
    for (int i = 0; i < n; ++i) {
        scale = std::max(scale, std::abs(x[i]));
        for (int j = 0; j < i; ++j) min_gap = std::min(min_gap, std::abs(x[i] - x[j]));
    }
    if (n > 1 && min_gap > 1e-3 * std::max(1.0, scale)) {
        Eigen::MatrixXd num(n, n);
        Eigen::MatrixXd den(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                num(i, j) = std::pow(x[i], lambda[j] + n - 1 - j);
                den(i, j) = std::pow(x[i], n - 1 - j);
            }
        return num.partialPivLu().determinant() / den.partialPivLu().determinant();
    }
    // near ties: Jacobi-Trudi in complete homogeneous polynomials
    const int l = lambda.length();
    const int kmax = lambda[0] + l;
    std::vector<double> h(static_cast<std::size_t>(kmax + 1));
    for (int k = 0; k <= kmax; ++k) h[k] = complete_homogeneous_eval(k, x);
    Eigen::MatrixXd jt(l, l);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
            const int k = lambda[i] - i + j;
            jt(i, j) = (k < 0) ? 0.0 : h[static_cast<std::size_t>(k)];
        }
    return jt.partialPivLu().determinant();
}

double jack_eigenvalue(const Partition& tau, double alpha, int n_vars)
{
    double e = 0.0;
    for (int i = 0; i < tau.length(); ++i) e += tau[i] * (tau[i] - 1.0 - 2.0 * i / alpha);
    return e + 2.0 / alpha * (n_vars - 1.0) * tau.weight();
}

namespace {

struct JackKey {
    Partition lambda;
    double alpha;
    int n_vars;
    bool operator<(const JackKey& o) const
    {
        return std::tie(lambda, alpha, n_vars) < std::tie(o.lambda, o.alpha, o.n_vars);
    }
};

struct JackCache {
    std::shared_mutex mutex;
    std::map<JackKey, std::unique_ptr<SymPoly>> entries;
};

JackCache& jack_cache()
{
    static JackCache cache;
    return cache;
}

// weight-independent part of the eigenvalue; constant shifts cancel in differences
double jack_diag(const Partition& nu, double alpha)
{
    double e = 0.0;
    for (int i = 0; i < nu.length(); ++i) e += nu[i] * (nu[i] - 1.0 - 2.0 * i / alpha);
    return e;
}

SymPoly compute_jack(const Partition& lambda, double alpha, int n_vars)
{
    SymPoly p;
    p.basis = Basis::Monomial;
    p.n_vars = n_vars;
    const double e_lambda = jack_diag(lambda, alpha);
    std::map<Partition, double, ReverseLex> u;
    u[lambda] = 1.0;
    for (const Partition& nu : partitions_of(lambda.weight(), n_vars)) {
        if (!(nu < lambda) || !dominance_leq(nu, lambda)) continue;
        double acc = 0.0;
        const int l = nu.length();
        std::vector<int> raised(nu.parts());
        for (int i = 0; i < l; ++i)
            for (int j = i + 1; j < l; ++j)
                for (int t = 1; t <= nu[j]; ++t) {
                    raised = nu.parts();
                    raised[static_cast<std::size_t>(i)] += t;
                    raised[static_cast<std::size_t>(j)] -= t;
                    const auto it = u.find(Partition(raised));
                    if (it != u.end()) acc += (nu[i] - nu[j] + 2.0 * t) * it->second;
                }
        const double gap = e_lambda - jack_diag(nu, alpha);
        if (std::abs(gap) <= 1e-12 * std::max(1.0, std::abs(e_lambda)))
            throw NumericError("jack_coeffs: eigenvalue collision");
        const double c = 2.0 / alpha * acc / gap;
        if (c != 0.0) u[nu] = c;
    }
    for (const auto& [k, c] : u) p.add(k, c);
    return p;
}

} // namespace

const SymPoly& jack_coeffs(const Partition& lambda, double alpha, int n_vars)
{
    if (!(alpha > 0.0)) throw DomainError("jack_coeffs: alpha must be positive");
    if (lambda.length() > n_vars) throw DomainError("jack_coeffs: partition longer than n_vars");
    JackCache& cache = jack_cache();
    const JackKey key{lambda, alpha, n_vars};
    {
        std::shared_lock lock(cache.mutex);
        const auto it = cache.entries.find(key);
        if (it != cache.entries.end()) return *it->second;
    }
    auto value = std::make_unique<SymPoly>(compute_jack(lambda, alpha, n_vars));
    std::unique_lock lock(cache.mutex);
    auto [it, inserted] = cache.entries.try_emplace(key, std::move(value));
    return *it->second;
}

double jack_eval(const Partition& lambda, double alpha, const std::vector<double>& x)
{
    const SymPoly& p = jack_coeffs(lambda, alpha, static_cast<int>(x.size()));
    double acc = 0.0;
    for (const auto& [mu, c] : p.coeffs) acc += c * monomial_eval(mu, x);
    return acc;
}

double sympoly_eval(const SymPoly& p, const std::vector<double>& x)
{
    double acc = 0.0;
    for (const auto& [mu, c] : p.coeffs) {
        acc += c * (p.basis == Basis::Monomial ? monomial_eval(mu, x) : jack_eval(mu, p.alpha, x));
    }
    return acc;
}

SymPoly to_monomial(const SymPoly& p)
{
    if (p.basis == Basis::Monomial) return p;
    SymPoly out;
    out.basis = Basis::Monomial;
    out.n_vars = p.n_vars;
    for (const auto& [tau, c] : p.coeffs) {
        const SymPoly& j = jack_coeffs(tau, p.alpha, p.n_vars);
        for (const auto& [mu, u] : j.coeffs) out.add(mu, c * u);
    }
    return out;
}

double hook_c(const Partition& tau, double alpha)
{
    const Partition tc = conjugate(tau);
    double c = 1.0;
    for (int i = 1; i <= tau.length(); ++i)
        for (int j = 1; j <= tau[i - 1]; ++j) c *= alpha * (tau[i - 1] - j) + tc[j - 1] - i + 1;
    return c;
}

double hook_c_prime(const Partition& tau, double alpha)
{
    const Partition tc = conjugate(tau);
    double c = 1.0;
    for (int i = 1; i <= tau.length(); ++i)
        for (int j = 1; j <= tau[i - 1]; ++j) c *= alpha * (tau[i - 1] - j + 1) + tc[j - 1] - i;
    return c;
}

double gen_pochhammer(double b, const Partition& tau, double alpha)
{
    double acc = 1.0;
    for (int i = 0; i < tau.length(); ++i) {
        const double base = b - i / alpha;
        for (int k = 0; k < tau[i]; ++k) {
            const double f = base + k;
            if (f == 0.0) throw DomainError("gen_pochhammer: pole encountered");
            acc *= f;
        }
    }
    return acc;
}

std::uint64_t multinomial_m(const Partition& lambda, int n_vars)
{
    if (lambda.length() > n_vars) throw DomainError("multinomial_m: partition longer than n_vars");
    if (n_vars > 20) throw DomainError("multinomial_m: n_vars > 20 overflows");
    auto fact = [](int k) {
        std::uint64_t f = 1;
        for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
        return f;
    };
    std::uint64_t denom = fact(n_vars - lambda.length());
    int run = 1;
    for (int i = 1; i <= lambda.length(); ++i) {
        if (i < lambda.length() && lambda[i] == lambda[i - 1]) {
            ++run;
        } else {
            denom *= fact(run);
            run = 1;
        }
    }
    return fact(n_vars) / denom;
}

double partition_factorial(const Partition& lambda)
{
    double f = 1.0;
    for (int p : lambda.parts())
        for (int k = 2; k <= p; ++k) f *= k;
    return f;
}

} // namespace dunkl
