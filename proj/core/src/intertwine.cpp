#include "dunkl/intertwine.hpp"

#include "dunkl/equilibrium.hpp"
#include "dunkl/rng.hpp"

#include <boost/random/normal_distribution.hpp>

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <tuple>

namespace dunkl {

namespace {

double double_factorial_parts(const Partition& lambda)
{
    // (2 lambda)! = prod (2 lambda_i)!
    double f = 1.0;
    for (int p : lambda.parts())
        for (int k = 2; k <= 2 * p; ++k) f *= k;
    return f;
}

void check_lambda(const Partition& lambda, int n_vars)
{
    if (n_vars < 1) throw DomainError("intertwiner: n_vars must be positive");
    if (lambda.length() > n_vars) throw DomainError("intertwiner: partition longer than n_vars");
}

// (sum_j z_j)^n = sum_{tau |- n} n!/tau! m_tau(z)
SymPoly power_sum_power(int n, int n_vars, double scale)
{
    SymPoly out;
    out.basis = Basis::Monomial;
    out.n_vars = n_vars;
    double nfact = 1.0;
    for (int k = 2; k <= n; ++k) nfact *= k;
    for (const Partition& tau : partitions_of(n, n_vars)) out.add(tau, scale * nfact / partition_factorial(tau));
    return out;
}

} // namespace

double filter_product(const Partition& tau, int n_vars, double beta)
{
    const double alpha = 2.0 / beta;
    return hook_c(tau, alpha) / hook_c_prime(tau, alpha) / gen_pochhammer(beta * n_vars / 2.0, tau, alpha);
}

SymPoly v_a_on_monomial(const Partition& lambda, int n_vars, double beta)
{
    check_lambda(lambda, n_vars);
    if (!(beta > 0.0)) throw DomainError("v_a_on_monomial: beta must be positive");
    const double alpha = 2.0 / beta;
    SymPoly out;
    out.basis = Basis::Jack;
    out.alpha = alpha;
    out.n_vars = n_vars;
    const double pref = partition_factorial(lambda) * static_cast<double>(multinomial_m(lambda, n_vars));
    for (const Partition& tau : partitions_of(lambda.weight(), n_vars)) {
        if (!dominance_leq(lambda, tau)) continue;
        const double u = jack_coeffs(tau, alpha, n_vars).coeff(lambda);
        if (u == 0.0) continue;
        out.add(tau, pref * filter_product(tau, n_vars, beta) * u);
    }
    return out;
}

SymPoly v_b_on_monomial(const Partition& lambda, int n_vars, double beta, double nu)
{
    check_lambda(lambda, n_vars);
    if (!(beta >= 1.0)) throw DomainError("v_b_on_monomial: beta must be >= 1");
    if (!(nu >= 0.0)) throw DomainError("v_b_on_monomial: nu must be >= 0");
    const double alpha = 2.0 / beta;
    const double b = beta * (nu + n_vars - 0.5) / 2.0 + 0.5;
    SymPoly out;
    out.basis = Basis::Jack;
    out.alpha = alpha;
    out.n_vars = n_vars;
    const double pref = double_factorial_parts(lambda) * static_cast<double>(multinomial_m(lambda, n_vars))
                        / std::pow(2.0, 2 * lambda.weight());
    for (const Partition& tau : partitions_of(lambda.weight(), n_vars)) {
        if (!dominance_leq(lambda, tau)) continue;
        const double u = jack_coeffs(tau, alpha, n_vars).coeff(lambda);
        if (u == 0.0) continue;
        out.add(tau, pref * filter_product(tau, n_vars, beta) * u / gen_pochhammer(b, tau, alpha));
    }
    return out;
}

SymPoly v_a_limit(const Partition& lambda, int n_vars)
{
    check_lambda(lambda, n_vars);
    const int n = lambda.weight();
    const double scale = static_cast<double>(multinomial_m(lambda, n_vars)) / std::pow(n_vars, n);
    return power_sum_power(n, n_vars, scale);
}

SymPoly v_b_limit_beta(const Partition& lambda, int n_vars, double nu)
{
    check_lambda(lambda, n_vars);
    const int n = lambda.weight();
    const double scale = double_factorial_parts(lambda) * static_cast<double>(multinomial_m(lambda, n_vars))
                         / (std::pow(2.0, n) * partition_factorial(lambda) * std::pow(n_vars, n)
                            * std::pow(nu + n_vars - 0.5, n));
    return power_sum_power(n, n_vars, scale);
}

SymPoly v_b_limit_nu(const Partition& lambda, int n_vars, double beta)
{
    check_lambda(lambda, n_vars);
    SymPoly va = to_monomial(v_a_on_monomial(lambda, n_vars, beta));
    const double scale = double_factorial_parts(lambda) / partition_factorial(lambda)
                         / std::pow(2.0 * beta, lambda.weight());
    SymPoly out;
    out.basis = Basis::Monomial;
    out.n_vars = n_vars;
    for (const auto& [mu, c] : va.coeffs) out.add(mu, scale * c);
    return out;
}

Vec LinearIntertwiner::apply(const Vec& y) const
{
    const Eigen::Map<const Eigen::VectorXd> v(y.data(), static_cast<Eigen::Index>(y.size()));
    const Eigen::VectorXd r = matrix * v;
    return Vec(r.data(), r.data() + r.size());
}

LinearIntertwiner linear_intertwiner(const RootSystemConfig& cfg)
{
    cfg.validate();
    const int n = cfg.n;
    const int d = rank(cfg);
    LinearIntertwiner li;
    li.matrix = Eigen::MatrixXd::Identity(n, n);
    if (d == 0) return li;
    const double r = cfg.beta * gamma(cfg) / d;
    if (cfg.kind == RootKind::TypeA) {
        const Eigen::VectorXd phi = Eigen::VectorXd::Constant(n, 1.0 / std::sqrt(static_cast<double>(n)));
        li.matrix += r * phi * phi.transpose();
    }
    li.matrix /= 1.0 + r;
    return li;
}

struct HyperSeries::Shells {
    struct Term {
        double weight = 0.0;
        std::vector<std::pair<int, double>> u; // (monomial index, coefficient)
    };
    struct Shell {
        std::vector<Partition> monomials;
        std::vector<Term> terms;
    };
    std::vector<Shell> shells;
};

HyperSeries::HyperSeries(const HyperSeriesParams& params)
    : params_(params)
    , shells_(std::make_unique<Shells>())
{
    if (!(params.alpha > 0.0)) throw DomainError("hyper_series: alpha must be positive");
    if (params.n_vars < 1) throw DomainError("hyper_series: n_vars must be positive");
    if (params.max_degree < 0) throw DomainError("hyper_series: max_degree must be nonnegative");
    const int n = params.n_vars;
    const double alpha = params.alpha;
    for (int d = 0; d <= params.max_degree; ++d) {
        Shells::Shell sh;
        sh.monomials = partitions_of(d, n);
        std::map<Partition, int> index;
        for (std::size_t k = 0; k < sh.monomials.size(); ++k) index[sh.monomials[k]] = static_cast<int>(k);
        for (const Partition& tau : sh.monomials) {
            Shells::Term term;
            double w = hook_c(tau, alpha) / hook_c_prime(tau, alpha) / gen_pochhammer(n / alpha, tau, alpha);
            if (params.b) w /= gen_pochhammer(*params.b, tau, alpha);
            term.weight = w;
            for (const auto& [mu, c] : jack_coeffs(tau, alpha, n).coeffs) term.u.emplace_back(index.at(mu), c);
            sh.terms.push_back(std::move(term));
        }
        shells_->shells.push_back(std::move(sh));
    }
}

HyperSeries::~HyperSeries() = default;
HyperSeries::HyperSeries(HyperSeries&&) noexcept = default;
HyperSeries& HyperSeries::operator=(HyperSeries&&) noexcept = default;

HyperSeriesResult HyperSeries::operator()(const Vec& x, const Vec& y) const
{
    const auto n = static_cast<std::size_t>(params_.n_vars);
    if (x.size() != n || y.size() != n) throw DomainError("hyper_series: argument length mismatch");
    HyperSeriesResult res;
    std::vector<double> mx;
    std::vector<double> my;
    for (const auto& sh : shells_->shells) {
        mx.resize(sh.monomials.size());
        my.resize(sh.monomials.size());
        for (std::size_t k = 0; k < sh.monomials.size(); ++k) {
            mx[k] = monomial_eval(sh.monomials[k], x);
            my[k] = monomial_eval(sh.monomials[k], y);
        }
        double shell = 0.0;
        for (const auto& term : sh.terms) {
            double px = 0.0;
            double py = 0.0;
            for (const auto& [k, c] : term.u) {
                px += c * mx[static_cast<std::size_t>(k)];
                py += c * my[static_cast<std::size_t>(k)];
            }
            shell += term.weight * px * py;
        }
        res.value += shell;
        res.last_shell = std::abs(shell);
    }
    return res;
}

HyperSeriesResult hyper_series(const HyperSeriesParams& params, const Vec& x, const Vec& y)
{
    return HyperSeries(params)(x, y);
}

HyperSeriesParams bessel_kernel_params(const RootSystemConfig& cfg, int max_degree)
{
    cfg.validate();
    HyperSeriesParams p;
    p.alpha = 2.0 / cfg.beta;
    p.n_vars = cfg.n;
    p.max_degree = max_degree;
    if (cfg.kind == RootKind::TypeB) p.b = cfg.beta * (cfg.nu + cfg.n - 0.5) / 2.0 + 0.5;
    return p;
}

namespace {

const HyperSeries& cached_series(const HyperSeriesParams& p)
{
    using Key = std::tuple<double, double, int, int, bool>;
    static std::mutex mutex;
    static std::map<Key, std::unique_ptr<HyperSeries>> cache;
    const Key key{p.alpha, p.b.value_or(0.0), p.n_vars, p.max_degree, p.b.has_value()};
    std::lock_guard lock(mutex);
    auto& slot = cache[key];
    if (!slot) slot = std::make_unique<HyperSeries>(p);
    return *slot;
}

} // namespace

HyperSeriesResult bessel_kernel_series(const RootSystemConfig& cfg, const Vec& x, const Vec& y, int max_degree)
{
    const HyperSeries& hs = cached_series(bessel_kernel_params(cfg, max_degree));
    const double w = weyl_group_order(cfg);
    HyperSeriesResult r;
    if (cfg.kind == RootKind::TypeA) {
        r = hs(x, y);
    } else {
        Vec x2(x.size());
        Vec y2(y.size());
        for (std::size_t i = 0; i < x.size(); ++i) x2[i] = 0.5 * x[i] * x[i];
        for (std::size_t i = 0; i < y.size(); ++i) y2[i] = 0.5 * y[i] * y[i];
        r = hs(x2, y2);
    }
    r.value *= w;
    r.last_shell *= w;
    return r;
}

double bessel_kernel(const RootSystemConfig& cfg, const Vec& x, const Vec& y, int max_degree)
{
    return bessel_kernel_series(cfg, x, y, max_degree).value;
}

double epsilon_beta(const RootSystemConfig& cfg, double x2y2)
{
    const double g = gamma(cfg);
    return -0.5 * g + std::sqrt(0.25 * g * g + x2y2 / cfg.beta);
}

double frozen_kernel(const FrozenKernelParams& params, const Vec& x, const Vec& y)
{
    const RootSystemConfig& cfg = params.cfg;
    cfg.validate();
    const auto n = static_cast<std::size_t>(cfg.n);
    if (x.size() != n || y.size() != n) throw DomainError("frozen_kernel: argument length mismatch");
    double perp = 0.0;
    double x2 = 0.0;
    double y2 = 0.0;
    if (cfg.kind == RootKind::TypeA) {
        double sx = 0.0;
        double sy = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            sx += x[i];
            sy += y[i];
        }
        const double mx = sx / cfg.n;
        const double my = sy / cfg.n;
        perp = sx * sy / cfg.n;
        for (std::size_t i = 0; i < n; ++i) {
            x2 += (x[i] - mx) * (x[i] - mx);
            y2 += (y[i] - my) * (y[i] - my);
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            x2 += x[i] * x[i];
            y2 += y[i] * y[i];
        }
    }
    const double g = gamma(cfg);
    const double x2y2 = x2 * y2;
    if (params.epsilon_beta_mode == EpsilonMode::ExactLimit) return g > 0.0 ? std::exp(x2y2 / (2.0 * g)) : 1.0;
    const double eta = g + epsilon_beta(cfg, x2y2);
    const double par = eta > 0.0 ? x2y2 / (2.0 * eta) : 0.0;
    return std::exp(std::sqrt(cfg.beta) * perp + par);
}

TransitionLogDensity radial_transition_logdensity(const RootSystemConfig& cfg, double t, const Vec& y, const Vec& x,
                                                  int max_degree)
{
    cfg.validate();
    if (!(t > 0.0)) throw DomainError("radial_transition_logdensity: t must be positive");
    const auto n = static_cast<std::size_t>(cfg.n);
    if (x.size() != n || y.size() != n) throw DomainError("radial_transition_logdensity: length mismatch");
    TransitionLogDensity out;
    Vec ys(n);
    Vec yt(n);
    double y2 = 0.0;
    double x2 = 0.0;
    const double st = std::sqrt(t);
    for (std::size_t i = 0; i < n; ++i) {
        ys[i] = y[i] / st;
        yt[i] = y[i] / t;
        y2 += y[i] * y[i];
        x2 += x[i] * x[i];
    }
    const double lw = log_weight(cfg, ys);
    if (!std::isfinite(lw)) {
        out.value = kNegInf;
        return out;
    }
    const HyperSeriesResult k = bessel_kernel_series(cfg, x, yt, max_degree);
    out.last_shell_ratio = k.value != 0.0 ? k.last_shell / std::abs(k.value) : 0.0;
    out.truncation_warning = !k.converged();
    out.value = lw - (y2 + x2) / (2.0 * t) - log_selberg_const(cfg) - 0.5 * cfg.n * std::log(t) + std::log(k.value);
    return out;
}

WeightSampler::WeightSampler(const RootSystemConfig& cfg)
    : cfg_(cfg)
{
    cfg_.validate();
    const double bg = cfg.beta * gamma(cfg);
    const double n = cfg.n;
    const double s2 = (n + bg) / n;
    sigma_ = std::sqrt(s2);
    a_ = 1.0 - 1.0 / s2;
    if (bg > 0.0) log_bound_ = -cfg.beta * freezing_constant(cfg) + 0.5 * bg * std::log(cfg.beta / a_);
    acceptance_ = std::exp(log_selberg_const(cfg) - log_bound_ - 0.5 * n * std::log(2.0 * std::numbers::pi * s2));
}

KernelCheck kernel_reproducing_check(const RootSystemConfig& cfg, const Vec& y, const Vec& z, long n_samples,
                                     int max_degree, std::uint64_t seed)
{
    cfg.validate();
    if (n_samples < 2) throw DomainError("kernel_reproducing_check: need at least two samples");
    const WeightSampler sampler(cfg);
    if (sampler.expected_acceptance() < 1e-3)
        throw DomainError("kernel_reproducing_check: envelope acceptance below 1e-3; reduce N or beta");

    auto rng = Xoshiro256pp::stream(seed, 0);
    boost::random::normal_distribution<double> normal;
    double mean = 0.0;
    double m2 = 0.0;
    long trials = 0;
    for (long k = 0; k < n_samples; ++k) {
        const Vec x = sampler.draw(rng, normal, &trials);
        const double f = bessel_kernel(cfg, x, y, max_degree) * bessel_kernel(cfg, x, z, max_degree);
        const double delta = f - mean;
        mean += delta / static_cast<double>(k + 1);
        m2 += delta * (f - mean);
    }
    KernelCheck out;
    out.lhs_estimate = mean;
    out.std_error = std::sqrt(m2 / static_cast<double>(n_samples - 1) / static_cast<double>(n_samples));
    out.acceptance = static_cast<double>(n_samples) / static_cast<double>(trials);
    double y2 = 0.0;
    double z2 = 0.0;
    for (double v : y) y2 += v * v;
    for (double v : z) z2 += v * v;
    out.rhs_value = weyl_group_order(cfg) * std::exp(0.5 * (y2 + z2)) * bessel_kernel(cfg, y, z, max_degree);
    return out;
}

} // namespace dunkl
