#pragma once

#include "dunkl/rootsys.hpp"
#include "dunkl/symfunc.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <memory>
#include <optional>

namespace dunkl {

// V_A m_lambda in the Jack(2/beta) basis.
SymPoly v_a_on_monomial(const Partition& lambda, int n_vars, double beta);

// V_B m_lambda[x^2] in the Jack(2/beta) basis of the squared variables.
SymPoly v_b_on_monomial(const Partition& lambda, int n_vars, double beta, double nu);

// beta -> infinity limit of V_A m_lambda, monomial basis.
SymPoly v_a_limit(const Partition& lambda, int n_vars);
// beta -> infinity limit of beta^{|lambda|} V_B m_lambda[x^2], monomial basis in x^2.
SymPoly v_b_limit_beta(const Partition& lambda, int n_vars, double nu);
// nu -> infinity limit of nu^{|lambda|} V_B m_lambda[x^2], monomial basis in x^2.
SymPoly v_b_limit_nu(const Partition& lambda, int n_vars, double beta);

// c_tau / (c'_tau (beta N/2)_tau) at alpha = 2/beta.
double filter_product(const Partition& tau, int n_vars, double beta);

struct LinearIntertwiner {
    Eigen::MatrixXd matrix;

    Vec apply(const Vec& y) const;
};

LinearIntertwiner linear_intertwiner(const RootSystemConfig& cfg);

struct HyperSeriesParams {
    double alpha = 1.0;
    std::optional<double> b; // present for 0F1
    int n_vars = 1;
    int max_degree = 30;
};

struct HyperSeriesResult {
    double value = 0.0;
    double last_shell = 0.0; // |sum over |tau| = max_degree|
    bool converged() const { return std::abs(last_shell) <= 1e-8 * std::abs(value); }
};

// Reusable 0F0 / 0F1 evaluator with per-shell Jack data precomputed.
class HyperSeries {
public:
    explicit HyperSeries(const HyperSeriesParams& params);
    ~HyperSeries();
    HyperSeries(HyperSeries&&) noexcept;
    HyperSeries& operator=(HyperSeries&&) noexcept;

    HyperSeriesResult operator()(const Vec& x, const Vec& y) const;
    const HyperSeriesParams& params() const { return params_; }

private:
    struct Shells;
    HyperSeriesParams params_;
    std::unique_ptr<Shells> shells_;
};

HyperSeriesResult hyper_series(const HyperSeriesParams& params, const Vec& x, const Vec& y);

// sum_rho V e^{rho x . y}: N! 0F0(x,y) or 2^N N! 0F1(b; x^2/2, y^2/2).
HyperSeriesParams bessel_kernel_params(const RootSystemConfig& cfg, int max_degree = 30);
HyperSeriesResult bessel_kernel_series(const RootSystemConfig& cfg, const Vec& x, const Vec& y, int max_degree = 30);
double bessel_kernel(const RootSystemConfig& cfg, const Vec& x, const Vec& y, int max_degree = 30);

enum class EpsilonMode { ExactLimit, Corrected };

struct FrozenKernelParams {
    RootSystemConfig cfg;
    EpsilonMode epsilon_beta_mode = EpsilonMode::ExactLimit;
};

// Large-beta approximation of V e^{sqrt(beta) x . y}.
double frozen_kernel(const FrozenKernelParams& params, const Vec& x, const Vec& y);
double epsilon_beta(const RootSystemConfig& cfg, double x2y2);

struct TransitionLogDensity {
    double value = 0.0;
    double last_shell_ratio = 0.0;
    bool truncation_warning = false;
};

// log p(t, y | x) of the radial process over the Weyl chamber.
TransitionLogDensity radial_transition_logdensity(const RootSystemConfig& cfg, double t, const Vec& y, const Vec& x,
                                                  int max_degree = 30);

struct KernelCheck {
    double lhs_estimate = 0.0;
    double rhs_value = 0.0;
    double std_error = 0.0;
    double acceptance = 0.0;
    double z_score() const { return std_error > 0.0 ? (lhs_estimate - rhs_value) / std_error : 0.0; }
};

// Monte Carlo check of (1/c) int K(x,y) K(x,z) e^{-x^2/2} w(x) dx = |W| e^{(y^2+z^2)/2} K(y,z)
// with symmetrized kernels K.
KernelCheck kernel_reproducing_check(const RootSystemConfig& cfg, const Vec& y, const Vec& z, long n_samples,
                                     int max_degree, std::uint64_t seed);

// Draws from the density proportional to e^{-x^2/2} w_beta(x) on R^N by rejection.
class WeightSampler {
public:
    explicit WeightSampler(const RootSystemConfig& cfg);
    double expected_acceptance() const { return acceptance_; }
    template <class Rng, class Normal>
    Vec draw(Rng& rng, Normal& normal, long* trials = nullptr) const;

private:
    RootSystemConfig cfg_;
    double sigma_ = 1.0;
    double a_ = 0.0;
    double log_bound_ = 0.0;
    double acceptance_ = 1.0;
};

} // namespace dunkl

#include "dunkl/intertwine_impl.hpp"
