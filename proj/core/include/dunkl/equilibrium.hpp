#pragma once

#include "dunkl/rootsys.hpp"

#include <Eigen/Dense>

#include <functional>
#include <map>
#include <string>
#include <utility>

namespace dunkl {

struct PotentialEval {
    double value = 0.0;
    Vec gradient;
    Eigen::MatrixXd hessian;
};

// F_R(v) = |v|^2/2 - sum_{alpha>0} kappa(alpha) log|alpha.v| with gradient and Hessian.
// Throws DomainError on a chamber wall.
PotentialEval potential(const RootSystemConfig& cfg, const Vec& v);

// Value only; +inf on a wall.
double potential_value(const RootSystemConfig& cfg, const Vec& v);

struct PotentialReport {
    Vec minimizer;
    double potential_at_min = 0.0;
    double freezing_constant = 0.0;
    std::map<std::string, double> identity_residuals;
    int newton_iterations = 0;
    Vec hessian_eigenvalues;
};

// Peak set (Fekete points) of F_R by damped Newton.
PotentialReport peak_set(const RootSystemConfig& cfg);

// F~_B(v) = |v|^2/2 - sum log v_i - N/2 and its gradient v_i - 1/v_i.
std::pair<double, Vec> potential_b_tilde(const Vec& v);

// Large-beta steady state in the scaled variable v = y/sqrt(beta t):
// log[N! (beta/2pi)^{N/2}] - beta (F_A - K_A) or log[N! (2 beta)^{N/2}] - beta (F_B - K_B).
double steady_state_logdensity(const RootSystemConfig& cfg, const Vec& v);

// Exact steady state normalized over the Weyl chamber:
// log|W| + ((N + beta gamma)/2) log beta - log c_beta - beta F_R(v).
double steady_state_logdensity_exact(const RootSystemConfig& cfg, const Vec& v);

// Gaussian approximation around the W-orbit of the peak set, normalized over R^N.
double gaussian_steady_approx(const RootSystemConfig& cfg, const Vec& v);
double gaussian_steady_approx(const RootSystemConfig& cfg, const PotentialReport& peak, const Vec& v);

using LogDensityFn = std::function<double(const Vec&)>;

struct FkeResidual {
    double residual = 0.0; // right-hand side in units of f(v)
    double scale = 0.0;    // sum of term magnitudes in the same units
    double relative() const { return scale > 0.0 ? std::abs(residual) / scale : std::abs(residual); }
};

// Right-hand side of the scaled Fokker-Planck equation for a time-independent density,
// by central differences with step h (h <= 0 selects 1e-4 max(1,|v|)).
FkeResidual fke_residual(const RootSystemConfig& cfg, const LogDensityFn& logdensity, const Vec& v,
                         double h = 0.0);

// | |grad F|^2 - (v^2 - 2 gamma + sum alpha^2 kappa^2 / (alpha.v)^2) |
double cm_gradient_identity_residual(const RootSystemConfig& cfg, const Vec& v);

// Calls fn on every element of W applied to v (permutations, plus sign flips for TypeB).
void for_each_weyl_image(const RootSystemConfig& cfg, const Vec& v, const std::function<void(const Vec&)>& fn);

} // namespace dunkl
