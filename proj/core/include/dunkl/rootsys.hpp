#pragma once

#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace dunkl {

using Vec = std::vector<double>;

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class RootKind { TypeA, TypeB };

std::string to_string(RootKind kind);
RootKind root_kind_from_string(const std::string& s);

// Radial Dunkl configuration. nu is only meaningful for TypeB.
struct RootSystemConfig {
    RootKind kind = RootKind::TypeA;
    int n = 1;
    double beta = 2.0;
    double nu = 0.0;

    static RootSystemConfig type_a(int n, double beta);
    static RootSystemConfig type_b(int n, double beta, double nu);

    // throws DomainError on invalid parameters
    void validate() const;
};

// Positive root alpha = e_i + sign * e_j, or e_i alone when j < 0.
struct PositiveRoot {
    int i = 0;
    int j = -1;
    int sign = -1;
    double kappa = 1.0;

    double dot(const double* v) const { return j < 0 ? v[i] : v[i] + sign * v[j]; }
    double norm2() const { return j < 0 ? 1.0 : 2.0; }
    double component(int k) const
    {
        if (k == i) return 1.0;
        if (k == j) return static_cast<double>(sign);
        return 0.0;
    }
};

std::vector<PositiveRoot> positive_roots(const RootSystemConfig& cfg);

double gamma(const RootSystemConfig& cfg);
int rank(const RootSystemConfig& cfg);
double weyl_group_order(const RootSystemConfig& cfg);
double log_weyl_group_order(const RootSystemConfig& cfg);

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// log w_beta(x); kNegInf when a factor vanishes.
double log_weight(const RootSystemConfig& cfg, const Vec& x);

// log of c_beta = integral of exp(-|x|^2/2) w_beta(x) over R^N.
double log_selberg_const(const RootSystemConfig& cfg);

// K_A or K_B; beta is not used.
double freezing_constant(const RootSystemConfig& cfg);

bool in_weyl_chamber(const RootSystemConfig& cfg, const Vec& x);

// Sort (TypeA) or reflect and sort (TypeB), separating exact ties.
// Returns the number of tie repairs performed.
int project_to_chamber(const RootSystemConfig& cfg, double* x);

// Reflection of v in the hyperplane orthogonal to alpha.
Vec reflect(const PositiveRoot& alpha, const Vec& v);

} // namespace dunkl
