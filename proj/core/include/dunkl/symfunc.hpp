#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

namespace dunkl {

// Weakly decreasing positive parts; zeros are dropped on construction.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const;
    int operator[](int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }
    bool empty() const { return parts_.empty(); }
    std::string str() const;

    // lexicographic on parts
    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

// Map ordering that iterates (3), (2,1), (1,1,1), ...
struct ReverseLex {
    bool operator()(const Partition& a, const Partition& b) const { return b < a; }
};

enum class Basis { Monomial, Jack };

struct SymPoly {
    Basis basis = Basis::Monomial;
    double alpha = 1.0; // Jack parameter, used when basis == Jack
    int n_vars = 0;
    std::map<Partition, double, ReverseLex> coeffs;

    // accumulates c into the coefficient of p, dropping exact zeros
    void add(const Partition& p, double c);
    double coeff(const Partition& p) const;
};

Partition conjugate(const Partition& lambda);
bool dominance_leq(const Partition& mu, const Partition& lambda);

// All partitions of weight with at most max_len parts, in reverse lexicographic order.
std::vector<Partition> partitions_of(int weight, int max_len);

double monomial_eval(const Partition& lambda, const std::vector<double>& x);
double elementary_eval(int k, const std::vector<double>& x);
double complete_homogeneous_eval(int k, const std::vector<double>& x);
double schur_eval(const Partition& lambda, const std::vector<double>& x);

// Monomial expansion of the Jack polynomial P_lambda^(alpha) in n_vars variables.
const SymPoly& jack_coeffs(const Partition& lambda, double alpha, int n_vars);
double jack_eval(const Partition& lambda, double alpha, const std::vector<double>& x);

// Evaluates p in its own basis.
double sympoly_eval(const SymPoly& p, const std::vector<double>& x);

// Rewrites a Jack-basis polynomial in the monomial basis.
SymPoly to_monomial(const SymPoly& p);

double hook_c(const Partition& tau, double alpha);
double hook_c_prime(const Partition& tau, double alpha);

// prod_i (b - (i-1)/alpha)_{tau_i} as rising factorials.
double gen_pochhammer(double b, const Partition& tau, double alpha);

// N! / prod of part multiplicities, zero parts included.
std::uint64_t multinomial_m(const Partition& lambda, int n_vars);

// lambda! = prod lambda_i!
double partition_factorial(const Partition& lambda);

// Eigenvalue of sum_i x_i^2 d_i^2 + (2/alpha) sum_{i!=j} x_i^2/(x_i-x_j) d_i on P_tau:
// sum_i tau_i (tau_i - 1 - 2(i-1)/alpha) + (2/alpha)(N-1)|tau|.
double jack_eigenvalue(const Partition& tau, double alpha, int n_vars);

} // namespace dunkl
