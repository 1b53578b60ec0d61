#pragma once

#include <utility>
#include <vector>

namespace dunkl {

enum class PolyKind { Hermite, Laguerre };

struct PolyZeros {
    PolyKind kind = PolyKind::Hermite;
    int n = 0;
    double alpha = 0.0;
    std::vector<double> zeros;
};

// Physicists' Hermite H_n(x) and H_n'(x).
std::pair<double, double> hermite_eval(int n, double x);

// Associated Laguerre L_n^(alpha)(x) and its derivative.
std::pair<double, double> laguerre_eval(int n, double alpha, double x);

PolyZeros hermite_zeros(int n);
PolyZeros laguerre_zeros(int n, double alpha);

// Orthonormal Hermite functions psi_0..psi_kmax at x.
std::vector<double> hermite_functions(int kmax, double x);

// Orthonormal Laguerre functions l_0..l_kmax at u > 0 with weight u^alpha e^-u.
std::vector<double> laguerre_functions(int kmax, double alpha, double u);

// One-point density of N beta=2 interacting Brownian motions started at the origin.
double density_a_exact(int n, double t, double y);

// One-point density of N beta=2 interacting Bessel processes started at the origin.
double density_b_exact(int n, double nu, double t, double y);

} // namespace dunkl
