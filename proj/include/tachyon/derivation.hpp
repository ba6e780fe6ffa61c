#pragma once

// Executable checks of the power-sum derivation of the path invariant:
// Newton's binomial identity for power sums over pairwise sums, the Cauchy
// coefficient equation and its exponential solution, truncated-series
// reconstruction, and closure of the axioms under products of solutions.

#include "tachyon/amplitudes.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace tachyon {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// E(k) = sum_i phi_i^k, with E(0) = n (0^0 taken as 1).
template <class T>
T power_sum(unsigned k, std::span<const T> phases) {
    T sum = 0;
    for (const T& phi : phases) {
        T term = 1;
        for (unsigned i = 0; i < k; ++i)
            term *= phi;
        sum += term;
    }
    return sum;
}

double power_sum(unsigned k, std::span<const double> phases);

BigInt binomial(unsigned n, unsigned k);

/// E(t) over all pairwise sums {phi_i + xi_j} minus
/// sum_r C(t, r) E(r)(phi) E(t - r)(xi). Exactly zero for integer types.
template <class T>
T newton_identity_residual(unsigned t, std::span<const T> phi, std::span<const T> xi) {
    std::vector<T> pairs;
    pairs.reserve(phi.size() * xi.size());
    for (const T& a : phi)
        for (const T& b : xi)
            pairs.push_back(a + b);
    T rhs = 0;
    for (unsigned r = 0; r <= t; ++r)
        rhs += static_cast<T>(binomial(t, r)) * power_sum<T>(r, phi) * power_sum<T>(t - r, xi);
    return power_sum<T>(t, std::span<const T>(pairs)) - rhs;
}

/// alpha(n)_k = n^-A (alpha^k / k! + perturbation). The unperturbed family
/// solves k! s! alpha(n)_k alpha(m)_s = (k + s)! alpha(nm)_{k+s}.
struct CoefficientFamily {
    double A_exp = 2.0;
    Complex alpha{0.0, 1.0};
    int max_order = 30;
    double perturbation = 0.0;

    Complex coefficient(int n, int k) const;
};

/// Relative residual of the Cauchy coefficient equation at (k, s, n, m).
double cauchy_solution_check(const CoefficientFamily& family, int k, int s, int n, int m);

/// Exact version for rational alpha and integer A: returns lhs - rhs.
Rational cauchy_solution_residual_exact(const Rational& alpha, int A_exp, int k, int s, int n, int m);

/// n^-A (sum_{k<=K} alpha^k/k! E(k)) (sum_{k<=K} (-alpha)^k/k! E(k)).
Complex truncated_reconstruction(std::span<const double> phases, const CoefficientFamily& family,
                                 int K);
Complex truncated_reconstruction(std::span<const double> phases, const CoefficientFamily& family);

/// Product of basic solutions n^-A' prod_j (sum_i e^{alpha_j phi_i}).
struct ProductSolution {
    std::vector<Complex> alphas;
    double A_exp = 2.0;

    Complex operator()(std::span<const double> phases) const;
    /// True if every alpha has its negative in the list (with multiplicity).
    bool paired() const;
};

/// Symmetry, inversion and composition residuals of a product solution on
/// random phases in [-pi, pi].
AxiomReport product_closure_check(const ProductSolution& solution, int n, int m, int trials,
                                  std::mt19937_64& rng);

/// Multi-index coefficient
/// alpha(n)_{k1..kN} = n^-A' sum_perm prod_j alpha_j^{k_perm(j)} / (N! k1! ... kN!).
Complex multi_index_coefficient(std::span<const Complex> alphas, double A_exp, int n,
                                std::span<const int> ks);

/// Relative residual of the N-index Cauchy equation
/// N! prod k! prod s! a(n)_k a(m)_s = sum_perm prod (k_i + s_perm(i))! a(nm)_{k + s_perm}.
double multi_index_cauchy_check(std::span<const Complex> alphas, double A_exp, std::span<const int> ks,
                                std::span<const int> ss, int n, int m);

/// Truncated N-fold power-sum series with the multi-index coefficients
/// (each index up to K). Converges to the product solution.
Complex multi_index_series(std::span<const double> phases, std::span<const Complex> alphas,
                           double A_exp, int K);

} // namespace tachyon
