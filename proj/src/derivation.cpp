#include "tachyon/derivation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace tachyon {

namespace {

double factorial(int k) { return std::tgamma(k + 1.0); }

Complex ipow(Complex base, int k) {
    Complex out{1.0, 0.0};
    for (int i = 0; i < k; ++i)
        out *= base;
    return out;
}

std::vector<double> power_sums(std::span<const double> phases, int K) {
    std::vector<double> sums(K + 1, 0.0);
    for (double phi : phases) {
        double term = 1.0;
        for (int k = 0; k <= K; ++k) {
            sums[k] += term;
            term *= phi;
        }
    }
    return sums;
}

} // namespace

double power_sum(unsigned k, std::span<const double> phases) { return power_sum<double>(k, phases); }

BigInt binomial(unsigned n, unsigned k) {
    if (k > n)
        return 0;
    BigInt out = 1;
    for (unsigned i = 1; i <= k; ++i)
        out = out * (n - k + i) / i;
    return out;
}

Complex CoefficientFamily::coefficient(int n, int k) const {
    return std::pow(static_cast<double>(n), -A_exp) * (ipow(alpha, k) / factorial(k) + perturbation);
}

double cauchy_solution_check(const CoefficientFamily& family, int k, int s, int n, int m) {
    const Complex lhs = factorial(k) * factorial(s) * family.coefficient(n, k) * family.coefficient(m, s);
    const Complex rhs = factorial(k + s) * family.coefficient(n * m, k + s);
    const double scale = std::max(std::abs(lhs), std::abs(rhs));
    if (scale == 0.0)
        return 0.0;
    return std::abs(lhs - rhs) / scale;
}

Rational cauchy_solution_residual_exact(const Rational& alpha, int A_exp, int k, int s, int n, int m) {
    const auto fact = [](int x) {
        BigInt f = 1;
        for (int i = 2; i <= x; ++i)
            f *= i;
        return f;
    };
    const auto coeff = [&](int size, int order) {
        Rational a = 1;
        for (int i = 0; i < order; ++i)
            a *= alpha;
        BigInt norm = 1;
        for (int i = 0; i < A_exp; ++i)
            norm *= size;
        return a / Rational(fact(order) * norm);
    };
    const Rational lhs = Rational(fact(k) * fact(s)) * coeff(n, k) * coeff(m, s);
    const Rational rhs = Rational(fact(k + s)) * coeff(n * m, k + s);
    return lhs - rhs;
}

Complex truncated_reconstruction(std::span<const double> phases, const CoefficientFamily& family,
                                 int K) {
    if (phases.empty())
        throw std::invalid_argument("truncated_reconstruction: at least one phase is required");
    if (K < 0)
        throw std::invalid_argument("truncated_reconstruction: K must be non-negative");
    const auto E = power_sums(phases, K);
    Complex forward{0.0, 0.0};
    Complex backward{0.0, 0.0};
    Complex a_pow{1.0, 0.0};
    double fact = 1.0;
    for (int k = 0; k <= K; ++k) {
        if (k > 0) {
            a_pow *= family.alpha;
            fact *= k;
        }
        const Complex term = a_pow / fact * E[k];
        forward += term;
        backward += (k % 2 == 0 ? 1.0 : -1.0) * term;
    }
    return std::pow(static_cast<double>(phases.size()), -family.A_exp) * forward * backward;
}

Complex truncated_reconstruction(std::span<const double> phases, const CoefficientFamily& family) {
    return truncated_reconstruction(phases, family, family.max_order);
}

Complex ProductSolution::operator()(std::span<const double> phases) const {
    if (phases.empty())
        throw std::invalid_argument("ProductSolution: at least one phase is required");
    Complex out = std::pow(static_cast<double>(phases.size()), -A_exp);
    for (const Complex& a : alphas) {
        Complex sum{0.0, 0.0};
        for (double phi : phases)
            sum += std::exp(a * phi);
        out *= sum;
    }
    return out;
}

bool ProductSolution::paired() const {
    std::vector<bool> used(alphas.size(), false);
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        if (used[i])
            continue;
        bool found = false;
        for (std::size_t j = i + 1; j < alphas.size(); ++j) {
            if (!used[j] && alphas[j] == -alphas[i]) {
                used[i] = used[j] = found = true;
                break;
            }
        }
        if (!found)
            return false;
    }
    return true;
}

AxiomReport product_closure_check(const ProductSolution& solution, int n, int m, int trials,
                                  std::mt19937_64& rng) {
    return check_axioms([&](std::span<const double> ph) { return solution(ph); }, n, m, trials, rng,
                        false);
}

Complex multi_index_coefficient(std::span<const Complex> alphas, double A_exp, int n,
                                std::span<const int> ks) {
    const std::size_t N = alphas.size();
    if (ks.size() != N)
        throw std::invalid_argument("multi_index_coefficient: index count must match alpha count");
    std::vector<std::size_t> perm(N);
    std::iota(perm.begin(), perm.end(), 0);
    Complex sum{0.0, 0.0};
    do {
        Complex term{1.0, 0.0};
        for (std::size_t j = 0; j < N; ++j)
            term *= ipow(alphas[j], ks[perm[j]]);
        sum += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    double denom = factorial(static_cast<int>(N));
    for (int k : ks)
        denom *= factorial(k);
    return std::pow(static_cast<double>(n), -A_exp) * sum / denom;
}

double multi_index_cauchy_check(std::span<const Complex> alphas, double A_exp, std::span<const int> ks,
                                std::span<const int> ss, int n, int m) {
    const std::size_t N = alphas.size();
    if (ks.size() != N || ss.size() != N)
        throw std::invalid_argument("multi_index_cauchy_check: index count must match alpha count");
    double fact_prod = factorial(static_cast<int>(N));
    for (int k : ks) fact_prod *= factorial(k);
    for (int s : ss) fact_prod *= factorial(s);
    const Complex lhs = fact_prod * multi_index_coefficient(alphas, A_exp, n, ks) *
                        multi_index_coefficient(alphas, A_exp, m, ss);

    std::vector<std::size_t> perm(N);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> combined(N);
    Complex rhs{0.0, 0.0};
    do {
        double f = 1.0;
        for (std::size_t i = 0; i < N; ++i) {
            combined[i] = ks[i] + ss[perm[i]];
            f *= factorial(combined[i]);
        }
        rhs += f * multi_index_coefficient(alphas, A_exp, n * m, combined);
    } while (std::next_permutation(perm.begin(), perm.end()));

    const double scale = std::max(std::abs(lhs), std::abs(rhs));
    return scale == 0.0 ? 0.0 : std::abs(lhs - rhs) / scale;
}

Complex multi_index_series(std::span<const double> phases, std::span<const Complex> alphas,
                           double A_exp, int K) {
    const std::size_t N = alphas.size();
    if (N == 0)
        throw std::invalid_argument("multi_index_series: at least one alpha is required");
    const auto E = power_sums(phases, K);
    const int n = static_cast<int>(phases.size());
    std::vector<int> ks(N, 0);
    Complex sum{0.0, 0.0};
    while (true) {
        Complex term = multi_index_coefficient(alphas, A_exp, n, ks);
        for (int k : ks)
            term *= E[k];
        sum += term;
        std::size_t i = 0;
        while (i < N && ks[i] == K) {
            ks[i] = 0;
            ++i;
        }
        if (i == N)
            break;
        ++ks[i];
    }
    return sum;
}

} // namespace tachyon
