#include "tachyon/lattice.hpp"

#include "lattice_oracle.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace tachyon;
using tachyon::testing::brute_force_lattice;
using tachyon::testing::Gen;

namespace {

std::uint64_t binom(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    std::uint64_t out = 1;
    for (int i = 1; i <= k; ++i)
        out = out * (n - k + i) / i;
    return out;
}

} // namespace

TEST(Lattice, SingleStepSinglePath) {
    LatticeSpec spec;
    spec.steps = 1;
    spec.displacement = 1;
    const auto sum = lattice_path_sum(spec);
    EXPECT_EQ(sum.paths, 1u);
    const double phi = phase(Path({lattice_segment(spec.origin, 1, spec)}));
    EXPECT_EQ(sum.amplitude, Complex(std::cos(phi), std::sin(phi)));
    EXPECT_NEAR(sum.P, 1.0, 1e-15);
}

TEST(Lattice, TwoStepsTwoPaths) {
    LatticeSpec spec;
    spec.steps = 2;
    spec.displacement = 0;
    const auto sum = lattice_path_sum(spec);
    EXPECT_EQ(sum.paths, 2u);
    const SpacetimeEvent a{0, 0, 0, 0}, left{1, -0.5, 0, 0}, right{1, 0.5, 0, 0}, b{2, 0, 0, 0};
    const double p1 = phase(Path({massive_segment(a, left, 1.0), massive_segment(left, b, 1.0)}));
    const double p2 = phase(Path({massive_segment(a, right, 1.0), massive_segment(right, b, 1.0)}));
    const Complex expected = (std::polar(1.0, p1) + std::polar(1.0, p2)) / 2.0;
    EXPECT_NEAR(std::abs(sum.amplitude - expected), 0.0, 1e-15);
    // Both paths have the same proper time, so they interfere constructively.
    EXPECT_NEAR(sum.P, 1.0, 1e-12);
}

TEST(Lattice, CountsAreBinomial) {
    for (int n = 1; n <= 16; ++n) {
        for (int d = -n; d <= n; ++d) {
            LatticeSpec spec;
            spec.steps = n;
            spec.displacement = d;
            const std::uint64_t expected = (n + d) % 2 == 0 ? binom(n, (n + d) / 2) : 0;
            EXPECT_EQ(count_lattice_paths(spec), expected);
            if (expected > 0 && expected <= 20000)
                EXPECT_EQ(lattice_path_sum(spec).paths, expected);
        }
    }
    // Three moves: trinomial coefficients; 4 steps to 0 gives 19.
    LatticeSpec spec;
    spec.steps = 4;
    spec.moves = {-1, 0, 1};
    EXPECT_EQ(count_lattice_paths(spec), 19u);
}

TEST(Lattice, MatchesBruteForceBitExactly) {
    Gen g(61);
    int checked = 0;
    for (int trial = 0; trial < 120; ++trial) {
        LatticeSpec spec;
        spec.steps = g.integer(1, 12);
        spec.dt = g.uniform(0.5, 2.0);
        spec.mass = g.uniform(0.2, 3.0);
        spec.origin = {g.uniform(-1, 1), g.uniform(-1, 1), 0, 0};
        const int reach = g.integer(1, 3);
        spec.dx = g.uniform(0.05, 0.95) * spec.dt / reach;
        spec.moves.clear();
        for (int m = -reach; m <= reach; ++m)
            if (g.coin() || m == 0)
                spec.moves.push_back(m);
        std::shuffle(spec.moves.begin(), spec.moves.end(), g.engine());
        spec.displacement = 0;
        for (int i = 0; i < spec.steps; ++i)
            spec.displacement += spec.moves[g.integer(0, static_cast<int>(spec.moves.size()) - 1)];
        const std::uint64_t n = count_lattice_paths(spec);
        if (n > 10000)
            continue;
        const auto lib = lattice_path_sum(spec);
        const auto ref = brute_force_lattice(spec);
        EXPECT_EQ(lib.paths, ref.paths);
        EXPECT_EQ(lib.amplitude.real(), ref.amplitude.real());
        EXPECT_EQ(lib.amplitude.imag(), ref.amplitude.imag());
        EXPECT_NEAR(std::abs(lattice_path_sum_transfer(spec).amplitude - ref.amplitude), 0.0, 1e-10);
        ++checked;
    }
    EXPECT_GT(checked, 60);
}

TEST(Lattice, TransferMatchesBeyondTheCap) {
    LatticeSpec spec;
    spec.steps = 40;
    spec.displacement = 4;
    spec.dx = 0.3;
    spec.enumeration_cap = 1000;
    EXPECT_THROW(lattice_path_sum(spec), EnumerationCapExceeded);
    const auto t = lattice_path_sum_transfer(spec);
    EXPECT_EQ(t.paths, binom(40, 22));
    EXPECT_GE(t.P, 0.0);
    EXPECT_LE(t.P, 1.0 + 1e-12);
}

TEST(Lattice, CapGuard) {
    LatticeSpec spec;
    spec.steps = 30;
    spec.displacement = 0;
    try {
        lattice_path_sum(spec);
        FAIL() << "expected the cap to trip";
    } catch (const EnumerationCapExceeded& e) {
        EXPECT_EQ(e.count, binom(30, 15));
        EXPECT_EQ(e.cap, 1'000'000u);
    }
    spec.steps = 200;
    EXPECT_EQ(count_lattice_paths(spec), std::numeric_limits<std::uint64_t>::max());
}

TEST(Lattice, InvalidSpecs) {
    LatticeSpec spec;
    spec.steps = 2;
    spec.displacement = 1;
    EXPECT_THROW(lattice_path_sum(spec), std::invalid_argument);
    spec.displacement = 0;
    spec.dx = 1.0;
    EXPECT_THROW(lattice_path_sum(spec), RegimeError);
    spec.dx = 0.5;
    spec.steps = 0;
    EXPECT_THROW(lattice_path_sum(spec), std::invalid_argument);
}
