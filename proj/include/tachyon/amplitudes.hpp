#pragma once

// Path phases, the symmetric probability-like invariant of n path phases and
// the complex amplitude <B|A>.

#include "tachyon/kinematics.hpp"

#include <complex>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace tachyon {

using Complex = std::complex<double>;

/// Straight spacetime segment carrying constant energy and momentum.
struct PathSegment {
    SpacetimeEvent start;
    SpacetimeEvent end;
    double energy = 0.0;
    Vec3 momentum = Vec3::Zero();
};

/// Chain of segments; each segment starts where the previous one ends.
class Path {
public:
    Path() = default;
    explicit Path(std::vector<PathSegment> segments);

    const std::vector<PathSegment>& segments() const { return segments_; }
    bool empty() const { return segments_.empty(); }
    SpacetimeEvent start() const;
    SpacetimeEvent end() const;

    /// Same world-line traversed from end to start.
    Path reversed() const;

private:
    std::vector<PathSegment> segments_;
};

struct PathEnsemble {
    SpacetimeEvent source;
    SpacetimeEvent sink;
    std::vector<Path> paths;

    /// Throws std::invalid_argument unless n >= 1 and every path joins
    /// source to sink.
    void validate() const;
};

struct InvariantParams {
    Complex alpha{0.0, 1.0};
    double A_exp = 2.0;
};

/// hbar^-1 * sum over segments of (E dt - p.dr).
double phase(const Path& path, const UnitSystem& units = {});

std::vector<double> phases(const PathEnsemble& ensemble, const UnitSystem& units = {});

/// n^-A (sum e^{alpha phi}) (sum e^{-alpha phi}) as a complex number; real for
/// real or purely imaginary alpha.
Complex invariant_value(std::span<const double> phases, const InvariantParams& params = {});
double invariant_P(std::span<const double> phases, const InvariantParams& params = {});

/// (1/n) sum e^{i phi}, summed in the order given.
Complex amplitude(std::span<const double> phases);
Complex amplitude(const PathEnsemble& ensemble, const UnitSystem& units = {});

/// Witness inputs that produced the largest residual of one axiom.
struct AxiomResidual {
    std::string axiom;
    double max_residual = 0.0;
    std::vector<double> witness_phi;
    std::vector<double> witness_xi;
};

struct AxiomReport {
    std::vector<AxiomResidual> axioms;

    double max_residual() const;
    const AxiomResidual* find(const std::string& axiom) const;
};

/// Relative difference |a - b| / max(1, |a|, |b|).
double relative_residual(Complex a, Complex b);

/// Random-phase checks of permutation symmetry, inversion, composition
/// P(n)(phi) P(m)(xi) = P(nm)(phi_i + xi_j) and the identical-phase
/// normalization P(n)(phi, ..., phi) = P(1)(phi). Phases are drawn from
/// [-pi, pi].
AxiomReport check_axioms(const InvariantParams& params, int n, int m, int trials,
                         std::mt19937_64& rng);

using InvariantFunction = std::function<Complex(std::span<const double>)>;

/// Same checks for an arbitrary invariant. The normalization axiom is only
/// evaluated when requested.
AxiomReport check_axioms(const InvariantFunction& invariant, int n, int m, int trials,
                         std::mt19937_64& rng, bool with_normalization);

/// max(|P(phi1, phi2) - P(phi1 - delta, phi2 - delta)|, |P(phi1, phi2) - P(phi2, phi1)|)
double frame_shift_check(double phi1, double phi2, double delta, const InvariantParams& params = {});

/// Best additive split P(a, b) ~ f(a) + f(b) fitted to P(0,0), P(0,pi), P(pi,pi)
/// by least squares. A nonzero residual means no such split exists.
struct SeparabilityFit {
    double f0 = 0.0;
    double fpi = 0.0;
    double residual = 0.0;
};
SeparabilityFit nonseparability_witness(const InvariantParams& params = {});

struct ScanPoint {
    double param = 0.0;
    double P = 0.0;
};

using EnsembleGenerator = std::function<PathEnsemble(double)>;

/// Evaluates P for ensembles generated over `points` evenly spaced parameter
/// values in [lo, hi] (inclusive).
std::vector<ScanPoint> interference_scan(const EnsembleGenerator& geometry, double lo, double hi,
                                         int points, const UnitSystem& units = {},
                                         const InvariantParams& params = {});

/// Two paths from A = (0, 0) to B = (duration, 0): one at rest, the other
/// reflected at (duration/2, offset). Segment energy-momentum is the massive
/// four-vector scaled by `mass`, so each phase is m c^2 (proper time) / hbar.
struct MirrorGeometry {
    double mass = 1.0;
    double duration = 10.0;

    PathEnsemble operator()(double offset, const UnitSystem& units = {}) const;

    /// Closed-form phase difference (straight minus reflected).
    double phase_difference(double offset, const UnitSystem& units = {}) const;
    /// Offset at which the phase difference equals delta_phi.
    double offset_for(double delta_phi, const UnitSystem& units = {}) const;
};

PathSegment massive_segment(const SpacetimeEvent& start, const SpacetimeEvent& end, double mass,
                            const UnitSystem& units = {});

} // namespace tachyon
