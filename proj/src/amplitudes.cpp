#include "tachyon/amplitudes.hpp"

#include "tachyon/fourmomentum.hpp"

#include <Eigen/QR>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tachyon {

namespace {

bool same_event(const SpacetimeEvent& a, const SpacetimeEvent& b) {
    return a.t == b.t && a.x == b.x && a.y == b.y && a.z == b.z;
}

Complex exp_sum(std::span<const double> phases, Complex alpha) {
    Complex sum{0.0, 0.0};
    for (double phi : phases)
        sum += std::exp(alpha * phi);
    return sum;
}

void update_max(AxiomResidual& r, double value, const std::vector<double>& phi,
                const std::vector<double>& xi) {
    if (value > r.max_residual || r.witness_phi.empty()) {
        r.max_residual = std::max(r.max_residual, value);
        r.witness_phi = phi;
        r.witness_xi = xi;
    }
}

} // namespace

Path::Path(std::vector<PathSegment> segments) : segments_(std::move(segments)) {
    for (std::size_t i = 1; i < segments_.size(); ++i) {
        if (!same_event(segments_[i - 1].end, segments_[i].start))
            throw std::invalid_argument("Path: segment " + std::to_string(i) +
                                        " does not start where the previous one ends");
    }
}

SpacetimeEvent Path::start() const {
    if (segments_.empty())
        throw std::logic_error("Path::start on an empty path");
    return segments_.front().start;
}

SpacetimeEvent Path::end() const {
    if (segments_.empty())
        throw std::logic_error("Path::end on an empty path");
    return segments_.back().end;
}

Path Path::reversed() const {
    std::vector<PathSegment> out;
    out.reserve(segments_.size());
    for (auto it = segments_.rbegin(); it != segments_.rend(); ++it) {
        PathSegment seg = *it;
        std::swap(seg.start, seg.end);
        out.push_back(seg);
    }
    return Path(std::move(out));
}

void PathEnsemble::validate() const {
    if (paths.empty())
        throw std::invalid_argument("PathEnsemble: at least one path is required");
    for (std::size_t i = 0; i < paths.size(); ++i) {
        const Path& p = paths[i];
        if (p.empty()) {
            if (!same_event(source, sink))
                throw std::invalid_argument("PathEnsemble: empty path " + std::to_string(i) +
                                            " between distinct events");
            continue;
        }
        if (!same_event(p.start(), source) || !same_event(p.end(), sink))
            throw std::invalid_argument("PathEnsemble: path " + std::to_string(i) +
                                        " does not join source to sink");
    }
}

double phase(const Path& path, const UnitSystem& units) {
    double sum = 0.0;
    for (const auto& seg : path.segments()) {
        const double dt = seg.end.t - seg.start.t;
        const Vec3 dr = seg.end.position() - seg.start.position();
        sum += seg.energy * dt - seg.momentum.dot(dr);
    }
    return sum / units.hbar;
}

std::vector<double> phases(const PathEnsemble& ensemble, const UnitSystem& units) {
    ensemble.validate();
    std::vector<double> out;
    out.reserve(ensemble.paths.size());
    for (const auto& p : ensemble.paths)
        out.push_back(phase(p, units));
    return out;
}

Complex invariant_value(std::span<const double> phases, const InvariantParams& params) {
    if (phases.empty())
        throw std::invalid_argument("invariant_P: at least one phase is required");
    const double n = static_cast<double>(phases.size());
    return std::pow(n, -params.A_exp) * exp_sum(phases, params.alpha) *
           exp_sum(phases, -params.alpha);
}

double invariant_P(std::span<const double> phases, const InvariantParams& params) {
    return invariant_value(phases, params).real();
}

Complex amplitude(std::span<const double> phases) {
    if (phases.empty())
        throw std::invalid_argument("amplitude: at least one path is required");
    Complex sum{0.0, 0.0};
    for (double phi : phases)
        sum += Complex(std::cos(phi), std::sin(phi));
    return sum / static_cast<double>(phases.size());
}

Complex amplitude(const PathEnsemble& ensemble, const UnitSystem& units) {
    const auto ph = phases(ensemble, units);
    return amplitude(ph);
}

double AxiomReport::max_residual() const {
    double m = 0.0;
    for (const auto& a : axioms)
        m = std::max(m, a.max_residual);
    return m;
}

const AxiomResidual* AxiomReport::find(const std::string& axiom) const {
    for (const auto& a : axioms)
        if (a.axiom == axiom)
            return &a;
    return nullptr;
}

double relative_residual(Complex a, Complex b) {
    const double scale = std::max({1.0, std::abs(a), std::abs(b)});
    return std::abs(a - b) / scale;
}

AxiomReport check_axioms(const InvariantParams& params, int n, int m, int trials,
                         std::mt19937_64& rng) {
    return check_axioms([&](std::span<const double> ph) { return invariant_value(ph, params); },
                        n, m, trials, rng, true);
}

AxiomReport check_axioms(const InvariantFunction& invariant, int n, int m, int trials,
                         std::mt19937_64& rng, bool with_normalization) {
    if (n < 1 || m < 1)
        throw std::invalid_argument("check_axioms: n and m must be at least 1");
    std::uniform_real_distribution<double> dist(-std::numbers::pi, std::numbers::pi);
    AxiomResidual symmetry{"symmetry", 0.0, {}, {}};
    AxiomResidual inversion{"inversion", 0.0, {}, {}};
    AxiomResidual composition{"composition", 0.0, {}, {}};
    AxiomResidual normalization{"normalization", 0.0, {}, {}};

    std::vector<double> phi(n), xi(m), permuted, negated(n), pairs;
    pairs.reserve(static_cast<std::size_t>(n) * m);
    for (int trial = 0; trial < trials; ++trial) {
        for (auto& p : phi) p = dist(rng);
        for (auto& p : xi) p = dist(rng);

        const Complex base = invariant(phi);

        permuted = phi;
        std::shuffle(permuted.begin(), permuted.end(), rng);
        update_max(symmetry, relative_residual(base, invariant(permuted)), phi, permuted);

        for (int i = 0; i < n; ++i) negated[i] = -phi[i];
        update_max(inversion, relative_residual(base, invariant(negated)), phi, {});

        pairs.clear();
        for (double a : phi)
            for (double b : xi)
                pairs.push_back(a + b);
        const Complex lhs = base * invariant(xi);
        update_max(composition, relative_residual(lhs, invariant(pairs)), phi, xi);

        if (with_normalization) {
            const std::vector<double> same(n, phi[0]);
            const std::vector<double> single{phi[0]};
            update_max(normalization, relative_residual(invariant(same), invariant(single)), same, {});
        }
    }
    AxiomReport report{{symmetry, inversion, composition}};
    if (with_normalization)
        report.axioms.push_back(normalization);
    return report;
}

double frame_shift_check(double phi1, double phi2, double delta, const InvariantParams& params) {
    const std::vector<double> base{phi1, phi2};
    const std::vector<double> shifted{phi1 - delta, phi2 - delta};
    const std::vector<double> swapped{phi2, phi1};
    const Complex p = invariant_value(base, params);
    return std::max(std::abs(p - invariant_value(shifted, params)),
                    std::abs(p - invariant_value(swapped, params)));
}

SeparabilityFit nonseparability_witness(const InvariantParams& params) {
    const double pi = std::numbers::pi;
    const std::vector<double> a{0.0, 0.0}, b{0.0, pi}, c{pi, pi};
    const double y0 = invariant_P(a, params);
    const double y1 = invariant_P(b, params);
    const double y2 = invariant_P(c, params);
    // Least squares for [2 0; 1 1; 0 2] [f0; fpi] = [y0; y1; y2].
    Eigen::Matrix<double, 3, 2> M;
    M << 2, 0, 1, 1, 0, 2;
    const Eigen::Vector3d y(y0, y1, y2);
    const Eigen::Vector2d f = M.colPivHouseholderQr().solve(y);
    return {f(0), f(1), (M * f - y).norm()};
}

std::vector<ScanPoint> interference_scan(const EnsembleGenerator& geometry, double lo, double hi,
                                         int points, const UnitSystem& units,
                                         const InvariantParams& params) {
    if (points < 1)
        throw std::invalid_argument("interference_scan: points must be positive");
    std::vector<ScanPoint> out;
    out.reserve(points);
    for (int i = 0; i < points; ++i) {
        const double param = points == 1 ? lo : lo + (hi - lo) * i / (points - 1);
        const auto ph = phases(geometry(param), units);
        out.push_back({param, invariant_P(ph, params)});
    }
    return out;
}

PathSegment massive_segment(const SpacetimeEvent& start, const SpacetimeEvent& end, double mass,
                            const UnitSystem& units) {
    const double dt = end.t - start.t;
    if (!(dt > 0.0))
        throw std::invalid_argument("massive_segment: segment must advance in time");
    const Vec3 u = (end.position() - start.position()) / dt;
    const auto A = four_vector(MassiveState{mass, u}, units);
    return {start, end, mass * units.c2() * A.a0, mass * units.c * A.a};
}

PathEnsemble MirrorGeometry::operator()(double offset, const UnitSystem& units) const {
    const SpacetimeEvent a{0.0, 0.0, 0.0, 0.0};
    const SpacetimeEvent b{duration, 0.0, 0.0, 0.0};
    const SpacetimeEvent mirror{0.5 * duration, offset, 0.0, 0.0};
    PathEnsemble ens;
    ens.source = a;
    ens.sink = b;
    ens.paths.emplace_back(std::vector<PathSegment>{massive_segment(a, b, mass, units)});
    ens.paths.emplace_back(std::vector<PathSegment>{massive_segment(a, mirror, mass, units),
                                                    massive_segment(mirror, b, mass, units)});
    return ens;
}

double MirrorGeometry::phase_difference(double offset, const UnitSystem& units) const {
    const double half = 0.5 * duration;
    const double d = offset / units.c;
    return mass * units.c2() / units.hbar * (duration - 2.0 * std::sqrt(half * half - d * d));
}

double MirrorGeometry::offset_for(double delta_phi, const UnitSystem& units) const {
    const double lag = delta_phi * units.hbar / (mass * units.c2());
    if (lag < 0.0 || lag > duration)
        throw std::invalid_argument("MirrorGeometry: phase difference out of reach");
    const double half = 0.5 * duration;
    const double reflected_half = 0.5 * (duration - lag);
    return units.c * std::sqrt(half * half - reflected_half * reflected_half);
}

} // namespace tachyon
