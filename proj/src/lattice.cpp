#include "tachyon/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace tachyon {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
    return a > kSaturated - b ? kSaturated : a + b;
}

int max_reach(const LatticeSpec& spec) {
    int reach = 0;
    for (int m : spec.moves)
        reach = std::max(reach, std::abs(m));
    return reach * spec.steps;
}

struct Enumerator {
    const LatticeSpec& spec;
    const UnitSystem& units;
    int step_reach = 0;
    std::vector<PathSegment> prefix;
    std::vector<double> phases;

    void run(const SpacetimeEvent& at, int position, int remaining) {
        if (remaining == 0) {
            if (position == spec.displacement)
                phases.push_back(phase(Path(prefix), units));
            return;
        }
        for (int move : spec.moves) {
            // prune branches that can no longer reach the sink
            const int left = spec.displacement - (position + move);
            if (std::abs(left) > step_reach * (remaining - 1))
                continue;
            prefix.push_back(lattice_segment(at, move, spec, units));
            run(prefix.back().end, position + move, remaining - 1);
            prefix.pop_back();
        }
    }
};

} // namespace

EnumerationCapExceeded::EnumerationCapExceeded(std::uint64_t count_, std::uint64_t cap_)
    : std::runtime_error("lattice path count " +
                         (count_ == kSaturated ? std::string("(overflow)") : std::to_string(count_)) +
                         " exceeds the enumeration cap " + std::to_string(cap_)),
      count(count_), cap(cap_) {}

SpacetimeEvent LatticeSpec::sink() const {
    SpacetimeEvent e = origin;
    e.t += steps * dt;
    e.x += displacement * dx;
    return e;
}

void LatticeSpec::validate(const UnitSystem& units) const {
    if (steps < 1)
        throw std::invalid_argument("lattice: at least one time step is required");
    if (!(dt > 0.0) || !(dx > 0.0))
        throw std::invalid_argument("lattice: dt and dx must be positive");
    if (!(mass > 0.0))
        throw std::invalid_argument("lattice: mass must be positive");
    if (moves.empty())
        throw std::invalid_argument("lattice: no moves given");
    for (int m : moves) {
        if (!(std::abs(m * dx / dt) < units.c))
            throw RegimeError("lattice: move " + std::to_string(m) + " is not subluminal");
    }
    if (count_lattice_paths(*this) == 0)
        throw std::invalid_argument("lattice: sink is not reachable in the given number of steps");
}

std::uint64_t count_lattice_paths(const LatticeSpec& spec) {
    const int reach = max_reach(spec);
    if (std::abs(spec.displacement) > reach)
        return 0;
    const int width = 2 * reach + 1;
    std::vector<std::uint64_t> counts(width, 0), next(width);
    counts[reach] = 1;
    for (int step = 0; step < spec.steps; ++step) {
        std::fill(next.begin(), next.end(), 0);
        for (int i = 0; i < width; ++i) {
            if (counts[i] == 0)
                continue;
            for (int m : spec.moves) {
                const int j = i + m;
                if (j >= 0 && j < width)
                    next[j] = saturating_add(next[j], counts[i]);
            }
        }
        counts.swap(next);
    }
    return counts[reach + spec.displacement];
}

PathSegment lattice_segment(const SpacetimeEvent& start, int move, const LatticeSpec& spec,
                            const UnitSystem& units) {
    SpacetimeEvent end = start;
    end.t += spec.dt;
    end.x += move * spec.dx;
    return massive_segment(start, end, spec.mass, units);
}

LatticeSum lattice_path_sum(const LatticeSpec& spec, const UnitSystem& units) {
    spec.validate(units);
    const std::uint64_t count = count_lattice_paths(spec);
    if (count > spec.enumeration_cap)
        throw EnumerationCapExceeded(count, spec.enumeration_cap);

    Enumerator en{spec, units, max_reach(spec) / spec.steps, {}, {}};
    en.prefix.reserve(spec.steps);
    en.phases.reserve(count);
    en.run(spec.origin, 0, spec.steps);

    LatticeSum out;
    out.paths = en.phases.size();
    out.amplitude = amplitude(en.phases);
    out.P = std::norm(out.amplitude);
    return out;
}

LatticeSum lattice_path_sum_transfer(const LatticeSpec& spec, const UnitSystem& units) {
    spec.validate(units);
    const int reach = max_reach(spec);
    const int width = 2 * reach + 1;

    // Segment phases depend only on the move on a uniform lattice.
    std::vector<Complex> step_factor;
    for (int m : spec.moves) {
        const PathSegment seg = lattice_segment(spec.origin, m, spec, units);
        const double phi = phase(Path({seg}), units);
        step_factor.emplace_back(std::cos(phi), std::sin(phi));
    }

    std::vector<Complex> sums(width, Complex{}), next(width);
    std::vector<double> counts(width, 0.0), next_counts(width);
    sums[reach] = 1.0;
    counts[reach] = 1.0;
    for (int step = 0; step < spec.steps; ++step) {
        std::fill(next.begin(), next.end(), Complex{});
        std::fill(next_counts.begin(), next_counts.end(), 0.0);
        for (int i = 0; i < width; ++i) {
            if (counts[i] == 0.0)
                continue;
            for (std::size_t k = 0; k < spec.moves.size(); ++k) {
                const int j = i + spec.moves[k];
                if (j < 0 || j >= width)
                    continue;
                next[j] += sums[i] * step_factor[k];
                next_counts[j] += counts[i];
            }
        }
        sums.swap(next);
        counts.swap(next_counts);
    }
    const int target = reach + spec.displacement;
    LatticeSum out;
    out.paths = count_lattice_paths(spec);
    out.amplitude = sums[target] / counts[target];
    out.P = std::norm(out.amplitude);
    return out;
}

} // namespace tachyon
