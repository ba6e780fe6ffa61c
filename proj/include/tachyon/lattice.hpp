#pragma once

// Sum over monotone-in-time paths on a (1+1)D spacetime lattice.

#include "tachyon/amplitudes.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace tachyon {

class EnumerationCapExceeded : public std::runtime_error {
public:
    EnumerationCapExceeded(std::uint64_t count, std::uint64_t cap);
    std::uint64_t count;
    std::uint64_t cap;
};

/// Lattice with spacing (dt, dx). A path starts at `origin`, takes `steps`
/// time steps, and at every step moves by one of `moves` (in units of dx).
/// Each segment carries the massive energy-momentum of its slope.
struct LatticeSpec {
    SpacetimeEvent origin;
    int steps = 1;
    int displacement = 0; ///< net spatial displacement, in units of dx
    double dt = 1.0;
    double dx = 0.5;
    double mass = 1.0;
    std::vector<int> moves{-1, 1};
    std::uint64_t enumeration_cap = 1'000'000;

    SpacetimeEvent sink() const;
    void validate(const UnitSystem& units = {}) const;
};

struct LatticeSum {
    Complex amplitude;
    std::uint64_t paths = 0;
    double P = 0.0; ///< |amplitude|^2
};

/// Number of move sequences ending at the sink. Saturates at UINT64_MAX.
std::uint64_t count_lattice_paths(const LatticeSpec& spec);

/// Enumerates every path depth-first with moves tried in the listed order and
/// sums e^{i phi} in that order. Throws EnumerationCapExceeded when the path
/// count exceeds the cap.
LatticeSum lattice_path_sum(const LatticeSpec& spec, const UnitSystem& units = {});

/// Transfer-matrix evaluation: propagates per-site partial sums step by step.
/// Agrees with lattice_path_sum within rounding and has no enumeration cap.
LatticeSum lattice_path_sum_transfer(const LatticeSpec& spec, const UnitSystem& units = {});

/// Segment for one lattice step with the given move.
PathSegment lattice_segment(const SpacetimeEvent& start, int move, const LatticeSpec& spec,
                            const UnitSystem& units = {});

} // namespace tachyon
