#pragma once

// Discrete P, T, C actions on decay processes built from massive and
// tachyonic states, and energy-momentum conservation bookkeeping.

#include "tachyon/fourmomentum.hpp"

#include <variant>
#include <vector>

namespace tachyon {

enum class Leg { incoming, outgoing };

struct ProcessEntry {
    std::variant<MassiveState, TachyonState> state;
    Leg leg = Leg::incoming;
};

using Process = std::vector<ProcessEntry>;

enum class DiscreteOp { P, T, C, CPT };

/// Sign applied to sgn(s.w) by each operation. The product of the three is the
/// CPT sign.
struct SymmetryRuleSet {
    int t_action = 1;
    int p_action = -1;
    int c_action = -1;

    int cpt_product() const { return t_action * p_action * c_action; }

    /// T leaves the helicity unchanged, P flips it.
    static SymmetryRuleSet helicity_like() { return {1, -1, -1}; }
    /// T flips, P keeps.
    static SymmetryRuleSet alternative() { return {-1, 1, -1}; }
};

/// P negates spatial vectors, T negates velocities and swaps incoming with
/// outgoing legs, C leaves the kinematics alone. In every case s is chosen so that sgn(s.w)
/// picks up the rule-set sign.
Process apply_discrete_symmetry(const Process& process, DiscreteOp op,
                                const SymmetryRuleSet& rules = SymmetryRuleSet::helicity_like());

struct ConservationResidual {
    double energy = 0.0;   ///< |sum E_in - sum E_out|
    double momentum = 0.0; ///< |sum p_in - sum p_out|
    double total() const { return std::max(energy, momentum); }
};

ConservationResidual conservation_residual(const Process& process, const UnitSystem& units = {});

/// Mass m moving with speed v along `direction`
/// reverses its velocity and emits an infinitely fast tachyon (s along the
/// initial velocity).
Process unique_decay_process(double m, double mu, const Vec3& direction = Vec3::UnitX(),
                             const UnitSystem& units = {});

} // namespace tachyon
