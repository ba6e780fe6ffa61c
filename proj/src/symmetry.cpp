#include "tachyon/symmetry.hpp"

#include <algorithm>

namespace tachyon {

namespace {

struct Action {
    bool negate_velocity = false;
    bool swap_legs = false;
    int helicity_sign = 1;
};

Action action_for(DiscreteOp op, const SymmetryRuleSet& rules) {
    switch (op) {
    case DiscreteOp::P: return {true, false, rules.p_action};
    case DiscreteOp::T: return {true, true, rules.t_action};
    case DiscreteOp::C: return {false, false, rules.c_action};
    case DiscreteOp::CPT: return {false, true, rules.cpt_product()};
    }
    return {};
}

} // namespace

Process apply_discrete_symmetry(const Process& process, DiscreteOp op, const SymmetryRuleSet& rules) {
    const Action act = action_for(op, rules);
    const double vsign = act.negate_velocity ? -1.0 : 1.0;
    Process out;
    out.reserve(process.size());
    for (const auto& entry : process) {
        ProcessEntry next = entry;
        if (act.swap_legs)
            next.leg = entry.leg == Leg::incoming ? Leg::outgoing : Leg::incoming;
        if (auto* m = std::get_if<MassiveState>(&next.state)) {
            m->v *= vsign;
        } else {
            auto& t = std::get<TachyonState>(next.state);
            t.w *= vsign;
            // sgn(s'.w') = helicity_sign * sgn(s.w)
            t.s *= vsign * act.helicity_sign;
        }
        out.push_back(std::move(next));
    }
    return out;
}

ConservationResidual conservation_residual(const Process& process, const UnitSystem& units) {
    double E = 0.0;
    Vec3 p = Vec3::Zero();
    for (const auto& entry : process) {
        const EnergyMomentum em = std::visit(
            [&](const auto& s) { return energy_momentum(s, units); }, entry.state);
        const double sign = entry.leg == Leg::incoming ? 1.0 : -1.0;
        E += sign * em.E;
        p += sign * em.p;
    }
    return {std::abs(E), p.norm()};
}

Process unique_decay_process(double m, double mu, const Vec3& direction, const UnitSystem& units) {
    const Vec3 n = direction.normalized();
    const UniqueDecay decay = solve_unique_decay(m, mu, units);
    Process process;
    process.push_back({MassiveState{m, decay.speed * n}, Leg::incoming});
    process.push_back({MassiveState{m, -decay.speed * n}, Leg::outgoing});
    process.push_back({TachyonState::infinitely_fast(mu, n, n), Leg::outgoing});
    return process;
}

} // namespace tachyon
