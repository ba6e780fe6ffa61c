#pragma once

// Covariant four-vector families for massive particles and tachyons, their
// parameter transformation laws, and the unique tachyon-emitting decay.

#include "tachyon/units.hpp"

#include <optional>

namespace tachyon {

enum class Family {
    timelike_massive, ///< (gamma, gamma v/c)
    spacelike_s,      ///< boost of (0, s) into the frame where the body moves with v
    tachyon,          ///< sgn(s.w)(1, w/c)/sqrt(w^2/c^2 - 1)
    tachyon_dual,     ///< timelike partner of the tachyon family
};

const char* to_string(Family f);

/// Dimensionless four-vector (A0, A). Physical energy-momentum multiplies by
/// m c^2 (or mu c^2).
struct CovariantFourVector {
    double a0 = 0.0;
    Vec3 a = Vec3::Zero();
    Family family = Family::timelike_massive;

    /// (A0)^2 - A^2
    double minkowski_norm() const { return a0 * a0 - a.squaredNorm(); }
};

struct MassiveState {
    double m = 1.0;
    Vec3 v = Vec3::Zero();
};

/// Tachyon of mass parameter mu moving with |w| > c, direction parameter s.
/// With infinite_speed set, w holds only the direction of motion.
struct TachyonState {
    double mu = 1.0;
    Vec3 w = Vec3::UnitX();
    Vec3 s = Vec3::UnitX();
    bool pseudo = false;
    bool infinite_speed = false;

    static TachyonState infinitely_fast(double mu, const Vec3& direction, const Vec3& s,
                                        bool pseudo = false);

    /// sgn(s.w), the sign entering the tachyon energy-momentum.
    int helicity() const;
};

/// Parameters of the spacelike-s family: velocity v (|v| < c) and unit s.
struct SpacelikeParams {
    Vec3 v = Vec3::Zero();
    Vec3 s = Vec3::UnitX();
};

struct EnergyMomentum {
    double E = 0.0;
    Vec3 p = Vec3::Zero();
};

/// Validity of a tachyon state; throws RegimeError / ConstraintViolation.
void validate(const TachyonState& state, const UnitSystem& units = {},
              double tol = kDefaultTolerance);
void validate(const MassiveState& state, const UnitSystem& units = {});

/// True when w^2 - c^2 < (s.w)^2 holds with a margin of tol in the
/// normalized form |s.w|/c - sqrt(w^2/c^2 - 1) > tol.
bool satisfies_constraint(const Vec3& w, const Vec3& s, const UnitSystem& units = {},
                          double tol = kDefaultTolerance);

/// Result of transforming a velocity into a moving frame. When the denominator
/// 1 - v.V/c^2 vanishes the velocity is infinite and `velocity` carries only
/// its direction.
struct TransformedVelocity {
    Vec3 velocity = Vec3::Zero();
    bool infinite = false;
};

TransformedVelocity velocity_compose(const Vec3& v, const Vec3& V, const UnitSystem& units = {},
                                     double tol = kDefaultTolerance);

/// Same as velocity_compose but throws RegimeError on the infinite outcome.
Vec3 transform_velocity(const Vec3& v, const Vec3& V, const UnitSystem& units = {});

CovariantFourVector four_vector(const MassiveState& state, const UnitSystem& units = {});
CovariantFourVector four_vector(const SpacelikeParams& params, const UnitSystem& units = {});
CovariantFourVector four_vector(const TachyonState& state, Family family,
                                const UnitSystem& units = {}, double tol = kDefaultTolerance);

EnergyMomentum energy_momentum(const MassiveState& state, const UnitSystem& units = {});
EnergyMomentum energy_momentum(const TachyonState& state, const UnitSystem& units = {});

/// Components of A seen from the frame moving with velocity V.
CovariantFourVector boost_four_vector(const CovariantFourVector& A, const Vec3& V,
                                      const UnitSystem& units = {});

/// 4x4 matrix acting on (A0, A) for the frame moving with V.
Mat4 boost_matrix(const Vec3& V, const UnitSystem& units = {});

/// New sgn(s.w) after moving to frame V; nullopt when w.V = c^2 within tol c^2.
std::optional<int> helicity_transform(const TachyonState& state, const Vec3& V,
                                      const UnitSystem& units = {}, double tol = kDefaultTolerance);

/// Subluminal frame velocity in which the tachyon moves infinitely fast along
/// +-s. Satisfies w.V = c^2 and |V| < c.
Vec3 infinite_velocity_frame(const TachyonState& state, const UnitSystem& units = {},
                             double tol = kDefaultTolerance);

/// Spatial rotation equal to L(G(V)v) L(V) L(-v), computed in closed form from
/// the rapidity half-angle relation.
Mat3 wigner_rotation(const Vec3& v, const Vec3& V, const UnitSystem& units = {});

/// Direction parameter of the tachyon in the frame moving with V.
Vec3 s_transform(const TachyonState& state, const Vec3& V, const UnitSystem& units = {},
                 double tol = kDefaultTolerance);

/// Full tachyon state seen from frame V. Throws RegimeError when the tachyon
/// becomes infinitely fast there.
TachyonState transform_state(const TachyonState& state, const Vec3& V, const UnitSystem& units = {},
                             double tol = kDefaultTolerance);
MassiveState transform_state(const MassiveState& state, const Vec3& V, const UnitSystem& units = {});
SpacelikeParams transform_params(const SpacelikeParams& params, const Vec3& V,
                                 const UnitSystem& units = {});

struct UniqueDecay {
    double speed = 0.0;            ///< |v| of the decaying particle before and after
    double tachyon_momentum = 0.0; ///< mu c, along the initial velocity
    int iterations = 0;
};

/// Massive particle reversing its velocity while emitting an infinitely fast
/// tachyon: solves 2 m v gamma(v) = mu c by bisection on (0, c).
UniqueDecay solve_unique_decay(double m, double mu, const UnitSystem& units = {});

/// Closed form mu c / sqrt(4 m^2 + mu^2) of the same balance.
double unique_decay_speed_closed_form(double m, double mu, const UnitSystem& units = {});

} // namespace tachyon
