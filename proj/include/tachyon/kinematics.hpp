#pragma once

// Generalized inertial-frame transformations parameterized by the metric
// constant K (K = 0 Galilean, K = 1/c^2 Lorentzian, K < 0 Euclidean), plus
// the superluminal branch and the infinite-velocity exchange map.

#include "tachyon/units.hpp"

namespace tachyon {

struct SpacetimeEvent {
    double t = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Vec3 position() const { return {x, y, z}; }
    static SpacetimeEvent from(double t, const Vec3& r) { return {t, r.x(), r.y(), r.z()}; }
    bool finite() const;
};

/// Coordinates in a superluminal frame: one spatial axis chi, three temporal
/// axes tau.
struct SuperluminalCoords {
    double chi = 0.0;
    Vec3 tau = Vec3::Zero();

    bool finite() const;
};

enum class Regime { subluminal, superluminal, infinite };
enum class SignChoice { plus, minus };

inline double sign_factor(SignChoice s) { return s == SignChoice::plus ? 1.0 : -1.0; }

/// Collinear (x-axis) frame change. The sign choice only matters for the
/// superluminal regime; the transverse signs only for superluminal output.
struct GeneralBoost {
    double K = 1.0;
    double V = 0.0;
    Regime regime = Regime::subluminal;
    SignChoice sign_choice = SignChoice::minus;
    int transverse_sign_y = 1;
    int transverse_sign_z = 1;

    static GeneralBoost subluminal(double K, double V);
    static GeneralBoost lorentz(double V, const UnitSystem& units = {});
    static GeneralBoost superluminal(double W, const UnitSystem& units = {},
                                     SignChoice sign = SignChoice::minus);
    static GeneralBoost infinite();

    /// Throws RegimeError if the regime invariants do not hold.
    void validate() const;
};

/// A(V) = 1/sqrt(1 - K V^2) below the singular speed; above it (K > 0 only)
/// the antisymmetric branch +-(V/|V|)/sqrt(K V^2 - 1) with the given sign.
double coefficient_A(double K, double V, SignChoice sign = SignChoice::minus);

/// Recovers K from A(V) and A(-V): (A(V)A(-V) - 1)/(V^2 A(V)A(-V)).
double metric_constant_from(double a_plus, double a_minus, double V);

/// Composition law for collinear velocities: (V1 + V2)/(1 + K V1 V2).
double compose_collinear(double K, double V1, double V2);

SpacetimeEvent boost_subluminal(const SpacetimeEvent& e, const GeneralBoost& b);

SuperluminalCoords boost_superluminal(const SpacetimeEvent& e, const GeneralBoost& b,
                                      const UnitSystem& units = {});

/// Inverse of boost_superluminal for the same boost parameters.
SpacetimeEvent unboost_superluminal(const SuperluminalCoords& s, const GeneralBoost& b,
                                    const UnitSystem& units = {});

/// Observer moving infinitely fast: chi = c t, tau = r / c.
SuperluminalCoords infinite_boost(const SpacetimeEvent& e, const UnitSystem& units = {});
SpacetimeEvent infinite_unboost(const SuperluminalCoords& s, const UnitSystem& units = {});

/// Standard 3D Lorentz boost into the frame moving with velocity V.
SpacetimeEvent lorentz_boost(const SpacetimeEvent& e, const Vec3& V, const UnitSystem& units = {});

/// 3D superluminal frame change, built as the subluminal boost with velocity
/// c^2 W/|W|^2 followed by infinite_boost. The plus sign negates chi and the
/// component of tau along W. Transverse signs are fixed to +1.
SuperluminalCoords boost_superluminal_3d(const SpacetimeEvent& e, const Vec3& W,
                                         const UnitSystem& units = {},
                                         SignChoice sign = SignChoice::minus);

/// Maps coordinates of superluminal frame W1 into superluminal frame W2
/// (collinear, both using the same sign convention).
SuperluminalCoords superluminal_to_superluminal(const SuperluminalCoords& s, double W1, double W2,
                                                const UnitSystem& units = {},
                                                SignChoice sign = SignChoice::minus);

/// c^2 dt^2 - dr^2.
double interval(const SpacetimeEvent& a, const SpacetimeEvent& b, const UnitSystem& units = {});
/// dchi^2 - c^2 dtau^2.
double interval_superluminal(const SuperluminalCoords& a, const SuperluminalCoords& b,
                             const UnitSystem& units = {});

/// Observed length of a superluminal object of rest length delta_chi.
double superluminal_length(double delta_chi, double w, const UnitSystem& units = {},
                           SignChoice sign = SignChoice::minus);

struct TimeFlow {
    double dt = 0.0;
    double dtau_y = 0.0;
    double dtau_z = 0.0;
};

/// Stationary-frame time elapsed for a superluminal clock advancing delta_tau_x.
TimeFlow superluminal_time_flow(double delta_tau_x, double w, const UnitSystem& units = {},
                                SignChoice sign = SignChoice::minus);

} // namespace tachyon
