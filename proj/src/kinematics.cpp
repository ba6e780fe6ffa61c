#include "tachyon/kinematics.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace tachyon {

namespace {

constexpr double kSingularSlack = 4.0 * std::numeric_limits<double>::epsilon();

bool is_singular(double k_v2) { return std::abs(k_v2 - 1.0) <= kSingularSlack; }

void require_superluminal(double w, const UnitSystem& units, const char* what) {
    if (!(std::abs(w) > units.c) || !std::isfinite(w))
        throw RegimeError(std::string(what) + ": |w| must exceed c, got " + std::to_string(w));
}

} // namespace

bool SpacetimeEvent::finite() const {
    return std::isfinite(t) && std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
}

bool SuperluminalCoords::finite() const { return std::isfinite(chi) && tau.allFinite(); }

GeneralBoost GeneralBoost::subluminal(double K, double V) {
    GeneralBoost b;
    b.K = K;
    b.V = V;
    b.regime = Regime::subluminal;
    b.validate();
    return b;
}

GeneralBoost GeneralBoost::lorentz(double V, const UnitSystem& units) {
    return subluminal(1.0 / units.c2(), V);
}

GeneralBoost GeneralBoost::superluminal(double W, const UnitSystem& units, SignChoice sign) {
    GeneralBoost b;
    b.K = 1.0 / units.c2();
    b.V = W;
    b.regime = Regime::superluminal;
    b.sign_choice = sign;
    b.validate();
    return b;
}

GeneralBoost GeneralBoost::infinite() {
    GeneralBoost b;
    b.V = std::numeric_limits<double>::infinity();
    b.regime = Regime::infinite;
    return b;
}

void GeneralBoost::validate() const {
    if (std::abs(transverse_sign_y) != 1 || std::abs(transverse_sign_z) != 1)
        throw std::invalid_argument("GeneralBoost: transverse signs must be +1 or -1");
    switch (regime) {
    case Regime::subluminal:
        if (!std::isfinite(K) || !std::isfinite(V))
            throw RegimeError("GeneralBoost: K and V must be finite");
        if (is_singular(K * V * V))
            throw SingularVelocityError("GeneralBoost: K V^2 = 1 is the light-speed frame");
        if (!(K * V * V < 1.0))
            throw RegimeError("GeneralBoost: subluminal regime requires K V^2 < 1");
        break;
    case Regime::superluminal:
        if (!(K > 0.0) || !std::isfinite(V))
            throw RegimeError("GeneralBoost: superluminal regime requires K > 0 and finite W");
        if (is_singular(K * V * V))
            throw SingularVelocityError("GeneralBoost: K W^2 = 1 is the light-speed frame");
        if (!(K * V * V > 1.0))
            throw RegimeError("GeneralBoost: superluminal regime requires K W^2 > 1");
        break;
    case Regime::infinite:
        break;
    }
}

double coefficient_A(double K, double V, SignChoice sign) {
    const double kv2 = K * V * V;
    if (is_singular(kv2))
        throw SingularVelocityError("coefficient_A: K V^2 = 1");
    if (kv2 < 1.0)
        return 1.0 / std::sqrt(1.0 - kv2);
    return sign_factor(sign) * (V / std::abs(V)) / std::sqrt(kv2 - 1.0);
}

double metric_constant_from(double a_plus, double a_minus, double V) {
    const double prod = a_plus * a_minus;
    return (prod - 1.0) / (V * V * prod);
}

double compose_collinear(double K, double V1, double V2) {
    return (V1 + V2) / (1.0 + K * V1 * V2);
}

SpacetimeEvent boost_subluminal(const SpacetimeEvent& e, const GeneralBoost& b) {
    if (b.regime != Regime::subluminal)
        throw RegimeError("boost_subluminal: boost is not subluminal");
    b.validate();
    const double a = coefficient_A(b.K, b.V);
    return {a * (e.t - b.K * b.V * e.x), a * (e.x - b.V * e.t), e.y, e.z};
}

SuperluminalCoords boost_superluminal(const SpacetimeEvent& e, const GeneralBoost& b,
                                      const UnitSystem& units) {
    if (b.regime == Regime::infinite)
        return infinite_boost(e, units);
    if (b.regime != Regime::superluminal)
        throw RegimeError("boost_superluminal: boost is not superluminal");
    b.validate();
    const double a = coefficient_A(b.K, b.V, b.sign_choice);
    SuperluminalCoords out;
    out.chi = a * (e.x - b.V * e.t);
    out.tau = Vec3(a * (e.t - b.K * b.V * e.x),
                   b.transverse_sign_y * e.y / units.c,
                   b.transverse_sign_z * e.z / units.c);
    return out;
}

SpacetimeEvent unboost_superluminal(const SuperluminalCoords& s, const GeneralBoost& b,
                                    const UnitSystem& units) {
    if (b.regime == Regime::infinite)
        return infinite_unboost(s, units);
    if (b.regime != Regime::superluminal)
        throw RegimeError("unboost_superluminal: boost is not superluminal");
    b.validate();
    const double a = coefficient_A(b.K, b.V, b.sign_choice);
    const double x = (s.chi + b.V * s.tau.x()) / (a * (1.0 - b.K * b.V * b.V));
    const double t = s.tau.x() / a + b.K * b.V * x;
    return {t, x, b.transverse_sign_y * units.c * s.tau.y(),
            b.transverse_sign_z * units.c * s.tau.z()};
}

SuperluminalCoords infinite_boost(const SpacetimeEvent& e, const UnitSystem& units) {
    return {units.c * e.t, e.position() / units.c};
}

SpacetimeEvent infinite_unboost(const SuperluminalCoords& s, const UnitSystem& units) {
    return SpacetimeEvent::from(s.chi / units.c, units.c * s.tau);
}

SpacetimeEvent lorentz_boost(const SpacetimeEvent& e, const Vec3& V, const UnitSystem& units) {
    const double v2 = V.squaredNorm();
    if (v2 == 0.0)
        return e;
    if (is_singular(v2 / units.c2()))
        throw SingularVelocityError("lorentz_boost: |V| = c");
    if (!(v2 < units.c2()))
        throw RegimeError("lorentz_boost: |V| must be below c");
    const double gamma = 1.0 / std::sqrt(1.0 - v2 / units.c2());
    const Vec3 r = e.position();
    const double r_par = r.dot(V) / v2;
    const Vec3 r_new = r + ((gamma - 1.0) * r_par - gamma * e.t) * V;
    return SpacetimeEvent::from(gamma * (e.t - r.dot(V) / units.c2()), r_new);
}

SuperluminalCoords boost_superluminal_3d(const SpacetimeEvent& e, const Vec3& W,
                                         const UnitSystem& units, SignChoice sign) {
    const double w2 = W.squaredNorm();
    require_superluminal(std::sqrt(w2), units, "boost_superluminal_3d");
    const Vec3 V = units.c2() * W / w2;
    SuperluminalCoords out = infinite_boost(lorentz_boost(e, V, units), units);
    if (sign == SignChoice::plus) {
        const Vec3 n = W / std::sqrt(w2);
        out.chi = -out.chi;
        out.tau -= 2.0 * out.tau.dot(n) * n;
    }
    return out;
}

SuperluminalCoords superluminal_to_superluminal(const SuperluminalCoords& s, double W1, double W2,
                                                const UnitSystem& units, SignChoice sign) {
    const SpacetimeEvent e = unboost_superluminal(s, GeneralBoost::superluminal(W1, units, sign), units);
    return boost_superluminal(e, GeneralBoost::superluminal(W2, units, sign), units);
}

double interval(const SpacetimeEvent& a, const SpacetimeEvent& b, const UnitSystem& units) {
    const double dt = b.t - a.t;
    return units.c2() * dt * dt - (b.position() - a.position()).squaredNorm();
}

double interval_superluminal(const SuperluminalCoords& a, const SuperluminalCoords& b,
                             const UnitSystem& units) {
    const double dchi = b.chi - a.chi;
    return dchi * dchi - units.c2() * (b.tau - a.tau).squaredNorm();
}

double superluminal_length(double delta_chi, double w, const UnitSystem& units, SignChoice sign) {
    require_superluminal(w, units, "superluminal_length");
    const double ratio = w / units.c;
    return sign_factor(sign) * (w / std::abs(w)) * delta_chi * std::sqrt(ratio * ratio - 1.0);
}

TimeFlow superluminal_time_flow(double delta_tau_x, double w, const UnitSystem& units,
                                SignChoice sign) {
    require_superluminal(w, units, "superluminal_time_flow");
    const double ratio = w / units.c;
    TimeFlow flow;
    flow.dt = -sign_factor(sign) * (w / std::abs(w)) * delta_tau_x / std::sqrt(ratio * ratio - 1.0);
    return flow;
}

} // namespace tachyon
