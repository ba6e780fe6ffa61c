#include "tachyon/fourmomentum.hpp"

#include <Eigen/Geometry>

#include <cmath>
#include <string>

namespace tachyon {

namespace {

double lorentz_gamma(const Vec3& v, const UnitSystem& units) {
    return 1.0 / std::sqrt(1.0 - v.squaredNorm() / units.c2());
}

void require_subluminal(const Vec3& V, const UnitSystem& units, const char* what) {
    if (!V.allFinite() || !(V.squaredNorm() < units.c2()))
        throw RegimeError(std::string(what) + ": frame velocity must satisfy |V| < c");
}

// sqrt(w^2/c^2 - 1)
double superluminal_root(const Vec3& w, const UnitSystem& units) {
    return std::sqrt(w.squaredNorm() / units.c2() - 1.0);
}

} // namespace

const char* to_string(Family f) {
    switch (f) {
    case Family::timelike_massive: return "timelike-massive";
    case Family::spacelike_s: return "spacelike-s";
    case Family::tachyon: return "tachyon";
    case Family::tachyon_dual: return "tachyon-dual";
    }
    return "unknown";
}

TachyonState TachyonState::infinitely_fast(double mu, const Vec3& direction, const Vec3& s,
                                           bool pseudo) {
    TachyonState t;
    t.mu = mu;
    t.w = direction.normalized();
    t.s = s;
    t.pseudo = pseudo;
    t.infinite_speed = true;
    return t;
}

int TachyonState::helicity() const { return sign_of(s.dot(w)); }

bool satisfies_constraint(const Vec3& w, const Vec3& s, const UnitSystem& units, double tol) {
    return std::abs(s.dot(w)) / units.c - superluminal_root(w, units) > tol;
}

void validate(const TachyonState& state, const UnitSystem& units, double tol) {
    if (!(state.mu > 0.0) || !std::isfinite(state.mu))
        throw RegimeError("tachyon state: mu must be positive");
    if (!state.w.allFinite() || !state.s.allFinite())
        throw RegimeError("tachyon state: non-finite components");
    if (std::abs(state.s.norm() - 1.0) > 1e3 * tol)
        throw RegimeError("tachyon state: s must be a unit vector");
    if (state.infinite_speed) {
        if (std::abs(std::abs(state.s.dot(state.w.normalized())) - 1.0) > 1e3 * tol)
            throw ConstraintViolation("tachyon state: an infinitely fast tachyon moves along +-s");
        return;
    }
    if (!(state.w.squaredNorm() > units.c2()))
        throw RegimeError("tachyon state: |w| must exceed c");
    if (!satisfies_constraint(state.w, state.s, units, tol))
        throw ConstraintViolation("tachyon state: requires w^2 - c^2 < (s.w)^2");
}

void validate(const MassiveState& state, const UnitSystem& units) {
    if (!(state.m > 0.0) || !std::isfinite(state.m))
        throw RegimeError("massive state: m must be positive");
    if (!state.v.allFinite() || !(state.v.squaredNorm() < units.c2()))
        throw RegimeError("massive state: |v| must be below c");
}

TransformedVelocity velocity_compose(const Vec3& v, const Vec3& V, const UnitSystem& units,
                                     double tol) {
    require_subluminal(V, units, "velocity_compose");
    const double V2 = V.squaredNorm();
    if (V2 == 0.0)
        return {v, false};
    const Vec3 par = (v.dot(V) / V2) * V;
    const Vec3 num = std::sqrt(1.0 - V2 / units.c2()) * (v - par) - V + par;
    const double den = 1.0 - v.dot(V) / units.c2();
    if (std::abs(den) <= tol)
        return {num.normalized(), true};
    return {num / den, false};
}

Vec3 transform_velocity(const Vec3& v, const Vec3& V, const UnitSystem& units) {
    const auto r = velocity_compose(v, V, units);
    if (r.infinite)
        throw RegimeError("transform_velocity: velocity becomes infinite (v.V = c^2)");
    return r.velocity;
}

CovariantFourVector four_vector(const MassiveState& state, const UnitSystem& units) {
    validate(state, units);
    const double g = lorentz_gamma(state.v, units);
    return {g, g * state.v / units.c, Family::timelike_massive};
}

CovariantFourVector four_vector(const SpacelikeParams& params, const UnitSystem& units) {
    if (!params.v.allFinite() || !(params.v.squaredNorm() < units.c2()))
        throw RegimeError("spacelike-s four-vector: |v| must be below c");
    const double v2 = params.v.squaredNorm();
    if (v2 == 0.0)
        return {0.0, params.s, Family::spacelike_s};
    const double g = lorentz_gamma(params.v, units);
    const double sv = params.s.dot(params.v);
    const Vec3 par = (sv / v2) * params.v;
    return {g * sv / units.c, params.s - par + g * par, Family::spacelike_s};
}

CovariantFourVector four_vector(const TachyonState& state, Family family, const UnitSystem& units,
                                double tol) {
    validate(state, units, tol);
    const int h = state.helicity();
    if (state.infinite_speed) {
        if (family == Family::tachyon)
            return {0.0, h * state.w.normalized(), Family::tachyon};
        if (family == Family::tachyon_dual)
            return {1.0, Vec3::Zero(), Family::tachyon_dual};
        throw std::invalid_argument("four_vector: tachyon state needs a tachyon family");
    }
    const double root = superluminal_root(state.w, units);
    switch (family) {
    case Family::tachyon:
        return {h / root, h * (state.w / units.c) / root, Family::tachyon};
    case Family::tachyon_dual: {
        const double sw = std::abs(state.s.dot(state.w)) / units.c;
        const double den = sw - root;
        const double w2 = state.w.squaredNorm() / units.c2();
        return {(w2 / root - sw) / den, ((state.w / units.c) / root - h * state.s) / den,
                Family::tachyon_dual};
    }
    default:
        throw std::invalid_argument("four_vector: tachyon state needs a tachyon family");
    }
}

EnergyMomentum energy_momentum(const MassiveState& state, const UnitSystem& units) {
    const auto A = four_vector(state, units);
    return {state.m * units.c2() * A.a0, state.m * units.c * A.a};
}

EnergyMomentum energy_momentum(const TachyonState& state, const UnitSystem& units) {
    const auto A = four_vector(state, Family::tachyon, units);
    return {state.mu * units.c2() * A.a0, state.mu * units.c * A.a};
}

CovariantFourVector boost_four_vector(const CovariantFourVector& A, const Vec3& V,
                                      const UnitSystem& units) {
    require_subluminal(V, units, "boost_four_vector");
    const double V2 = V.squaredNorm();
    if (V2 == 0.0)
        return A;
    const double g = lorentz_gamma(V, units);
    const double AV = A.a.dot(V);
    const Vec3 par = (AV / V2) * V;
    CovariantFourVector out;
    out.a0 = g * (A.a0 - AV / units.c);
    out.a = A.a - par + g * (par - A.a0 * V / units.c);
    out.family = A.family;
    return out;
}

Mat4 boost_matrix(const Vec3& V, const UnitSystem& units) {
    require_subluminal(V, units, "boost_matrix");
    Mat4 L = Mat4::Identity();
    const double V2 = V.squaredNorm();
    if (V2 == 0.0)
        return L;
    const double g = lorentz_gamma(V, units);
    const Vec3 beta = V / units.c;
    L(0, 0) = g;
    L.block<1, 3>(0, 1) = -g * beta.transpose();
    L.block<3, 1>(1, 0) = -g * beta;
    L.block<3, 3>(1, 1) = Mat3::Identity() + (g - 1.0) * (V * V.transpose()) / V2;
    return L;
}

std::optional<int> helicity_transform(const TachyonState& state, const Vec3& V,
                                      const UnitSystem& units, double tol) {
    require_subluminal(V, units, "helicity_transform");
    const int h = state.helicity();
    if (state.infinite_speed) {
        const double d = state.w.normalized().dot(V) / units.c;
        return d > tol ? -h : h;
    }
    const double margin = units.c2() - state.w.dot(V);
    if (std::abs(margin) <= tol * units.c2())
        return std::nullopt;
    return h * sign_of(margin);
}

Vec3 infinite_velocity_frame(const TachyonState& state, const UnitSystem& units, double tol) {
    validate(state, units, tol);
    if (state.infinite_speed)
        return Vec3::Zero();
    const double w2 = state.w.squaredNorm();
    const double sw = state.s.dot(state.w);
    const double root = std::sqrt(w2 - units.c2());
    return units.c2() * (state.w - sign_of(sw) * root * state.s) / (w2 - std::abs(sw) * root);
}

Mat3 wigner_rotation(const Vec3& v, const Vec3& V, const UnitSystem& units) {
    require_subluminal(v, units, "wigner_rotation");
    require_subluminal(V, units, "wigner_rotation");
    // Rest frame -> lab (boost by v), lab -> moving frame (boost by -V).
    const Vec3 a = v;
    const Vec3 b = -V;
    const Vec3 cross = a.cross(b);
    const double cross_norm = cross.norm();
    const double na = a.norm();
    const double nb = b.norm();
    if (na == 0.0 || nb == 0.0 || cross_norm <= 1e-300 || cross_norm <= 1e-15 * na * nb)
        return Mat3::Identity();
    // coth(eta/2) = (gamma + 1) / (gamma beta)
    const double ga = lorentz_gamma(a, units);
    const double gb = lorentz_gamma(b, units);
    const double coth_a = (ga + 1.0) / (ga * na / units.c);
    const double coth_b = (gb + 1.0) / (gb * nb / units.c);
    const double angle = 2.0 * std::atan2(cross_norm, coth_a * coth_b * na * nb + a.dot(b));
    return Eigen::AngleAxisd(angle, cross / cross_norm).toRotationMatrix();
}

Vec3 s_transform(const TachyonState& state, const Vec3& V, const UnitSystem& units, double tol) {
    require_subluminal(V, units, "s_transform");
    const Vec3 frame = infinite_velocity_frame(state, units, tol);
    return (wigner_rotation(frame, V, units) * state.s).normalized();
}

TachyonState transform_state(const TachyonState& state, const Vec3& V, const UnitSystem& units,
                             double tol) {
    validate(state, units, tol);
    TachyonState out = state;
    out.s = s_transform(state, V, units, tol);
    if (state.infinite_speed) {
        const double V2 = V.squaredNorm();
        const Vec3 n = state.w.normalized();
        const double nV = n.dot(V);
        if (V2 == 0.0 || std::abs(nV) <= tol * units.c)
            return out;
        // Limit of the velocity transformation for |w| -> infinity along n.
        const Vec3 par = (nV / V2) * V;
        out.w = -units.c2() * (std::sqrt(1.0 - V2 / units.c2()) * (n - par) + par) / nV;
        out.infinite_speed = false;
        return out;
    }
    const auto w = velocity_compose(state.w, V, units, tol);
    out.w = w.velocity;
    out.infinite_speed = w.infinite;
    return out;
}

MassiveState transform_state(const MassiveState& state, const Vec3& V, const UnitSystem& units) {
    return {state.m, transform_velocity(state.v, V, units)};
}

SpacelikeParams transform_params(const SpacelikeParams& params, const Vec3& V,
                                 const UnitSystem& units) {
    return {transform_velocity(params.v, V, units),
            (wigner_rotation(params.v, V, units) * params.s).normalized()};
}

UniqueDecay solve_unique_decay(double m, double mu, const UnitSystem& units) {
    if (!(m > 0.0) || !(mu > 0.0))
        throw RegimeError("solve_unique_decay: m and mu must be positive");
    // momentum balance: m v gamma - (-m v gamma) = mu c
    const auto imbalance = [&](double v) {
        return 2.0 * m * v / std::sqrt(1.0 - v * v / units.c2()) - mu * units.c;
    };
    double lo = 0.0;
    double hi = units.c;
    int iterations = 0;
    while (hi - lo > 1e-12 * units.c) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi)
            break;
        (imbalance(mid) < 0.0 ? lo : hi) = mid;
        ++iterations;
    }
    return {0.5 * (lo + hi), mu * units.c, iterations};
}

double unique_decay_speed_closed_form(double m, double mu, const UnitSystem& units) {
    return mu * units.c / std::sqrt(4.0 * m * m + mu * mu);
}

} // namespace tachyon
