#pragma once

#include <Eigen/Core>

#include <stdexcept>
#include <string>

namespace tachyon {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;

/// Speed of light and action quantum. Natural units (c = hbar = 1) by default.
struct UnitSystem {
    double c = 1.0;
    double hbar = 1.0;

    UnitSystem() = default;
    UnitSystem(double c_, double hbar_) : c(c_), hbar(hbar_) {
        if (!(c > 0.0) || !(hbar > 0.0))
            throw std::invalid_argument("UnitSystem: c and hbar must be positive");
    }

    double c2() const { return c * c; }
};

/// Absolute tolerance used for floating comparisons in natural units.
inline constexpr double kDefaultTolerance = 1e-12;

/// A velocity or parameter lies outside the regime an operation is defined for.
class RegimeError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// K V^2 = 1: the light-speed frame, where the transformation is singular.
class SingularVelocityError : public RegimeError {
public:
    using RegimeError::RegimeError;
};

/// Tachyon parameters violate w^2 - c^2 < (s.w)^2.
class ConstraintViolation : public RegimeError {
public:
    using RegimeError::RegimeError;
};

inline int sign_of(double x) { return x > 0.0 ? 1 : (x < 0.0 ? -1 : 0); }

} // namespace tachyon
