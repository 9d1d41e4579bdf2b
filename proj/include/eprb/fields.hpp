#pragma once

// Jones-vector algebra for the counter-rotating circularly polarized source
// fields seen at the two photodetectors.  Components are expressed in the
// {x, y} basis aligned with the polarizer at station A; propagation phase
// factors are dropped.

#include <complex>

namespace eprb::fields {

using Complex = std::complex<double>;

struct JonesVector {
    Complex x;
    Complex y;

    friend bool operator==(const JonesVector&, const JonesVector&) = default;
};

/// Field at detector A for emission angle `theta`:
///   x = cos(theta),  y = e^{i pi/4} sin(theta).
/// Throws DomainError for non-finite input.
JonesVector source_field_A(double theta);

/// Field at detector B, whose polarizer sits at `phi` relative to A:
///   x = -e^{i 3pi/4} sin(theta - phi),  y = cos(theta - phi).
/// Depends on the angles only through theta - phi.
JonesVector source_field_B(double theta, double phi);

/// Component-wise product summed without conjugation: u.x v.x + u.y v.y.
Complex bilinear_dot(const JonesVector& u, const JonesVector& v) noexcept;

/// Inner product conjugate-linear in the first argument.
Complex hermitian_dot(const JonesVector& u, const JonesVector& v) noexcept;

/// |x|^2 + |y|^2.
double intensity(const JonesVector& v) noexcept;

}  // namespace eprb::fields
