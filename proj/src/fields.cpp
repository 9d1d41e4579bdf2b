#include "eprb/fields.hpp"

#include <cmath>
#include <numbers>

#include "eprb/errors.hpp"

namespace eprb::fields {

namespace {

const Complex kPhaseQuarter = std::polar(1.0, std::numbers::pi / 4.0);
const Complex kPhaseThreeQuarter = std::polar(1.0, 3.0 * std::numbers::pi / 4.0);

void require_finite(double value, const char* name) {
    if (!std::isfinite(value)) {
        throw DomainError(std::string("non-finite angle ") + name);
    }
}

}  // namespace

JonesVector source_field_A(double theta) {
    require_finite(theta, "theta");
    return {Complex(std::cos(theta), 0.0), kPhaseQuarter * std::sin(theta)};
}

JonesVector source_field_B(double theta, double phi) {
    require_finite(theta, "theta");
    require_finite(phi, "phi");
    const double rel = theta - phi;
    return {-kPhaseThreeQuarter * std::sin(rel), Complex(std::cos(rel), 0.0)};
}

Complex bilinear_dot(const JonesVector& u, const JonesVector& v) noexcept {
    return u.x * v.x + u.y * v.y;
}

Complex hermitian_dot(const JonesVector& u, const JonesVector& v) noexcept {
    return std::conj(u.x) * v.x + std::conj(u.y) * v.y;
}

double intensity(const JonesVector& v) noexcept {
    return std::norm(v.x) + std::norm(v.y);
}

}  // namespace eprb::fields
