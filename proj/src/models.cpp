#include "eprb/models.hpp"

#include <cmath>
#include <string>

#include "eprb/errors.hpp"
#include "eprb/fields.hpp"

namespace eprb::models {

namespace {

void require_finite(double theta, double phi) {
    if (!std::isfinite(theta) || !std::isfinite(phi)) {
        throw DomainError("non-finite angle passed to model integrand");
    }
}

void require_finite(double phi) {
    if (!std::isfinite(phi)) {
        throw DomainError("non-finite polarizer angle");
    }
}

double square(double v) { return v * v; }

}  // namespace

std::string_view to_string(ModelKind kind) noexcept {
    switch (kind) {
        case ModelKind::FurryLinear: return "furry";
        case ModelKind::CircularHbt: return "hbt";
        case ModelKind::QmReference: return "qm";
    }
    return "unknown";
}

std::string_view to_string(ChannelConvention convention) noexcept {
    switch (convention) {
        case ChannelConvention::OrthogonalPass: return "orthogonal";
        case ChannelConvention::ParallelPass: return "parallel";
    }
    return "unknown";
}

std::string_view to_string(ContractionMode mode) noexcept {
    switch (mode) {
        case ContractionMode::Eq6Literal: return "eq6";
        case ContractionMode::BilinearMagnitude: return "bilinear";
        case ContractionMode::HermitianMagnitude: return "hermitian";
    }
    return "unknown";
}

double furry_integrand(double theta, double phi) {
    require_finite(theta, phi);
    return square(std::cos(theta)) * square(std::cos(theta - phi));
}

double furry_closed_form(double phi) {
    require_finite(phi);
    return 0.25 + std::cos(2.0 * phi) / 8.0;
}

double hbt_integrand(double theta, double phi) {
    require_finite(theta, phi);
    const double rel = theta - phi;
    return square(std::cos(theta) * std::sin(rel) - std::sin(theta) * std::cos(rel));
}

double hbt_closed_form(double phi) {
    require_finite(phi);
    return square(std::sin(phi)) / 2.0;
}

double qm_reference(double phi, ChannelConvention convention) {
    require_finite(phi);
    switch (convention) {
        case ChannelConvention::OrthogonalPass: return square(std::sin(phi)) / 2.0;
        case ChannelConvention::ParallelPass: return square(std::cos(phi)) / 2.0;
    }
    throw UsageError("unknown channel convention");
}

double coherence_numerator(double theta, double phi, ContractionMode mode) {
    switch (mode) {
        case ContractionMode::Eq6Literal:
            return hbt_integrand(theta, phi);
        case ContractionMode::BilinearMagnitude:
            return std::norm(fields::bilinear_dot(fields::source_field_A(theta),
                                                  fields::source_field_B(theta, phi)));
        case ContractionMode::HermitianMagnitude:
            return std::norm(fields::hermitian_dot(fields::source_field_A(theta),
                                                   fields::source_field_B(theta, phi)));
    }
    throw UsageError("unknown contraction mode " +
                     std::to_string(static_cast<int>(mode)));
}

double coherence_denominator(double theta, double phi) {
    return fields::intensity(fields::source_field_A(theta)) +
           fields::intensity(fields::source_field_B(theta, phi));
}

double coherence_closed_form(double phi, ContractionMode mode) {
    require_finite(phi);
    switch (mode) {
        case ContractionMode::Eq6Literal: return hbt_closed_form(phi);
        case ContractionMode::BilinearMagnitude: return 0.25 - std::cos(2.0 * phi) / 8.0;
        case ContractionMode::HermitianMagnitude: return 0.25;
    }
    throw UsageError("unknown contraction mode " +
                     std::to_string(static_cast<int>(mode)));
}

double malus_intensity(double angle) {
    require_finite(angle);
    return square(std::cos(angle));
}

double closed_form(const SourceModel& model, double phi) {
    switch (model.kind) {
        case ModelKind::FurryLinear: return furry_closed_form(phi);
        case ModelKind::CircularHbt: return hbt_closed_form(phi);
        case ModelKind::QmReference: return qm_reference(phi, model.channel_convention);
    }
    throw UsageError("unknown model kind");
}

}  // namespace eprb::models
