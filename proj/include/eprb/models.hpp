#pragma once

// Source models for the two-station polarization coincidence experiment.
//
// Angles are plain radians.  `theta` is the hidden emission angle measured
// from the polarizer axis at station A and `phi` is the angle of polarizer B
// relative to polarizer A.

#include <string_view>

namespace eprb::models {

enum class ModelKind {
    FurryLinear,  ///< random shared linear polarization, independent arms
    CircularHbt,  ///< circularly polarized fields, second-order coherence
    QmReference,  ///< quantum-mechanical closed form only
};

/// Which detector channels the reported coincidence refers to.
enum class ChannelConvention {
    OrthogonalPass,  ///< sin^2(phi)/2
    ParallelPass,    ///< cos^2(phi)/2
};

/// How the coherence numerator contracts the two Jones vectors.
enum class ContractionMode {
    Eq6Literal,          ///< the printed real integrand; normative
    BilinearMagnitude,   ///< |E_A . E_B|^2 without conjugation
    HermitianMagnitude,  ///< |<E_A, E_B>|^2
};

struct SourceModel {
    ModelKind kind = ModelKind::CircularHbt;
    // Only affects QmReference; the Furry and HBT curves are fixed by their
    // construction.
    ChannelConvention channel_convention = ChannelConvention::OrthogonalPass;

    friend bool operator==(const SourceModel&, const SourceModel&) = default;
};

std::string_view to_string(ModelKind kind) noexcept;
std::string_view to_string(ChannelConvention convention) noexcept;
std::string_view to_string(ContractionMode mode) noexcept;

/// cos^2(theta) cos^2(theta - phi): product of the two Malus-law arm rates.
double furry_integrand(double theta, double phi);

/// 1/4 + cos(2 phi)/8, the ensemble average of furry_integrand.
double furry_closed_form(double phi);

/// (cos(theta) sin(theta - phi) - sin(theta) cos(theta - phi))^2, evaluated
/// exactly as written.  Analytically sin^2(phi), independent of theta.
double hbt_integrand(double theta, double phi);

/// sin^2(phi)/2.
double hbt_closed_form(double phi);

/// sin^2(phi)/2 for OrthogonalPass, cos^2(phi)/2 for ParallelPass.
double qm_reference(double phi, ChannelConvention convention);

/// Per-realization numerator of the coherence ratio under `mode`.
double coherence_numerator(double theta, double phi, ContractionMode mode);

/// |E_A|^2 + |E_B|^2 for one realization; analytically 2.
double coherence_denominator(double theta, double phi);

/// Analytic ensemble average of coherence_numerator divided by that of
/// coherence_denominator.  Eq6Literal gives sin^2(phi)/2, BilinearMagnitude
/// 1/4 - cos(2 phi)/8 and HermitianMagnitude the constant 1/4.
double coherence_closed_form(double phi, ContractionMode mode);

/// Malus-law transmitted intensity cos^2(angle) for a unit linear field.
double malus_intensity(double angle);

/// The model's coincidence curve P(phi) in closed form.
double closed_form(const SourceModel& model, double phi);

}  // namespace eprb::models
