#pragma once

// Ensemble averages over the hidden emission angle theta, uniformly
// distributed on [0, 2 pi), and the coincidence probabilities built on them.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "eprb/models.hpp"

namespace eprb::estimators {

using ThetaFunction = std::function<double(double)>;

struct QuadratureConfig {
    std::size_t nodes = 64;
};

struct MonteCarloConfig {
    std::size_t samples = 100000;
    std::uint64_t seed = 0;
    // Worker threads.  Results do not depend on this value.
    unsigned threads = 1;
};

struct ClosedFormConfig {};

enum class Method { Quadrature, MonteCarlo, ClosedForm };

std::string_view to_string(Method method) noexcept;

struct Estimate {
    double mean = 0.0;
    double std_error = 0.0;
    Method method = Method::ClosedForm;

    friend bool operator==(const Estimate&, const Estimate&) = default;
};

using Averaging = std::variant<QuadratureConfig, MonteCarloConfig>;
using EstimatorSpec = std::variant<ClosedFormConfig, QuadratureConfig, MonteCarloConfig>;

/// Which coincidence expression a sampled estimator evaluates.
enum class CoincidenceForm {
    Auto,        ///< factorized for FurryLinear, coherence ratio for CircularHbt
    Factorized,  ///< <I_A I_B>, valid only for statistically independent arms
    Coherence,   ///< <numerator> / <|E_A|^2 + |E_B|^2>
};

std::string_view to_string(CoincidenceForm form) noexcept;

/// Equal-weight mean of f at theta_k = 2 pi k / N, k = 0..N-1.  Exact for
/// trigonometric polynomials of degree below N.  Requires N >= 8; throws
/// EvaluationError carrying the offending theta if f is non-finite there.
double quadrature_average(const ThetaFunction& f, const QuadratureConfig& config);

/// The k-th hidden-variable draw for `seed`, uniform on [0, 2 pi).  A pure
/// function of (seed, k), so samples can be generated in any order.
double sample_theta(std::uint64_t seed, std::uint64_t k) noexcept;

/// Monte Carlo mean and standard error (unbiased variance) of f over
/// `samples` draws of sample_theta(seed, k).
///
/// Samples are processed in fixed blocks of kMonteCarloBlock consecutive
/// indices.  Each block is reduced with Welford's update and the block
/// statistics are merged in ascending block order, so the result is
/// bitwise-identical for every thread count.
Estimate mc_average(const ThetaFunction& f, const MonteCarloConfig& config);

inline constexpr std::size_t kMonteCarloBlock = 4096;

/// <numerator> / <denominator> averaged with the same method and draws.
/// Throws InternalError when the averaged denominator is below 1e-9.  The
/// reported standard error is the numerator's scaled by the denominator,
/// which assumes a denominator that is constant per realization.
Estimate ratio_average(const ThetaFunction& numerator, const ThetaFunction& denominator,
                       const Averaging& averaging);

/// <I_A(theta) I_B(theta - phi)> with Malus-law arm intensities.  Only the
/// FurryLinear model factorizes; other models raise ModelError.
Estimate factorized_coincidence(const models::SourceModel& model, double phi,
                                const Averaging& averaging);

/// <coherence_numerator> / <coherence_denominator>, both averaged with the
/// same method (and, for Monte Carlo, the same draws).  Requires CircularHbt.
Estimate coherence_coincidence(const models::SourceModel& model, double phi,
                               models::ContractionMode mode, const Averaging& averaging);

struct CurveOptions {
    EstimatorSpec estimator = ClosedFormConfig{};
    models::ContractionMode contraction = models::ContractionMode::Eq6Literal;
    CoincidenceForm form = CoincidenceForm::Auto;
};

struct CoincidenceCurve {
    std::vector<double> phi_grid;
    std::vector<Estimate> values;
    models::SourceModel model;
    EstimatorSpec estimator;
    models::ContractionMode contraction = models::ContractionMode::Eq6Literal;
    CoincidenceForm form = CoincidenceForm::Auto;  // resolved form, Auto for closed forms
};

/// Evaluates the model's coincidence probability at each grid angle.  The
/// grid must be non-empty, finite and strictly increasing.  Monte Carlo
/// estimates reuse the configured seed at every grid point.
CoincidenceCurve scan_curve(const models::SourceModel& model, std::span<const double> phi_grid,
                            const CurveOptions& options);

}  // namespace eprb::estimators
