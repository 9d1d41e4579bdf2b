#include "eprb/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <string>
#include <thread>

#include "eprb/errors.hpp"

namespace eprb::estimators {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Below this the analytically constant denominator (2) is treated as a bug.
constexpr double kMinDenominator = 1e-9;

std::uint64_t splitmix64(std::uint64_t z) noexcept {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double checked(const ThetaFunction& f, double theta) {
    const double value = f(theta);
    if (!std::isfinite(value)) {
        throw EvaluationError("integrand is non-finite at theta = " + std::to_string(theta),
                              theta);
    }
    return value;
}

struct BlockStats {
    std::size_t count = 0;
    double mean = 0.0;
    double m2 = 0.0;
    std::exception_ptr error;
};

// Chan et al. pairwise combination of running moments.
void merge_into(BlockStats& acc, const BlockStats& block) {
    if (block.count == 0) return;
    if (acc.count == 0) {
        acc.count = block.count;
        acc.mean = block.mean;
        acc.m2 = block.m2;
        return;
    }
    const double n_a = static_cast<double>(acc.count);
    const double n_b = static_cast<double>(block.count);
    const double n = n_a + n_b;
    const double delta = block.mean - acc.mean;
    acc.mean += delta * (n_b / n);
    acc.m2 += block.m2 + delta * delta * (n_a * n_b / n);
    acc.count += block.count;
}

void reduce_block(const ThetaFunction& f, std::uint64_t seed, std::size_t begin,
                  std::size_t end, BlockStats& out) {
    try {
        for (std::size_t k = begin; k < end; ++k) {
            const double value = checked(f, sample_theta(seed, k));
            ++out.count;
            const double delta = value - out.mean;
            out.mean += delta / static_cast<double>(out.count);
            out.m2 += delta * (value - out.mean);
        }
    } catch (...) {
        out.error = std::current_exception();
    }
}

template <class Fn>
Estimate average(const Fn& integrand, const Averaging& averaging) {
    if (const auto* quad = std::get_if<QuadratureConfig>(&averaging)) {
        return {quadrature_average(integrand, *quad), 0.0, Method::Quadrature};
    }
    return mc_average(integrand, std::get<MonteCarloConfig>(averaging));
}

}  // namespace

Estimate ratio_average(const ThetaFunction& numerator, const ThetaFunction& denominator,
                       const Averaging& averaging) {
    const Estimate num = average(numerator, averaging);
    const Estimate den = average(denominator, averaging);
    if (!(den.mean >= kMinDenominator)) {
        throw InternalError("averaged denominator " + std::to_string(den.mean) +
                            " vanished; expected a positive total intensity");
    }
    return {num.mean / den.mean, num.std_error / den.mean, num.method};
}

std::string_view to_string(Method method) noexcept {
    switch (method) {
        case Method::Quadrature: return "quadrature";
        case Method::MonteCarlo: return "mc";
        case Method::ClosedForm: return "closed-form";
    }
    return "unknown";
}

std::string_view to_string(CoincidenceForm form) noexcept {
    switch (form) {
        case CoincidenceForm::Auto: return "auto";
        case CoincidenceForm::Factorized: return "factorized";
        case CoincidenceForm::Coherence: return "coherence";
    }
    return "unknown";
}

double quadrature_average(const ThetaFunction& f, const QuadratureConfig& config) {
    if (config.nodes < 8) {
        throw UsageError("quadrature needs at least 8 nodes, got " +
                         std::to_string(config.nodes));
    }
    const double n = static_cast<double>(config.nodes);
    // Neumaier-compensated sum in node order.
    double sum = 0.0;
    double compensation = 0.0;
    for (std::size_t k = 0; k < config.nodes; ++k) {
        const double value = checked(f, kTwoPi * static_cast<double>(k) / n);
        const double t = sum + value;
        if (std::abs(sum) >= std::abs(value)) {
            compensation += (sum - t) + value;
        } else {
            compensation += (value - t) + sum;
        }
        sum = t;
    }
    return (sum + compensation) / n;
}

double sample_theta(std::uint64_t seed, std::uint64_t k) noexcept {
    const std::uint64_t bits = splitmix64(splitmix64(seed) ^ (k * 0xD1B54A32D192ED03ULL));
    const double unit = static_cast<double>(bits >> 11) * 0x1.0p-53;
    return kTwoPi * unit;
}

Estimate mc_average(const ThetaFunction& f, const MonteCarloConfig& config) {
    if (config.samples < 2) {
        throw UsageError("Monte Carlo needs at least 2 samples for a standard error, got " +
                         std::to_string(config.samples));
    }
    const std::size_t blocks = (config.samples + kMonteCarloBlock - 1) / kMonteCarloBlock;
    std::vector<BlockStats> stats(blocks);

    auto work = [&](std::size_t first, std::size_t stride) {
        for (std::size_t b = first; b < blocks; b += stride) {
            const std::size_t begin = b * kMonteCarloBlock;
            const std::size_t end = std::min(config.samples, begin + kMonteCarloBlock);
            reduce_block(f, config.seed, begin, end, stats[b]);
        }
    };

    const std::size_t workers =
        std::clamp<std::size_t>(config.threads, 1, std::max<std::size_t>(blocks, 1));
    if (workers == 1) {
        work(0, 1);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t t = 0; t < workers; ++t) {
            pool.emplace_back(work, t, workers);
        }
    }

    BlockStats total;
    for (const BlockStats& block : stats) {
        if (block.error) std::rethrow_exception(block.error);
        merge_into(total, block);
    }
    const double n = static_cast<double>(total.count);
    const double variance = total.m2 / (n - 1.0);
    return {total.mean, std::sqrt(std::max(variance, 0.0) / n), Method::MonteCarlo};
}

Estimate factorized_coincidence(const models::SourceModel& model, double phi,
                                const Averaging& averaging) {
    if (model.kind != models::ModelKind::FurryLinear) {
        throw ModelError(
            "the factorized coincidence <I_A I_B> presumes statistically independent "
            "detections in the two arms; only the furry model factorizes, not '" +
            std::string(models::to_string(model.kind)) + "'");
    }
    return average(
        [phi](double theta) {
            return models::malus_intensity(theta) * models::malus_intensity(theta - phi);
        },
        averaging);
}

Estimate coherence_coincidence(const models::SourceModel& model, double phi,
                               models::ContractionMode mode, const Averaging& averaging) {
    if (model.kind != models::ModelKind::CircularHbt) {
        throw ModelError("the coherence-ratio coincidence is defined for the hbt model only, not '" +
                         std::string(models::to_string(model.kind)) + "'");
    }
    return ratio_average(
        [phi, mode](double theta) { return models::coherence_numerator(theta, phi, mode); },
        [phi](double theta) { return models::coherence_denominator(theta, phi); }, averaging);
}

CoincidenceCurve scan_curve(const models::SourceModel& model, std::span<const double> phi_grid,
                            const CurveOptions& options) {
    if (phi_grid.empty()) {
        throw UsageError("angle grid is empty");
    }
    for (std::size_t i = 0; i < phi_grid.size(); ++i) {
        if (!std::isfinite(phi_grid[i])) {
            throw UsageError("angle grid contains a non-finite value");
        }
        if (i > 0 && !(phi_grid[i] > phi_grid[i - 1])) {
            throw UsageError("angle grid must be strictly increasing");
        }
    }

    CoincidenceCurve curve;
    curve.phi_grid.assign(phi_grid.begin(), phi_grid.end());
    curve.model = model;
    curve.estimator = options.estimator;
    curve.contraction = options.contraction;
    curve.values.reserve(phi_grid.size());

    if (std::holds_alternative<ClosedFormConfig>(options.estimator)) {
        for (double phi : phi_grid) {
            const double value = model.kind == models::ModelKind::CircularHbt
                                     ? models::coherence_closed_form(phi, options.contraction)
                                     : models::closed_form(model, phi);
            curve.values.push_back({value, 0.0, Method::ClosedForm});
        }
        return curve;
    }

    const Averaging averaging =
        std::holds_alternative<QuadratureConfig>(options.estimator)
            ? Averaging{std::get<QuadratureConfig>(options.estimator)}
            : Averaging{std::get<MonteCarloConfig>(options.estimator)};

    CoincidenceForm form = options.form;
    if (form == CoincidenceForm::Auto) {
        switch (model.kind) {
            case models::ModelKind::FurryLinear: form = CoincidenceForm::Factorized; break;
            case models::ModelKind::CircularHbt: form = CoincidenceForm::Coherence; break;
            case models::ModelKind::QmReference:
                throw ModelError(
                    "the qm reference has no per-realization integrand; use the closed-form "
                    "estimator");
        }
    }
    curve.form = form;

    for (double phi : phi_grid) {
        curve.values.push_back(
            form == CoincidenceForm::Factorized
                ? factorized_coincidence(model, phi, averaging)
                : coherence_coincidence(model, phi, options.contraction, averaging));
    }
    return curve;
}

}  // namespace eprb::estimators
