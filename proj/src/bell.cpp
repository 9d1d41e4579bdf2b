#include "eprb/bell.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "eprb/errors.hpp"
#include "eprb/fields.hpp"

namespace eprb::bell {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kNormalizationTolerance = 1e-9;
constexpr double kEntryTolerance = 1e-12;
constexpr double kDegenerateArm = 1e-12;

struct ArmLaws {
    double p_a;
    double p_b;
    double joint;
};

// Single-arm pass probabilities and the coincidence for one realization.
ArmLaws realization(const models::SourceModel& model, double lambda, double a, double b) {
    const double theta = lambda - a;
    const double phi = b - a;
    switch (model.kind) {
        case models::ModelKind::FurryLinear:
            return {models::malus_intensity(theta), models::malus_intensity(lambda - b),
                    models::furry_integrand(theta, phi)};
        case models::ModelKind::CircularHbt: {
            // Each detector receives its share of the total intensity.
            const double total = models::coherence_denominator(theta, phi);
            return {fields::intensity(fields::source_field_A(theta)) / total,
                    fields::intensity(fields::source_field_B(theta, phi)) / total,
                    models::coherence_numerator(theta, phi, models::ContractionMode::Eq6Literal) /
                        total};
        }
        case models::ModelKind::QmReference:
            break;
    }
    throw ModelError("model '" + std::string(models::to_string(model.kind)) +
                     "' has no per-realization coincidence to decompose");
}

}  // namespace

double ChshResult::abs_s() const noexcept { return std::abs(s_value); }

bool ChshResult::violates_lhv(double tolerance) const noexcept {
    return abs_s() > lhv_bound + tolerance;
}

JointTable joint_table(const models::SourceModel& model, double a, double b) {
    const double phi = b - a;
    const double same = models::closed_form(model, phi);
    const double crossed = models::closed_form(model, phi + kHalfPi);
    return {same, crossed, crossed, same, a, b};
}

double correlation_E(const JointTable& table) {
    if (!(std::abs(table.sum() - 1.0) <= kNormalizationTolerance)) {
        throw DataError("joint table is not normalized: entries sum to " +
                        std::to_string(table.sum()));
    }
    for (double p : {table.p_pp, table.p_pm, table.p_mp, table.p_mm}) {
        if (!(p >= -kEntryTolerance && p <= 1.0 + kEntryTolerance)) {
            throw DataError("joint table entry " + std::to_string(p) + " is not a probability");
        }
    }
    return table.p_pp + table.p_mm - table.p_pm - table.p_mp;
}

ChshResult chsh_S(const models::SourceModel& model, const ChshSettings& settings) {
    ChshResult result;
    result.e_ab = correlation_E(joint_table(model, settings.a, settings.b));
    result.e_ab_prime = correlation_E(joint_table(model, settings.a, settings.b_prime));
    result.e_a_prime_b = correlation_E(joint_table(model, settings.a_prime, settings.b));
    result.e_a_prime_b_prime =
        correlation_E(joint_table(model, settings.a_prime, settings.b_prime));
    result.s_value =
        result.e_ab - result.e_ab_prime + result.e_a_prime_b + result.e_a_prime_b_prime;
    result.lhv_bound = lhv_max_S(settings);
    return result;
}

std::array<int, 16> lhv_strategy_values() noexcept {
    std::array<int, 16> values{};
    for (unsigned pattern = 0; pattern < 16; ++pattern) {
        auto outcome = [pattern](unsigned bit) { return (pattern >> bit) & 1U ? 1 : -1; };
        const int x = outcome(0);        // at a
        const int x_prime = outcome(1);  // at a'
        const int y = outcome(2);        // at b
        const int y_prime = outcome(3);  // at b'
        values[pattern] = x * y - x * y_prime + x_prime * y + x_prime * y_prime;
    }
    return values;
}

double lhv_max_S(const ChshSettings& settings) {
    for (double angle : {settings.a, settings.a_prime, settings.b, settings.b_prime}) {
        if (!std::isfinite(angle)) throw DomainError("non-finite CHSH setting");
    }
    int best = 0;
    for (int s : lhv_strategy_values()) best = std::max(best, std::abs(s));
    return static_cast<double>(best);
}

ConditionalDecomposition decompose_conditional(const models::SourceModel& model, double a,
                                               double b, std::size_t lambda_nodes) {
    if (lambda_nodes < 8) {
        throw UsageError("decomposition needs at least 8 lambda nodes, got " +
                         std::to_string(lambda_nodes));
    }
    if (!std::isfinite(a) || !std::isfinite(b)) {
        throw DomainError("non-finite polarizer setting");
    }
    if (model.kind == models::ModelKind::QmReference) {
        throw ModelError(
            "the qm reference is a closed-form curve with no per-realization integrand");
    }

    ConditionalDecomposition out{model, a, b, {}};
    out.nodes.reserve(lambda_nodes);
    const double n = static_cast<double>(lambda_nodes);
    for (std::size_t k = 0; k < lambda_nodes; ++k) {
        LambdaNode node;
        node.lambda = 2.0 * std::numbers::pi * static_cast<double>(k) / n;
        node.weight = 1.0 / n;
        const ArmLaws laws = realization(model, node.lambda, a, b);
        node.p_a = laws.p_a;
        node.p_b = laws.p_b;
        node.joint = laws.joint;
        if (laws.p_a <= kDegenerateArm) {
            node.degenerate = true;
            node.p_b_pass_given_a = laws.p_b;
        } else {
            node.p_b_pass_given_a = std::clamp(laws.joint / laws.p_a, 0.0, 1.0);
        }
        node.p_b_block_given_a = 1.0 - node.p_b_pass_given_a;
        out.nodes.push_back(node);
    }
    return out;
}

double reconstruct(const ConditionalDecomposition& decomposition) {
    double total = 0.0;
    for (const LambdaNode& node : decomposition.nodes) {
        total += node.weight * node.p_a * node.p_b_pass_given_a;
    }
    return total;
}

FactorizabilityReport factorizability_check(const ConditionalDecomposition& decomposition,
                                            double tolerance) {
    FactorizabilityReport report;
    for (const LambdaNode& node : decomposition.nodes) {
        if (node.degenerate) {
            ++report.degenerate_nodes;
            continue;
        }
        const double deviation = std::abs(node.p_b_pass_given_a - node.p_b);
        if (!report.argmax_lambda || deviation > report.max_deviation) {
            report.max_deviation = deviation;
            report.argmax_lambda = node.lambda;
        }
    }
    report.factorizable = report.max_deviation <= tolerance;
    return report;
}

}  // namespace eprb::bell
