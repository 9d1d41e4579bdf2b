#pragma once

// Outcome tables, CHSH analysis and the conditional-probability
// decomposition P(lambda) P(a | lambda) P(b | a, lambda) of a coincidence.

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "eprb/models.hpp"

namespace eprb::bell {

/// Outcome probabilities at one setting pair; `+` = pass, `-` = blocked.
struct JointTable {
    double p_pp = 0.0;
    double p_pm = 0.0;
    double p_mp = 0.0;
    double p_mm = 0.0;
    double a = 0.0;
    double b = 0.0;

    double sum() const noexcept { return p_pp + p_pm + p_mp + p_mm; }
};

struct ChshSettings {
    double a = 0.0;
    double a_prime = 0.0;
    double b = 0.0;
    double b_prime = 0.0;
};

struct ChshResult {
    double e_ab = 0.0;
    double e_ab_prime = 0.0;
    double e_a_prime_b = 0.0;
    double e_a_prime_b_prime = 0.0;
    double s_value = 0.0;
    double lhv_bound = 2.0;

    double abs_s() const noexcept;
    /// |S| exceeds the local bound by more than `tolerance`.
    bool violates_lhv(double tolerance = 1e-9) const noexcept;
};

/// Four-channel table from the model's closed-form curve P with phi = b - a:
/// (++, +-, -+, --) = (P(phi), P(phi + pi/2), P(phi + pi/2), P(phi)).
JointTable joint_table(const models::SourceModel& model, double a, double b);

/// p_pp + p_mm - p_pm - p_mp.  Throws DataError when the table does not sum
/// to 1 within 1e-9 or has entries outside [0, 1].
double correlation_E(const JointTable& table);

/// S = E(a,b) - E(a,b') + E(a',b) + E(a',b').
ChshResult chsh_S(const models::SourceModel& model, const ChshSettings& settings);

/// CHSH value of each of the 16 deterministic local strategies, indexed by
/// the bit pattern of the outcomes assigned at (a, a', b, b').
std::array<int, 16> lhv_strategy_values() noexcept;

/// max |S| over the deterministic local strategies.  Does not depend on the
/// settings, which only need to be finite.
double lhv_max_S(const ChshSettings& settings);

/// One node of the hidden-variable grid.
struct LambdaNode {
    double lambda = 0.0;
    double weight = 0.0;             // P(lambda)
    double p_a = 0.0;                // P(pass at A | lambda)
    double p_b = 0.0;                // P(pass at B | lambda), single-arm law
    double joint = 0.0;              // per-realization coincidence
    double p_b_pass_given_a = 0.0;   // P(pass at B | pass at A, lambda)
    double p_b_block_given_a = 0.0;  // 1 - p_b_pass_given_a
    // P(A | lambda) vanished; the conditional falls back to p_b.
    bool degenerate = false;
};

struct ConditionalDecomposition {
    models::SourceModel model;
    double a = 0.0;
    double b = 0.0;
    std::vector<LambdaNode> nodes;
};

/// Decomposes the model's coincidence at (a, b) on a uniform grid of
/// `lambda_nodes` hidden-variable values (at least 8).  QmReference has no
/// per-realization integrand and raises ModelError.
ConditionalDecomposition decompose_conditional(const models::SourceModel& model, double a,
                                               double b, std::size_t lambda_nodes);

/// sum over nodes of P(lambda) P(a | lambda) P(b | a, lambda).
double reconstruct(const ConditionalDecomposition& decomposition);

struct FactorizabilityReport {
    bool factorizable = true;
    double max_deviation = 0.0;
    std::optional<double> argmax_lambda;  // empty when every node is degenerate
    std::size_t degenerate_nodes = 0;
};

/// Largest |P(b | a, lambda) - P(b | lambda)| over non-degenerate nodes.
FactorizabilityReport factorizability_check(const ConditionalDecomposition& decomposition,
                                            double tolerance);

}  // namespace eprb::bell
