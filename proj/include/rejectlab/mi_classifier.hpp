#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "rejectlab/bayes_rule.hpp"
#include "rejectlab/distributions.hpp"
#include "rejectlab/parallel.hpp"

namespace rejectlab {

// Joint distribution p(t_i, y_j) over true class x decision, 2x3.
struct JointDistribution {
    std::array<std::array<double, 3>, 2> p{};

    double row_sum(int i) const { return p[i][0] + p[i][1] + p[i][2]; }
    double col_sum(int j) const { return p[0][j] + p[1][j]; }
    double total() const { return row_sum(0) + row_sum(1); }
};

// Confusion matrix with a third column counting rejected patterns.
struct AugmentedConfusionMatrix {
    std::array<std::array<std::uint64_t, 3>, 2> c{};
    std::uint64_t n = 0;

    std::uint64_t row_total(int i) const { return c[i][0] + c[i][1] + c[i][2]; }
};

struct NiResult {
    double mutual_information; // bits
    double ni;                 // I(T,Y) / H(T), clamped into [0, 1]
    double h_t_given_y;        // H(T) - I(T,Y)
};

// H(T) = -sum p(t_i) log2 p(t_i).
double entropy_prior(const ClassPrior& prior);

// Normalized mutual information of a joint distribution. Zero-probability
// terms contribute nothing; entries below 1e-300 are treated as exactly
// zero. Throws DegenerateTarget when H(T) = 0.
NiResult ni(const JointDistribution& joint);

JointDistribution joint_from_regions(const ClassModel& model, const DecisionRegions& regions);

// Empirical joint c_ij / n. Requires positive row totals.
JointDistribution joint_from_confusion(const AugmentedConfusionMatrix& cm);

// Rejection thresholds implied by boundary points of one rule: the pair on
// the y1/y3 frontier gives tr1 = 1 - p(t1|x_b), the pair on the y3/y2
// frontier gives tr2 = 1 - p(t2|x_b). With four points the two members of a
// pair must agree within 1e-6 or InconsistentPair is thrown.
RejectThresholds equivalent_thresholds(const GaussianClassModel& model,
                                       const std::vector<double>& boundary_points);

struct MISolution {
    DecisionRegions regions;
    JointDistribution joint;
    double ni = 0;
    double h_t_given_y = 0;
    RejectThresholds thresholds{0.5, 0.5};
    DeltaPair deltas{1.0, 1.0};
    // No-reject solutions carry the equivalent cost ratio l21/l12 (Gaussian
    // models only; uniform overlap labels pin the ratio to a range, not a
    // value).
    std::optional<double> cost_ratio_lambda21;
    // Reject solutions with interior thresholds carry the two canonical cost
    // matrices of the redundancy demonstration; never a single matrix.
    std::optional<std::pair<CostMatrix, CostMatrix>> equivalent_costs;
    // Search bookkeeping: best mutual information seen and smallest
    // conditional entropy seen, tracked as two independent reductions.
    double searched_max_i = 0;
    double searched_min_h_t_given_y = 0;
};

// Maximizes NI(T, Y) over the likelihood-ratio threshold family: one
// parameter delta without rejection, a pair (delta1, delta2), delta2 <=
// delta1, with it. Two-stage search: a logarithmic grid (2001 points for the
// line, 201x201 triangular for the pair) followed by deterministic compass
// refinement, halving the step until it drops below 1e-9 in log-delta.
// Grid probes may evaluate in parallel; the argmax reduction breaks ties
// toward the smaller (delta1, delta2), so results are order-independent.
// Uniform models enumerate the admissible overlap labels exactly instead.
MISolution mi_optimize(const ClassModel& model, bool reject_option,
                       Execution exec = Execution::Parallel);

// Per-ratio no-reject MI optimum in the style of imbalance_sweep (same
// mirror convention for ratios below one).
std::vector<SweepRow> mi_imbalance_sweep(const GaussianClassModel& base,
                                         const std::vector<double>& ratios,
                                         Execution exec = Execution::Parallel);

} // namespace rejectlab
