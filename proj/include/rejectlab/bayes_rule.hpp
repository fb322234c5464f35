#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rejectlab/distributions.hpp"

namespace rejectlab {

// 2x3 cost matrix: lambda(i, j) is the cost of deciding y_j when the true
// class is t_i; j = 3 is the reject decision.
struct CostMatrix {
    std::array<std::array<double, 3>, 2> lambda{};

    double at(int i, int j) const { return lambda[i - 1][j - 1]; }
    double& at(int i, int j) { return lambda[i - 1][j - 1]; }

    static CostMatrix zero_one();
    // Single-threshold matrix: unit error costs, both reject costs = tr.
    static CostMatrix chow(double tr);
    CostMatrix scaled(double c) const;
};

// Posterior cutoffs: decide class i only when p(t_i|x) beats 1 - tr_i.
struct RejectThresholds {
    double tr1;
    double tr2;
};

// Likelihood-ratio form of a policy. y1 where LR > delta1, y2 where
// LR <= delta2, y3 on the band in between; delta2 <= delta1 always.
struct DeltaPair {
    double delta1;
    double delta2;
};

enum class Decision { Class1 = 0, Class2 = 1, Reject = 2 };

inline int decision_index(Decision d) { return static_cast<int>(d); }

struct LabeledInterval {
    double lo;
    double hi;
    Decision label;
};

// An ordered, disjoint, labeled partition of the real line (or of the model
// support union for uniform models). Adjacent segments carry different
// labels. boundary_points() lists the finite transition points between
// adjacent segments; outer edges of a bounded support are not transitions.
class DecisionRegions {
public:
    static DecisionRegions from_intervals(std::vector<LabeledInterval> segments);

    const std::vector<LabeledInterval>& segments() const { return segments_; }
    const std::vector<double>& boundary_points() const { return boundary_points_; }

    // Pointwise decision. Transition points resolve by rule strictness:
    // the y2 rule is non-strict and wins, then y3, then y1. Throws
    // ZeroMixtureDensity for x in a gap between support components.
    Decision decide(double x) const;

    bool has_label(Decision d) const;

private:
    std::vector<LabeledInterval> segments_;
    std::vector<double> boundary_points_;
};

struct CrossoverAnalysis {
    int count = 0;               // solutions of likelihood_ratio(x) = 1
    std::vector<double> points;  // sorted
    double alpha = 0.0;          // discriminant at delta = 1 (Gaussian)
};

struct OutcomeReport {
    double cr1 = 0, cr2 = 0;
    double e1 = 0, e2 = 0;
    double rej1 = 0, rej2 = 0;
    double cr = 0, e = 0, rej = 0;
    double accuracy = 0; // cr / (cr + e); NaN when everything is rejected
    std::optional<double> risk;
    double ni = 0;
    double h_t_given_y = 0;
    std::optional<RejectThresholds> thresholds;
    DecisionRegions regions;
};

using Policy = std::variant<CostMatrix, RejectThresholds>;

// ---- threshold / cost algebra ------------------------------------------------

// tr1 = (l13 - l11) / (l13 - l11 + l21 - l23),
// tr2 = (l23 - l22) / (l12 - l13 + l23 - l22).
// Requires the full rejection chain on the costs.
RejectThresholds thresholds_from_costs(const CostMatrix& costs);

// Inverse construction with l11 = l22 = 0, l12 = 1 and a free l21. Valid
// l21 lie strictly between tr2/(1-tr2) and (1-tr1)/tr1; the result
// round-trips through thresholds_from_costs.
CostMatrix costs_from_thresholds(const RejectThresholds& tr, double lambda21);

// Two cost matrices with different entries mapping to the same thresholds:
// one with the unit-error-cost pattern, one with unit reject costs.
std::pair<CostMatrix, CostMatrix> demonstrate_redundancy(const RejectThresholds& tr);

// ---- Gaussian geometry -------------------------------------------------------

// Solutions of likelihood_ratio(x) = delta in closed form. Two points when
// sigma1 != sigma2 and the discriminant is positive, one when the sigmas are
// equal, none otherwise. Sorted.
std::vector<double> gaussian_boundaries(const GaussianClassModel& model, double delta);

CrossoverAnalysis crossover_points(const GaussianClassModel& model);

// Range of the posteriors over the real line (suprema/infima; open bounds for
// limits that are approached but not attained).
struct PosteriorExtrema {
    double min_pt1;
    double max_pt1;
    double min_pt2;
    double max_pt2;
};
PosteriorExtrema posterior_extrema(const GaussianClassModel& model);

// ---- decision regions --------------------------------------------------------

// Threshold admissibility. Strict mode enforces 0 < tr1 + tr2 <= 1 with
// nonnegative components; relaxed mode additionally admits tr1 = tr2 = 0
// (reject everything).
void validate_thresholds(const RejectThresholds& tr, bool relaxed = false);

RejectThresholds thresholds_from_deltas(const DeltaPair& d);
DeltaPair deltas_from_thresholds(const RejectThresholds& tr);
DeltaPair deltas_from(const Policy& policy, bool reject_option, bool relaxed = false);

// Partition induced by a delta pair (general engine behind bayes_regions and
// the mutual-information search).
DecisionRegions regions_from_deltas(const ClassModel& model, const DeltaPair& deltas);

// Three-rule decision regions for a cost or threshold policy. Cost matrices
// are converted to thresholds on ingestion. Without the reject option the
// band collapses (delta1 = delta2); threshold input must then be (0.5, 0.5).
DecisionRegions bayes_regions(const ClassModel& model, const Policy& policy,
                              bool reject_option, bool relaxed = false);

// Masses, rates and (when costs are given) the risk of a labeled partition.
// ni and h_t_given_y are filled from the joint distribution of the regions.
OutcomeReport evaluate(const ClassModel& model, const DecisionRegions& regions,
                       const std::optional<CostMatrix>& costs = std::nullopt);

// ---- uniform specifics -------------------------------------------------------

// Label taken by the overlap region under a delta pair (posteriors are
// constant there).
Decision uniform_overlap_decision(const UniformClassModel& model, const DeltaPair& deltas);

// Single-threshold scan used for the overlap-region taxonomy: tr1 = tr2 = tr
// with tr allowed to run over all of [0, 1]. Above tr1 + tr2 = 1 the y1 and
// y2 rules overlap and the non-strict y2 rule is given precedence.
Decision uniform_single_threshold_decision(const UniformClassModel& model, double tr);

// Closed-form total error / reject for a given overlap label; exact interval
// arithmetic, used as an independent check of evaluate().
double uniform_error_closed_form(const UniformClassModel& model, Decision overlap_label);
double uniform_reject_closed_form(const UniformClassModel& model, Decision overlap_label);

std::pair<DecisionRegions, OutcomeReport> uniform_bayes_decide(const UniformClassModel& model,
                                                               const Policy& policy,
                                                               bool reject_option,
                                                               bool relaxed = false);

// ---- imbalance sweep ---------------------------------------------------------

struct SweepRow {
    double ratio;
    double fnr; // E2 / p(t2)
    double x_b;
    double ni;
    double h_t_given_y;
    OutcomeReport outcome;
};

// Zero-one-cost Bayes boundary as the prior ratio p(t1)/p(t2) runs over
// `ratios`. Requires sigma1 == sigma2. Ratios below one reuse the
// reciprocal-ratio solution with class indices swapped and the boundary
// reflected about (mu1 + mu2) / 2.
std::vector<SweepRow> imbalance_sweep(const GaussianClassModel& base,
                                      const std::vector<double>& ratios);

// Class-swapped, reflected view of an outcome; realizes the sweeps'
// reciprocal-ratio convention.
OutcomeReport mirror_outcome(const OutcomeReport& outcome, double center);

// ---- scenario taxonomy -------------------------------------------------------

enum class RejectionScenario {
    NoRejection,
    RejectAll,
    GeneralRejection,
    ClassOneAndReject,
    ClassTwoAndReject,
    MajorityTakingAll,
    MajorityAndReject,
    MinorityAndReject,
};

// Classifies the rejection scenario of a Gaussian model under thresholds.
// Threshold regimes are compared against the posterior extrema computed in
// closed form at the stationary point of the likelihood ratio; comparisons
// at the exact extremum resolve strictly.
RejectionScenario classify_rejection_scenario(const GaussianClassModel& model,
                                              const RejectThresholds& tr,
                                              bool relaxed = false);

const char* to_string(RejectionScenario s);
const char* to_string(Decision d);

} // namespace rejectlab
