#pragma once

#include <string>
#include <vector>

#include "rejectlab/bayes_rule.hpp"

namespace rejectlab {

struct CostCheck {
    std::string name;
    bool pass;
};

// Itemized validation verdict; never throws, the verdict encodes failure.
struct CostValidation {
    bool ok = true;
    std::vector<CostCheck> checks;

    std::string first_violation() const;
};

// Checks the Chow ordering and, with a reject option, the full chain. Without
// rejection only the 2x2 sub-matrix requirements apply. The Pietraszek bound
// lambda_r < l12 l21 / (l12 + l21) is opt-in: it constrains only the
// equal-reject-cost special setting and is not part of the general rule.
CostValidation validate_costs(const CostMatrix& costs, bool reject_option,
                              bool pietraszek_mode = false);

// Proven upper bound on the number of independent cost parameters: two with
// a reject option, one without.
int independent_parameter_count(bool reject_option);

struct RedundancyReport {
    int n_ip_bound = 2;
    double canonical_no_reject_ratio = 1.0; // l21 / l12 of the first member
    std::vector<CostMatrix> equivalent_sets;
};

// Enumerates `count` distinct cost matrices all mapping to the same
// thresholds; the first two members are the canonical unit-error-cost and
// unit-reject-cost families, further members vary the free normalization on
// a deterministic geometric schedule.
RedundancyReport equivalence_class(const RejectThresholds& tr, double lambda21, int count);

struct DegenerateTargetRow {
    double tr;
    double error;
    double reject;
    double chow_risk; // E(tr) + tr * Rej(tr)
    double ha_ratio;  // E(tr) / Rej(tr); +inf when nothing is rejected
};

// Evaluates the two historical reject-threshold objectives on a symmetric
// threshold grid; both drive the minimizer into the reject-all corner.
std::vector<DegenerateTargetRow> degenerate_risk_targets(const GaussianClassModel& model,
                                                         const std::vector<double>& tr_grid);

} // namespace rejectlab
