#include "rejectlab/cost_analysis.hpp"

#include <cmath>
#include <limits>

namespace rejectlab {

std::string CostValidation::first_violation() const {
    for (const auto& check : checks)
        if (!check.pass)
            return check.name;
    return {};
}

CostValidation validate_costs(const CostMatrix& c, bool reject_option, bool pietraszek_mode) {
    CostValidation v;
    const auto add = [&](std::string name, bool pass) {
        v.checks.push_back(CostCheck{std::move(name), pass});
        v.ok = v.ok && pass;
    };
    add("lambda11 >= 0", c.at(1, 1) >= 0.0);
    add("lambda22 >= 0", c.at(2, 2) >= 0.0);
    if (!reject_option) {
        add("lambda12 > lambda11", c.at(1, 2) > c.at(1, 1));
        add("lambda21 > lambda22", c.at(2, 1) > c.at(2, 2));
        return v;
    }
    add("lambda12 > lambda13", c.at(1, 2) > c.at(1, 3));
    add("lambda13 > lambda11", c.at(1, 3) > c.at(1, 1));
    add("lambda21 > lambda23", c.at(2, 1) > c.at(2, 3));
    add("lambda23 > lambda22", c.at(2, 3) > c.at(2, 2));
    const double dl12_13 = c.at(1, 2) - c.at(1, 3);
    const double dl12_11 = c.at(1, 2) - c.at(1, 1);
    const double dl13_11 = c.at(1, 3) - c.at(1, 1);
    const bool denoms = dl12_13 > 0.0 && dl12_11 > 0.0 && dl13_11 > 0.0;
    add("chain denominators positive", denoms);
    if (denoms) {
        const double low = (c.at(2, 3) - c.at(2, 2)) / dl12_13;
        const double mid = (c.at(2, 1) - c.at(2, 2)) / dl12_11;
        const double high = (c.at(2, 1) - c.at(2, 3)) / dl13_11;
        add("0 < (l23-l22)/(l12-l13)", low > 0.0);
        add("(l23-l22)/(l12-l13) < (l21-l22)/(l12-l11)", low < mid);
        add("(l21-l22)/(l12-l11) < (l21-l23)/(l13-l11)", mid < high);
    }
    if (pietraszek_mode) {
        add("pietraszek: lambda11 = lambda22 = 0", c.at(1, 1) == 0.0 && c.at(2, 2) == 0.0);
        add("pietraszek: lambda13 = lambda23", c.at(1, 3) == c.at(2, 3));
        const double bound = c.at(1, 2) * c.at(2, 1) / (c.at(1, 2) + c.at(2, 1));
        add("pietraszek: 0 < lambda_r < l12*l21/(l12+l21)",
            c.at(1, 3) > 0.0 && c.at(1, 3) < bound);
    }
    return v;
}

int independent_parameter_count(bool reject_option) { return reject_option ? 2 : 1; }

RedundancyReport equivalence_class(const RejectThresholds& tr, double lambda21, int count) {
    if (count < 1)
        throw std::invalid_argument("equivalence_class requires count >= 1");
    if (!(tr.tr1 > 0.0) || !(tr.tr2 > 0.0) || !(tr.tr1 + tr.tr2 < 1.0))
        throw DegenerateThresholds("equivalence_class requires strictly interior thresholds");
    RedundancyReport report;
    report.n_ip_bound = independent_parameter_count(true);
    report.canonical_no_reject_ratio = lambda21;
    report.equivalent_sets.push_back(costs_from_thresholds(tr, lambda21));
    if (count >= 2) {
        CostMatrix unit_rejects;
        unit_rejects.at(1, 2) = 1.0 / tr.tr2;
        unit_rejects.at(2, 1) = 1.0 / tr.tr1;
        unit_rejects.at(1, 3) = 1.0;
        unit_rejects.at(2, 3) = 1.0;
        report.equivalent_sets.push_back(unit_rejects);
    }
    // Remaining members walk lambda21 geometrically through the admissible
    // interval and rescale the whole matrix, exercising both free choices.
    const double d2 = tr.tr2 / (1.0 - tr.tr2);
    const double d1 = (1.0 - tr.tr1) / tr.tr1;
    for (int k = 2; k < count; ++k) {
        const double frac = static_cast<double>(k - 1) / static_cast<double>(count);
        const double l21 = d2 * std::pow(d1 / d2, frac);
        const double scale = std::pow(1.5, k - 1);
        report.equivalent_sets.push_back(costs_from_thresholds(tr, l21).scaled(scale));
    }
    return report;
}

std::vector<DegenerateTargetRow> degenerate_risk_targets(const GaussianClassModel& model,
                                                         const std::vector<double>& tr_grid) {
    std::vector<DegenerateTargetRow> rows;
    rows.reserve(tr_grid.size());
    const ClassModel m{model};
    for (double tr : tr_grid) {
        if (!(tr >= 0.0 && tr <= 0.5))
            throw DegenerateThresholds("symmetric scan thresholds must lie in [0, 0.5]");
        const DecisionRegions regions =
            bayes_regions(m, RejectThresholds{tr, tr}, /*reject_option=*/true, /*relaxed=*/true);
        const OutcomeReport outcome = evaluate(m, regions);
        DegenerateTargetRow row;
        row.tr = tr;
        row.error = outcome.e;
        row.reject = outcome.rej;
        row.chow_risk = outcome.e + tr * outcome.rej;
        row.ha_ratio = outcome.rej > 0.0 ? outcome.e / outcome.rej
                                         : std::numeric_limits<double>::infinity();
        rows.push_back(row);
    }
    return rows;
}

} // namespace rejectlab
