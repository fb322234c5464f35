#include "rejectlab/experiments.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace rejectlab {

namespace {

using nlohmann::json;

std::string fmt_prob(double v) {
    if (std::isnan(v))
        return {};
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

std::string fmt_point(double v) {
    if (std::isnan(v))
        return {};
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::string opt_prob(const std::optional<double>& v) { return v ? fmt_prob(*v) : std::string{}; }

std::string opt_point(const std::optional<double>& v) { return v ? fmt_point(*v) : std::string{}; }

} // namespace

GaussianClassModel example1_model() {
    return GaussianClassModel(ClassPrior(0.5, 0.5), -1.0, 2.0, 1.0, 1.0);
}

CostMatrix example1_reject_costs() {
    CostMatrix c;
    c.lambda = {{{0.0, 1.2, 0.2}, {1.0, 0.0, 0.6}}};
    return c;
}

GaussianClassModel example2_model(double ratio) {
    return GaussianClassModel(ClassPrior(ratio / (1.0 + ratio), 1.0 / (1.0 + ratio)), -1.0, 1.0,
                              1.0, 1.0);
}

std::vector<double> example2_ratios() { return {1.0, 2.0, 4.0, 9.0, 99.0, 999.0, 9999.0}; }

GaussianClassModel example3_model() {
    return GaussianClassModel(ClassPrior(0.8, 0.2), 0.0, 2.0, 0.0, 1.0);
}

UniformClassModel example4_model() {
    return UniformClassModel(ClassPrior(0.5, 0.5), 0.0, 1.0, 0.5, 2.5);
}

ExperimentConfig parse_config_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& ex) {
        throw ConfigError(std::string("config is not valid JSON: ") + ex.what());
    }
    try {
        ExperimentConfig config;
        config.label = doc.value("label", std::string("custom"));
        if (!doc.contains("model") || !doc.contains("policy"))
            throw ConfigError("config requires 'model' and 'policy' objects");
        const json& m = doc.at("model");
        const std::string family = m.at("family").get<std::string>();
        const ClassPrior prior(m.at("p1").get<double>(), m.at("p2").get<double>());
        if (family == "gaussian") {
            config.model = ClassModel{GaussianClassModel(
                prior, m.at("mu1").get<double>(), m.at("sigma1").get<double>(),
                m.at("mu2").get<double>(), m.at("sigma2").get<double>())};
        } else if (family == "uniform") {
            config.model = ClassModel{UniformClassModel(prior, m.at("a1").get<double>(),
                                                        m.at("b1").get<double>(),
                                                        m.at("a2").get<double>(),
                                                        m.at("b2").get<double>())};
        } else {
            throw ConfigError("model.family must be 'gaussian' or 'uniform'");
        }
        config.reject_option = doc.value("reject_option", false);
        config.relaxed = doc.value("relaxed", false);
        const json& p = doc.at("policy");
        const std::string type = p.at("type").get<std::string>();
        if (type == "costs") {
            const auto rows = p.at("lambda").get<std::vector<std::vector<double>>>();
            if (rows.size() != 2 || rows[0].size() != 3 || rows[1].size() != 3)
                throw ConfigError("policy.lambda must be a 2x3 matrix");
            CostMatrix c;
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 3; ++j)
                    c.lambda[i][j] = rows[i][j];
            config.policy_kind = PolicyKind::Costs;
            config.costs = c;
            // Validate at load time for the selected mode.
            deltas_from(Policy{c}, config.reject_option, config.relaxed);
        } else if (type == "thresholds") {
            const RejectThresholds tr{p.at("tr1").get<double>(), p.at("tr2").get<double>()};
            config.policy_kind = PolicyKind::Thresholds;
            config.thresholds = tr;
            deltas_from(Policy{tr}, config.reject_option, config.relaxed);
        } else if (type == "mi") {
            config.policy_kind = PolicyKind::Mi;
        } else {
            throw ConfigError("policy.type must be 'costs', 'thresholds' or 'mi'");
        }
        if (doc.contains("oracle")) {
            const json& o = doc.at("oracle");
            config.oracle.enabled = o.value("enabled", true);
            config.oracle.n = o.value("n", config.oracle.n);
            config.oracle.seed = o.value("seed", config.oracle.seed);
        }
        if (doc.contains("output")) {
            const json& o = doc.at("output");
            config.output.format = o.value("format", std::string("csv"));
            config.output.path = o.value("path", std::string{});
            if (config.output.format != "csv")
                throw ConfigError("output.format: only 'csv' is supported");
        }
        return config;
    } catch (const json::exception& ex) {
        throw ConfigError(std::string("config schema error: ") + ex.what());
    }
}

std::string csv_header() {
    return "case,classifier,reject,e1,e2,e,rej1,rej2,rej,cr,accuracy,risk,tr1,tr2,"
           "xb1,xb2,xb3,xb4,ni,h_t_given_y\n";
}

std::string to_csv(const RowRecord& r) {
    std::ostringstream os;
    os << r.case_label << ',' << r.classifier << ',' << (r.reject ? "true" : "false") << ','
       << opt_prob(r.e1) << ',' << opt_prob(r.e2) << ',' << opt_prob(r.e) << ','
       << opt_prob(r.rej1) << ',' << opt_prob(r.rej2) << ',' << opt_prob(r.rej) << ','
       << opt_prob(r.cr) << ',' << opt_prob(r.accuracy) << ',' << opt_prob(r.risk) << ','
       << opt_prob(r.tr1) << ',' << opt_prob(r.tr2) << ',' << opt_point(r.xb1) << ','
       << opt_point(r.xb2) << ',' << opt_point(r.xb3) << ',' << opt_point(r.xb4) << ','
       << opt_prob(r.ni) << ',' << opt_prob(r.h_t_given_y) << '\n';
    return os.str();
}

RowRecord row_from_outcome(const std::string& case_label, const std::string& classifier,
                           bool reject, const OutcomeReport& outcome, bool include_thresholds) {
    RowRecord row;
    row.case_label = case_label;
    row.classifier = classifier;
    row.reject = reject;
    row.e1 = outcome.e1;
    row.e2 = outcome.e2;
    row.e = outcome.e;
    row.rej1 = outcome.rej1;
    row.rej2 = outcome.rej2;
    row.rej = outcome.rej;
    row.cr = outcome.cr;
    row.accuracy = std::isnan(outcome.accuracy) ? std::optional<double>{} : outcome.accuracy;
    row.risk = outcome.risk;
    if (include_thresholds && outcome.thresholds) {
        row.tr1 = outcome.thresholds->tr1;
        row.tr2 = outcome.thresholds->tr2;
    }
    const auto& pts = outcome.regions.boundary_points();
    if (!pts.empty())
        row.xb1 = pts[0];
    if (pts.size() > 1)
        row.xb2 = pts[1];
    if (pts.size() > 2)
        row.xb3 = pts[2];
    if (pts.size() > 3)
        row.xb4 = pts[3];
    row.ni = outcome.ni;
    row.h_t_given_y = outcome.h_t_given_y;
    return row;
}

namespace {

RowRecord empirical_row(const std::string& case_label, const std::string& classifier,
                        const ExperimentConfig& config, const DecisionRegions& regions,
                        const std::optional<CostMatrix>& costs) {
    const SampleBatch batch = sample(config.model, config.oracle.n, config.oracle.seed);
    const auto [cm, outcome] = empirical_outcome(batch, regions, costs);
    RowRecord row = row_from_outcome(case_label, classifier + "_mc", config.reject_option,
                                     outcome, /*include_thresholds=*/false);
    row.xb1 = row.xb2 = row.xb3 = row.xb4 = std::nullopt;
    return row;
}

} // namespace

std::vector<RowRecord> run_experiment(const ExperimentConfig& config) {
    std::vector<RowRecord> rows;
    if (config.policy_kind == PolicyKind::Mi) {
        const MISolution sol = mi_optimize(config.model, config.reject_option);
        OutcomeReport outcome = evaluate(config.model, sol.regions);
        outcome.thresholds = sol.thresholds;
        rows.push_back(row_from_outcome(config.label, "mi", config.reject_option, outcome,
                                        config.reject_option));
        if (config.oracle.enabled)
            rows.push_back(empirical_row(config.label, "mi", config, sol.regions, std::nullopt));
        return rows;
    }
    const Policy policy = config.policy_kind == PolicyKind::Costs
                              ? Policy{*config.costs}
                              : Policy{*config.thresholds};
    const DecisionRegions regions =
        bayes_regions(config.model, policy, config.reject_option, config.relaxed);
    std::optional<CostMatrix> costs;
    if (config.policy_kind == PolicyKind::Costs)
        costs = *config.costs;
    OutcomeReport outcome = evaluate(config.model, regions, costs);
    outcome.thresholds = thresholds_from_deltas(
        deltas_from(policy, config.reject_option, config.relaxed));
    rows.push_back(row_from_outcome(config.label, "bayes", config.reject_option, outcome,
                                    config.reject_option));
    if (config.oracle.enabled)
        rows.push_back(empirical_row(config.label, "bayes", config, regions, costs));
    return rows;
}

DecisionRegions uniform_regions_for_label(const UniformClassModel& model,
                                          Decision overlap_label) {
    const double rho = model.overlap_likelihood_ratio();
    DeltaPair deltas{rho, rho}; // realizes y2 on the overlap
    if (overlap_label == Decision::Class1)
        deltas = DeltaPair{0.5 * rho, 0.5 * rho};
    else if (overlap_label == Decision::Reject)
        deltas = DeltaPair{2.0 * rho, 0.5 * rho};
    return regions_from_deltas(ClassModel{model}, deltas);
}

std::vector<RowRecord> uniform_scan_rows(const UniformClassModel& model, double tr,
                                         const std::string& label, const OracleSpec& oracle) {
    const Decision overlap = uniform_single_threshold_decision(model, tr);
    const ClassModel m{model};
    const DecisionRegions regions = uniform_regions_for_label(model, overlap);
    OutcomeReport outcome = evaluate(m, regions);
    outcome.thresholds = RejectThresholds{tr, tr};
    std::vector<RowRecord> rows;
    rows.push_back(row_from_outcome(label, "bayes", true, outcome, true));
    if (oracle.enabled) {
        const SampleBatch batch = sample(m, oracle.n, oracle.seed);
        const auto [cm, empirical] = empirical_outcome(batch, regions);
        RowRecord row = row_from_outcome(label, "bayes_mc", true, empirical, false);
        row.xb1 = row.xb2 = row.xb3 = row.xb4 = std::nullopt;
        rows.push_back(row);
    }
    return rows;
}

std::vector<RowRecord> example4_regime_rows(const OracleSpec& oracle) {
    const UniformClassModel model = example4_model();
    std::vector<RowRecord> rows;
    // Representatives of the three regimes, in the table's order.
    for (const auto& [tr, label] :
         std::initializer_list<std::pair<double, const char*>>{
             {0.50, "example4[tr=0.50]"}, {0.80, "example4[tr=0.80]"},
             {0.20, "example4[tr=0.20]"}}) {
        for (auto& row : uniform_scan_rows(model, tr, label, oracle))
            rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<RowRecord> sweep_rows(const GaussianClassModel& base,
                                  const std::vector<double>& ratios) {
    std::vector<RowRecord> rows;
    const std::vector<SweepRow> bayes = imbalance_sweep(base, ratios);
    const std::vector<SweepRow> mi = mi_imbalance_sweep(base, ratios);
    for (std::size_t k = 0; k < ratios.size(); ++k) {
        std::ostringstream label;
        label << "example2[ratio=" << fmt_point(ratios[k]) << "]";
        rows.push_back(row_from_outcome(label.str(), "bayes", false, bayes[k].outcome, false));
        rows.push_back(row_from_outcome(label.str(), "mi", false, mi[k].outcome, false));
    }
    return rows;
}

std::vector<ScatterPoint> default_bounds_set() {
    std::vector<ScatterPoint> points;
    const auto add = [&](const std::string& label, const ClassPrior& prior,
                         const OutcomeReport& outcome) {
        JointDistribution joint;
        joint.p = {{{outcome.cr1, outcome.e1, outcome.rej1},
                    {outcome.e2, outcome.cr2, outcome.rej2}}};
        points.push_back(ScatterPoint{label, prior, joint, outcome.e});
    };
    const GaussianClassModel base = example2_model(1.0);
    const std::vector<double> ratios = example2_ratios();
    const std::vector<SweepRow> bayes = imbalance_sweep(base, ratios);
    const std::vector<SweepRow> mi = mi_imbalance_sweep(base, ratios);
    for (std::size_t k = 0; k < ratios.size(); ++k) {
        const ClassPrior prior = example2_model(ratios[k]).prior;
        add("example2_bayes[ratio=" + fmt_point(ratios[k]) + "]", prior, bayes[k].outcome);
        add("example2_mi[ratio=" + fmt_point(ratios[k]) + "]", prior, mi[k].outcome);
    }
    const GaussianClassModel ex3 = example3_model();
    const MISolution sol = mi_optimize(ClassModel{ex3}, false);
    const OutcomeReport outcome = evaluate(ClassModel{ex3}, sol.regions);
    add("example3_mi_noreject", ex3.prior, outcome);
    return points;
}

std::string bounds_csv_header() {
    return "label,h_t_given_y,e,modified_lb,modified_ub,kovalevskij_ub,p_min,"
           "lb_satisfied,ub_satisfied,exceeds_const_half\n";
}

std::string bounds_to_csv(const LabeledBoundReport& row) {
    std::ostringstream os;
    os << row.label << ',' << fmt_prob(row.report.h_t_given_y) << ',' << fmt_prob(row.report.e)
       << ',' << fmt_prob(row.report.modified_lb) << ',' << fmt_prob(row.report.modified_ub)
       << ',' << fmt_prob(row.report.kovalevskij_ub) << ',' << fmt_prob(row.report.p_min) << ','
       << (row.report.satisfies_modified_lb ? "true" : "false") << ','
       << (row.report.satisfies_modified_ub ? "true" : "false") << ','
       << (row.report.exceeds_const_half ? "true" : "false") << '\n';
    return os.str();
}

std::string redundancy_csv(const RedundancyReport& report) {
    std::ostringstream os;
    os << "set,l11,l12,l13,l21,l22,l23,tr1,tr2\n";
    int index = 0;
    for (const auto& costs : report.equivalent_sets) {
        const RejectThresholds tr = thresholds_from_costs(costs);
        os << index++ << ',' << fmt_point(costs.at(1, 1)) << ',' << fmt_point(costs.at(1, 2))
           << ',' << fmt_point(costs.at(1, 3)) << ',' << fmt_point(costs.at(2, 1)) << ','
           << fmt_point(costs.at(2, 2)) << ',' << fmt_point(costs.at(2, 3)) << ','
           << fmt_prob(tr.tr1) << ',' << fmt_prob(tr.tr2) << '\n';
    }
    return os.str();
}

} // namespace rejectlab
