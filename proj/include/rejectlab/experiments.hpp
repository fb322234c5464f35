#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rejectlab/bayes_rule.hpp"
#include "rejectlab/cost_analysis.hpp"
#include "rejectlab/distributions.hpp"
#include "rejectlab/info_bounds.hpp"
#include "rejectlab/mc_oracle.hpp"
#include "rejectlab/mi_classifier.hpp"

namespace rejectlab {

// ---- bundled scenarios ---------------------------------------------------

GaussianClassModel example1_model();
CostMatrix example1_reject_costs();
GaussianClassModel example2_model(double ratio); // priors ratio/(1+ratio), 1/(1+ratio)
std::vector<double> example2_ratios();           // 1, 2, 4, 9, 99, 999, 9999
GaussianClassModel example3_model();
UniformClassModel example4_model();

// ---- experiment configuration ---------------------------------------------

enum class PolicyKind { Costs, Thresholds, Mi };

struct OracleSpec {
    bool enabled = false;
    std::uint64_t n = 10'000'000;
    std::uint64_t seed = 20240801;
};

struct OutputSpec {
    std::string format = "csv";
    std::string path; // empty: stdout
};

struct ExperimentConfig {
    std::string label = "custom";
    ClassModel model = ClassModel{example1_model()};
    PolicyKind policy_kind = PolicyKind::Mi;
    std::optional<CostMatrix> costs;
    std::optional<RejectThresholds> thresholds;
    bool reject_option = false;
    bool relaxed = false;
    OracleSpec oracle;
    OutputSpec output;
};

// Parses and validates the JSON experiment schema. Schema problems raise
// ConfigError; values that violate module invariants raise the module's own
// constraint errors.
ExperimentConfig parse_config_json(const std::string& text);

// ---- CSV rows --------------------------------------------------------------

// One schema serves all the tables. Probabilities print with 6 decimal
// digits, boundary points with 6 significant digits, absent values as empty
// fields; LF line endings.
struct RowRecord {
    std::string case_label;
    std::string classifier; // bayes | mi | bayes_mc | mi_mc
    bool reject = false;
    std::optional<double> e1, e2, e, rej1, rej2, rej, cr, accuracy, risk;
    std::optional<double> tr1, tr2;
    std::optional<double> xb1, xb2, xb3, xb4;
    std::optional<double> ni, h_t_given_y;
};

std::string csv_header();
std::string to_csv(const RowRecord& row);

RowRecord row_from_outcome(const std::string& case_label, const std::string& classifier,
                           bool reject, const OutcomeReport& outcome,
                           bool include_thresholds);

// ---- experiment drivers ----------------------------------------------------

// Runs one configuration: the analytic row plus, when the oracle is enabled,
// an empirical row (classifier suffixed "_mc") from a seeded batch.
std::vector<RowRecord> run_experiment(const ExperimentConfig& config);

// Table-style scan of the uniform scenario: the analytic row for one
// symmetric threshold plus, when the oracle is enabled, its empirical row.
std::vector<RowRecord> uniform_scan_rows(const UniformClassModel& model, double tr,
                                         const std::string& label,
                                         const OracleSpec& oracle = {});

// The three regime representatives of the uniform scenario.
std::vector<RowRecord> example4_regime_rows(const OracleSpec& oracle = {});

// Regions realizing a given overlap label on a uniform model (outside the
// overlap the certain class always wins).
DecisionRegions uniform_regions_for_label(const UniformClassModel& model, Decision overlap_label);

// Prior-ratio sweep of a Gaussian scenario, both classifiers per ratio.
std::vector<RowRecord> sweep_rows(const GaussianClassModel& base,
                                  const std::vector<double>& ratios);

// The default bound-scatter set: both classifiers at every example2 ratio
// plus the example3 no-reject MI point.
std::vector<ScatterPoint> default_bounds_set();

std::string bounds_csv_header();
std::string bounds_to_csv(const LabeledBoundReport& row);

// Redundancy demonstration rows: each emitted matrix with its round-tripped
// thresholds.
std::string redundancy_csv(const RedundancyReport& report);

} // namespace rejectlab
