#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rejectlab/experiments.hpp"

namespace {

using namespace rejectlab;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitConstraint = 3;

struct CommonOpts {
    std::string preset;
    std::string config_path;
    std::string mode = "bayes";
    bool reject = false;
    bool no_reject = false;
    std::string out_path;
    std::uint64_t oracle_n = 0;
    std::uint64_t seed = 20240801;
    double ratio = 1.0;
    double tr_scan = -1.0; // < 0: unset

    std::optional<double> scan_tr() const {
        return tr_scan >= 0.0 ? std::optional<double>(tr_scan) : std::nullopt;
    }
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--preset", o.preset, "Built-in scenario: example1..example4");
    cmd->add_option("--config", o.config_path, "JSON experiment configuration");
    cmd->add_option("--mode", o.mode, "Classifier: bayes or mi")
        ->check(CLI::IsMember({"bayes", "mi"}));
    cmd->add_flag("--reject", o.reject, "Enable the reject option");
    cmd->add_flag("--no-reject", o.no_reject, "Disable the reject option");
    cmd->add_option("--out", o.out_path, "Output path (default: stdout)");
    cmd->add_option("--oracle-n", o.oracle_n, "Monte-Carlo sample count (0 disables)");
    cmd->add_option("--seed", o.seed, "Monte-Carlo seed");
    cmd->add_option("--ratio", o.ratio, "Prior ratio p(t1)/p(t2) for example2");
    cmd->add_option("--tr", o.tr_scan, "Symmetric scan threshold for example4");
}

std::uint64_t effective_seed(std::uint64_t seed) {
    if (const char* env = std::getenv("REJECT_LAB_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw ConfigError("REJECT_LAB_SEED must be an unsigned integer");
        }
    }
    return seed;
}

void emit(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ConfigError("cannot open output path: " + path);
    out << text;
}

ExperimentConfig preset_config(const CommonOpts& o) {
    ExperimentConfig config;
    config.label = o.preset;
    config.reject_option = o.reject && !o.no_reject;
    config.oracle.enabled = o.oracle_n > 0;
    config.oracle.n = o.oracle_n > 0 ? o.oracle_n : config.oracle.n;
    config.oracle.seed = effective_seed(o.seed);
    const bool mi = o.mode == "mi";
    config.policy_kind = mi ? PolicyKind::Mi : PolicyKind::Costs;
    if (o.preset == "example1") {
        config.model = ClassModel{example1_model()};
        if (!mi)
            config.costs = config.reject_option ? example1_reject_costs()
                                                : CostMatrix::zero_one();
    } else if (o.preset == "example2") {
        config.model = ClassModel{example2_model(o.ratio)};
        std::ostringstream label;
        label << "example2[ratio=" << o.ratio << "]";
        config.label = label.str();
        if (!mi) {
            if (config.reject_option)
                throw ConstraintViolation(
                    "the example2 scenario defines no reject costs; use --mode mi or a config "
                    "file with a 2x3 matrix");
            config.costs = CostMatrix::zero_one();
        }
    } else if (o.preset == "example3") {
        config.model = ClassModel{example3_model()};
        if (!mi) {
            if (config.reject_option)
                throw ConstraintViolation(
                    "the example3 scenario defines no reject costs; a Bayes rule with "
                    "rejection needs the full 2x3 matrix");
            config.costs = CostMatrix::zero_one();
        }
    } else if (o.preset == "example4") {
        config.model = ClassModel{example4_model()};
        // Bayes mode runs the threshold scan; handled by the caller.
    } else {
        throw ConfigError("unknown preset: " + o.preset);
    }
    return config;
}

ExperimentConfig load_config(const CommonOpts& o) {
    if (!o.config_path.empty()) {
        std::ifstream in(o.config_path);
        if (!in)
            throw ConfigError("cannot read config file: " + o.config_path);
        std::ostringstream buffer;
        buffer << in.rdbuf();
        ExperimentConfig config = parse_config_json(buffer.str());
        if (o.oracle_n > 0) {
            config.oracle.enabled = true;
            config.oracle.n = o.oracle_n;
        }
        config.oracle.seed = effective_seed(config.oracle.seed);
        return config;
    }
    if (o.preset.empty())
        throw ConfigError("either --preset or --config is required");
    return preset_config(o);
}

int cmd_run(const CommonOpts& o) {
    // The uniform scenario in bayes mode is a threshold scan, not a single
    // policy evaluation.
    if (o.config_path.empty() && o.preset == "example4" && o.mode == "bayes") {
        ExperimentConfig config = preset_config(o);
        const auto& model = std::get<UniformClassModel>(config.model);
        std::string text = csv_header();
        if (const auto tr = o.scan_tr()) {
            std::ostringstream label;
            label << "example4[tr=" << *tr << "]";
            for (const auto& row : uniform_scan_rows(model, *tr, label.str(), config.oracle))
                text += to_csv(row);
        } else {
            for (const auto& row : example4_regime_rows(config.oracle))
                text += to_csv(row);
        }
        emit(o.out_path, text);
        return kExitOk;
    }
    const ExperimentConfig config = load_config(o);
    std::string text = csv_header();
    for (const auto& row : run_experiment(config))
        text += to_csv(row);
    emit(config.output.path.empty() ? o.out_path : config.output.path, text);
    return kExitOk;
}

int cmd_sweep(const CommonOpts& o, const std::string& ratios_arg) {
    std::vector<double> ratios = example2_ratios();
    if (!ratios_arg.empty()) {
        ratios.clear();
        std::stringstream ss(ratios_arg);
        std::string item;
        while (std::getline(ss, item, ','))
            ratios.push_back(std::stod(item));
        if (ratios.empty())
            throw ConfigError("--ratios needs a comma-separated list of positive reals");
    }
    const GaussianClassModel base = example2_model(1.0);
    std::string text = csv_header();
    for (const auto& row : sweep_rows(base, ratios))
        text += to_csv(row);
    emit(o.out_path, text);
    return kExitOk;
}

int cmd_bounds(const CommonOpts& o) {
    std::string text = bounds_csv_header();
    for (const auto& row : bounds_scatter(default_bounds_set()))
        text += bounds_to_csv(row);
    emit(o.out_path, text);
    return kExitOk;
}

int cmd_redundancy(const CommonOpts& o, double tr1, double tr2, double lambda21, int count) {
    const RedundancyReport report = equivalence_class(RejectThresholds{tr1, tr2}, lambda21, count);
    emit(o.out_path, redundancy_csv(report));
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Abstaining binary classifiers over exactly known class models"};
    app.require_subcommand(1);

    CommonOpts run_opts;
    CLI::App* run = app.add_subcommand("run", "Evaluate one configuration");
    add_common(run, run_opts);

    CommonOpts sweep_opts;
    std::string ratios_arg;
    CLI::App* sweep = app.add_subcommand("sweep", "Prior-ratio sweep (both classifiers)");
    add_common(sweep, sweep_opts);
    sweep->add_option("--ratios", ratios_arg, "Comma-separated prior ratios");

    CommonOpts bounds_opts;
    CLI::App* bounds_cmd = app.add_subcommand("bounds", "Error bounds for the default point set");
    add_common(bounds_cmd, bounds_opts);

    CommonOpts red_opts;
    double tr1 = 0.0, tr2 = 0.0, lambda21 = 1.0;
    int count = 2;
    CLI::App* red = app.add_subcommand("redundancy", "Equivalent cost matrices for thresholds");
    add_common(red, red_opts);
    red->add_option("--tr1", tr1, "First rejection threshold")->required();
    red->add_option("--tr2", tr2, "Second rejection threshold")->required();
    red->add_option("--lambda21", lambda21, "Free lambda21 of the first member");
    red->add_option("--count", count, "Number of equivalent matrices");

    CommonOpts oracle_opts;
    CLI::App* oracle = app.add_subcommand("oracle", "Analytic row plus Monte-Carlo row");
    add_common(oracle, oracle_opts);

    try {
        app.parse(argc, argv);
        if (run->parsed())
            return cmd_run(run_opts);
        if (sweep->parsed())
            return cmd_sweep(sweep_opts, ratios_arg);
        if (bounds_cmd->parsed())
            return cmd_bounds(bounds_opts);
        if (red->parsed())
            return cmd_redundancy(red_opts, tr1, tr2, lambda21, count);
        if (oracle->parsed()) {
            if (oracle_opts.oracle_n == 0)
                oracle_opts.oracle_n = 10'000'000;
            return cmd_run(oracle_opts);
        }
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e); // --help and friends
        std::cerr << e.what() << "\n";
        return kExitConfig;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const ConstraintViolation& e) {
        std::cerr << "constraint violation: " << e.what() << "\n";
        return kExitConstraint;
    } catch (const DegenerateThresholds& e) {
        std::cerr << "constraint violation: " << e.what() << "\n";
        return kExitConstraint;
    } catch (const InconsistentInput& e) {
        std::cerr << "constraint violation: " << e.what() << "\n";
        return kExitConstraint;
    } catch (const std::invalid_argument& e) {
        std::cerr << "constraint violation: " << e.what() << "\n";
        return kExitConstraint;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
