#include <doctest.h>

#include <cmath>

#include "rejectlab/experiments.hpp"
#include "rejectlab/mc_oracle.hpp"
#include "rejectlab/rng.hpp"

using namespace rejectlab;

TEST_CASE("counter stream matches the reference generator") {
    // frozen outputs of the reference sequential implementation; guards the
    // cross-language reproducibility contract of the seed
    CHECK(splitmix64_at(42, 0) == 0x907f7b38c32994f9ULL);
    CHECK(splitmix64_at(42, 1) == 0xbaeabfb81641cbdeULL);
    CHECK(splitmix64_at(1234567, 0) == 6963409997599545614ULL);
    CHECK(splitmix64_at(1234567, 1) == 16087316570253461014ULL);
    CHECK(splitmix64_at(1234567, 2) == 7236595816755598791ULL);
    CHECK(splitmix64_at(0, 0) == 0x471eac9595a52a6bULL);
    // unit mapping stays strictly inside (0, 1)
    CHECK(uniform_open(0) > 0.0);
    CHECK(uniform_open(~0ULL) < 1.0);
}

TEST_CASE("inverse normal cdf against the erf-based forward map") {
    // known quantile
    CHECK(inverse_normal_cdf(0.975) == doctest::Approx(1.959963984540054).epsilon(1e-12));
    CHECK(inverse_normal_cdf(0.5) == doctest::Approx(0.0).epsilon(1e-15));
    const auto cdf = [](double x) { return 0.5 * (1.0 + std::erf(x / M_SQRT2)); };
    for (double u = 1.0 / 512.0; u < 1.0; u += 1.0 / 512.0)
        CHECK(std::fabs(cdf(inverse_normal_cdf(u)) - u) <= 1e-12);
    // far tails stay finite and monotone
    CHECK(inverse_normal_cdf(1e-12) < inverse_normal_cdf(1e-9));
    CHECK_THROWS_AS(inverse_normal_cdf(0.0), std::invalid_argument);
}

TEST_CASE("sampling determinism and the n = 1 edge") {
    const ClassModel m{example1_model()};
    const SampleBatch a = sample(m, 1000, 99);
    const SampleBatch b = sample(m, 1000, 99);
    REQUIRE(a.points.size() == b.points.size());
    for (std::size_t i = 0; i < a.points.size(); ++i) {
        CHECK(a.points[i].x == b.points[i].x);
        CHECK(a.points[i].true_class == b.points[i].true_class);
    }
    const SampleBatch one = sample(m, 1, 7);
    CHECK(one.points.size() == 1);
    CHECK_THROWS_AS(sample(m, 0, 7), std::invalid_argument);

    // different seeds decorrelate
    const SampleBatch c = sample(m, 1000, 100);
    int same = 0;
    for (std::size_t i = 0; i < 1000; ++i)
        same += a.points[i].x == c.points[i].x;
    CHECK(same == 0);
}

TEST_CASE("class frequencies follow the prior") {
    const std::uint64_t n = 1'000'000;
    for (double p1 : {0.5, 0.8, 0.99}) {
        const GaussianClassModel g(ClassPrior(p1, 1.0 - p1), -1.0, 1.0, 1.0, 1.0);
        const SampleBatch batch = sample(ClassModel{g}, n, 12345);
        std::uint64_t ones = 0;
        for (const auto& pt : batch.points)
            ones += pt.true_class == 1;
        const double freq = static_cast<double>(ones) / static_cast<double>(n);
        const double band = 4.0 * std::sqrt(p1 * (1.0 - p1) / static_cast<double>(n));
        CHECK(std::fabs(freq - p1) <= band);
    }
}

TEST_CASE("empirical outcome near the analytic values") {
    const ClassModel m{example1_model()};
    const CostMatrix costs = example1_reject_costs();
    const DecisionRegions regions = bayes_regions(m, Policy{costs}, true);
    const OutcomeReport analytic = evaluate(m, regions, costs);

    const std::uint64_t n = 1'000'000;
    const SampleBatch batch = sample(m, n, 2024);
    const auto [cm, empirical] = empirical_outcome(batch, regions, costs);
    CHECK(cm.n == n);
    const auto band = [&](double p) {
        return 4.0 * std::sqrt(p * (1.0 - p) / static_cast<double>(n));
    };
    CHECK(std::fabs(empirical.e - analytic.e) <= band(analytic.e));
    CHECK(std::fabs(empirical.rej - analytic.rej) <= band(analytic.rej));
    CHECK(std::fabs(empirical.ni - analytic.ni) <= 0.01);
    CHECK(std::fabs(*empirical.risk - *analytic.risk) <= band(*analytic.risk));

    // determinism of the counts
    const auto again = empirical_outcome(batch, regions, costs);
    CHECK(again.first.c == cm.c);
}

TEST_CASE("uniform conditional frequency reproduces the overlap posterior") {
    const ClassModel m{example4_model()};
    const SampleBatch batch = sample(m, 1'000'000, 4242);
    std::uint64_t in_window = 0, class1 = 0;
    for (const auto& pt : batch.points) {
        if (pt.x >= 0.74 && pt.x <= 0.76) {
            ++in_window;
            class1 += pt.true_class == 1;
        }
    }
    REQUIRE(in_window > 5000);
    const double freq = static_cast<double>(class1) / static_cast<double>(in_window);
    CHECK(std::fabs(freq - 2.0 / 3.0) <= 0.02);
}

TEST_CASE("bootstrap over seeds brackets the analytic NI of the uniform scenario") {
    const UniformClassModel u = example4_model();
    const ClassModel m{u};
    const DecisionRegions regions = uniform_regions_for_label(u, Decision::Reject);
    const double analytic = evaluate(m, regions).ni; // 0.6556...
    double mean = 0.0;
    const int seeds = 10;
    const std::uint64_t n = 1'000'000;
    for (int s = 0; s < seeds; ++s) {
        const SampleBatch batch = sample(m, n, 9000 + s);
        const auto [cm, empirical] = empirical_outcome(batch, regions);
        // per-seed spread at n = 1e6, scaled from the 1e7 reference band
        CHECK(std::fabs(empirical.ni - analytic) <= 0.001 * std::sqrt(10.0));
        mean += empirical.ni;
    }
    mean /= seeds;
    CHECK(std::fabs(mean - analytic) <= 0.001);
    CHECK(analytic == doctest::Approx(0.656).epsilon(1e-3));
}

TEST_CASE("all-reject partition classifies everything as rejected") {
    const ClassModel m{example1_model()};
    const DecisionRegions regions =
        bayes_regions(m, Policy{RejectThresholds{0.0, 0.0}}, true, true);
    const SampleBatch batch = sample(m, 10'000, 31);
    const auto [cm, empirical] = empirical_outcome(batch, regions);
    CHECK(empirical.e == 0.0);
    CHECK(empirical.rej == 1.0);
    CHECK(cm.c[0][2] + cm.c[1][2] == 10'000);
}

TEST_CASE("empirical priors come back exactly from the confusion matrix") {
    const ClassModel m{example2_model(4.0)};
    const SampleBatch batch = sample(m, 100'000, 8);
    const DecisionRegions regions = bayes_regions(m, Policy{CostMatrix::zero_one()}, false);
    const auto [cm, empirical] = empirical_outcome(batch, regions);
    const JointDistribution joint = joint_from_confusion(cm);
    std::uint64_t ones = 0;
    for (const auto& pt : batch.points)
        ones += pt.true_class == 1;
    CHECK(joint.row_sum(0) ==
          doctest::Approx(static_cast<double>(ones) / 100'000.0).epsilon(1e-15));
}

TEST_CASE("empirical entropy of the class labels matches the prior entropy") {
    const ClassPrior prior(0.8, 0.2);
    const GaussianClassModel g(prior, -1.0, 1.0, 1.0, 1.0);
    const SampleBatch batch = sample(ClassModel{g}, 2'000'000, 555);
    std::uint64_t ones = 0;
    for (const auto& pt : batch.points)
        ones += pt.true_class == 1;
    const double f = static_cast<double>(ones) / 2'000'000.0;
    const double empirical_h = -f * std::log2(f) - (1.0 - f) * std::log2(1.0 - f);
    CHECK(std::fabs(empirical_h - entropy_prior(prior)) <= 1e-3);
}
