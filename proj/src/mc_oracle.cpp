#include "rejectlab/mc_oracle.hpp"

#include <cmath>
#include <limits>

#include "rejectlab/rng.hpp"

namespace rejectlab {

namespace {

double inverse_class_cdf(const ClassModel& model, int cls, double u) {
    if (const auto* g = std::get_if<GaussianClassModel>(&model)) {
        const double mu = cls == 1 ? g->mu1 : g->mu2;
        const double sigma = cls == 1 ? g->sigma1 : g->sigma2;
        return mu + sigma * inverse_normal_cdf(u);
    }
    const auto& un = std::get<UniformClassModel>(model);
    const double a = cls == 1 ? un.a1 : un.a2;
    const double b = cls == 1 ? un.b1 : un.b2;
    return a + (b - a) * u;
}

SamplePoint draw(const ClassModel& model, double p1, std::uint64_t seed, std::uint64_t i) {
    const double u_class = uniform_open(splitmix64_at(seed, 2 * i));
    const double u_x = uniform_open(splitmix64_at(seed, 2 * i + 1));
    const std::int32_t cls = u_class < p1 ? 1 : 2;
    return SamplePoint{inverse_class_cdf(model, cls, u_x), cls};
}

} // namespace

SampleBatch sample(const ClassModel& model, std::uint64_t n, std::uint64_t seed, Execution exec) {
    if (n < 1)
        throw std::invalid_argument("sample requires n >= 1");
    SampleBatch batch;
    batch.n = n;
    batch.seed = seed;
    batch.points.resize(n);
    const double p1 = prior_of(model).p1;
    const auto count = static_cast<std::int64_t>(n);
    if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(static)
        for (std::int64_t i = 0; i < count; ++i)
            batch.points[static_cast<std::size_t>(i)] =
                draw(model, p1, seed, static_cast<std::uint64_t>(i));
    } else {
        for (std::int64_t i = 0; i < count; ++i)
            batch.points[static_cast<std::size_t>(i)] =
                draw(model, p1, seed, static_cast<std::uint64_t>(i));
    }
    return batch;
}

std::pair<AugmentedConfusionMatrix, OutcomeReport> empirical_outcome(
    const SampleBatch& batch, const DecisionRegions& regions,
    const std::optional<CostMatrix>& costs, Execution exec) {
    AugmentedConfusionMatrix cm;
    const auto count = static_cast<std::int64_t>(batch.points.size());
    if (exec == Execution::Parallel) {
#pragma omp parallel
        {
            AugmentedConfusionMatrix local;
#pragma omp for schedule(static) nowait
            for (std::int64_t i = 0; i < count; ++i) {
                const auto& pt = batch.points[static_cast<std::size_t>(i)];
                ++local.c[pt.true_class - 1][decision_index(regions.decide(pt.x))];
            }
#pragma omp critical
            {
                for (int i = 0; i < 2; ++i)
                    for (int j = 0; j < 3; ++j)
                        cm.c[i][j] += local.c[i][j];
            }
        }
    } else {
        for (std::int64_t i = 0; i < count; ++i) {
            const auto& pt = batch.points[static_cast<std::size_t>(i)];
            ++cm.c[pt.true_class - 1][decision_index(regions.decide(pt.x))];
        }
    }
    cm.n = batch.points.size();

    const JointDistribution joint = joint_from_confusion(cm);
    OutcomeReport r;
    r.cr1 = joint.p[0][0];
    r.e1 = joint.p[0][1];
    r.rej1 = joint.p[0][2];
    r.e2 = joint.p[1][0];
    r.cr2 = joint.p[1][1];
    r.rej2 = joint.p[1][2];
    r.cr = r.cr1 + r.cr2;
    r.e = r.e1 + r.e2;
    r.rej = r.rej1 + r.rej2;
    r.accuracy = (r.cr + r.e) > 0.0 ? r.cr / (r.cr + r.e)
                                    : std::numeric_limits<double>::quiet_NaN();
    if (costs) {
        r.risk = costs->at(1, 1) * r.cr1 + costs->at(1, 2) * r.e1 + costs->at(1, 3) * r.rej1 +
                 costs->at(2, 1) * r.e2 + costs->at(2, 2) * r.cr2 + costs->at(2, 3) * r.rej2;
    }
    const NiResult info = ni(joint);
    r.ni = info.ni;
    r.h_t_given_y = info.h_t_given_y;
    r.regions = regions;
    return {cm, r};
}

} // namespace rejectlab
