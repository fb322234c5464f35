#include <doctest.h>

#include "rejectlab/experiments.hpp"
#include "rejectlab/mc_oracle.hpp"
#include "rejectlab/mi_classifier.hpp"
#include "rejectlab/parallel.hpp"

using namespace rejectlab;

// The OpenMP kernels shard a per-index computation; the serial reference must
// match them bit for bit.

TEST_CASE("sampling: serial reference equals the parallel kernel") {
    const ClassModel m{example1_model()};
    const SampleBatch serial = sample(m, 300'000, 12, Execution::Serial);
    const SampleBatch parallel = sample(m, 300'000, 12, Execution::Parallel);
    REQUIRE(serial.points.size() == parallel.points.size());
    for (std::size_t i = 0; i < serial.points.size(); ++i) {
        REQUIRE(serial.points[i].x == parallel.points[i].x);
        REQUIRE(serial.points[i].true_class == parallel.points[i].true_class);
    }
}

TEST_CASE("classification counts: serial reference equals the parallel kernel") {
    const ClassModel m{example1_model()};
    const DecisionRegions regions =
        bayes_regions(m, Policy{example1_reject_costs()}, true);
    const SampleBatch batch = sample(m, 300'000, 12);
    const auto serial = empirical_outcome(batch, regions, {}, Execution::Serial);
    const auto parallel = empirical_outcome(batch, regions, {}, Execution::Parallel);
    CHECK(serial.first.c == parallel.first.c);
    CHECK(serial.second.e == parallel.second.e);
    CHECK(serial.second.ni == parallel.second.ni);
}

TEST_CASE("mi search: serial reference equals the parallel kernel") {
    for (const ClassModel m : {ClassModel{example1_model()}, ClassModel{example3_model()}}) {
        for (bool reject : {false, true}) {
            const MISolution serial = mi_optimize(m, reject, Execution::Serial);
            const MISolution parallel = mi_optimize(m, reject, Execution::Parallel);
            CHECK(serial.ni == parallel.ni);
            CHECK(serial.deltas.delta1 == parallel.deltas.delta1);
            CHECK(serial.deltas.delta2 == parallel.deltas.delta2);
            CHECK(serial.searched_max_i == parallel.searched_max_i);
        }
    }
}
