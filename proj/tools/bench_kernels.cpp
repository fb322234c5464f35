// Compares the serial reference implementations against the OpenMP kernels:
// Monte-Carlo sampling + classification, and the MI grid search. Results must
// match bit-for-bit; the table reports wall times and speedups.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "rejectlab/experiments.hpp"
#include "rejectlab/parallel.hpp"

using namespace rejectlab;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

int main(int argc, char** argv) {
    std::uint64_t n = 5'000'000;
    if (argc > 1)
        n = std::strtoull(argv[1], nullptr, 10);
    std::printf("threads available: %d\n", hardware_threads());

    const ClassModel model{example1_model()};
    const DecisionRegions regions =
        bayes_regions(model, Policy{example1_reject_costs()}, /*reject_option=*/true);

    auto t0 = std::chrono::steady_clock::now();
    const SampleBatch serial_batch = sample(model, n, 42, Execution::Serial);
    const double t_sample_serial = seconds_since(t0);
    t0 = std::chrono::steady_clock::now();
    const SampleBatch parallel_batch = sample(model, n, 42, Execution::Parallel);
    const double t_sample_parallel = seconds_since(t0);
    bool identical = serial_batch.points.size() == parallel_batch.points.size();
    for (std::size_t i = 0; identical && i < serial_batch.points.size(); ++i)
        identical = serial_batch.points[i].x == parallel_batch.points[i].x &&
                    serial_batch.points[i].true_class == parallel_batch.points[i].true_class;

    t0 = std::chrono::steady_clock::now();
    const auto serial_counts = empirical_outcome(serial_batch, regions, {}, Execution::Serial);
    const double t_classify_serial = seconds_since(t0);
    t0 = std::chrono::steady_clock::now();
    const auto parallel_counts =
        empirical_outcome(parallel_batch, regions, {}, Execution::Parallel);
    const double t_classify_parallel = seconds_since(t0);
    identical = identical && serial_counts.first.c == parallel_counts.first.c;

    t0 = std::chrono::steady_clock::now();
    const MISolution mi_serial = mi_optimize(model, true, Execution::Serial);
    const double t_mi_serial = seconds_since(t0);
    t0 = std::chrono::steady_clock::now();
    const MISolution mi_parallel = mi_optimize(model, true, Execution::Parallel);
    const double t_mi_parallel = seconds_since(t0);
    identical = identical && mi_serial.ni == mi_parallel.ni &&
                mi_serial.deltas.delta1 == mi_parallel.deltas.delta1 &&
                mi_serial.deltas.delta2 == mi_parallel.deltas.delta2;

    std::printf("%-28s %12s %12s %9s\n", "kernel", "serial [s]", "parallel [s]", "speedup");
    std::printf("%-28s %12.3f %12.3f %8.2fx\n", "mc sample (n elements)", t_sample_serial,
                t_sample_parallel, t_sample_serial / t_sample_parallel);
    std::printf("%-28s %12.3f %12.3f %8.2fx\n", "mc classify + counts", t_classify_serial,
                t_classify_parallel, t_classify_serial / t_classify_parallel);
    std::printf("%-28s %12.3f %12.3f %8.2fx\n", "mi grid search (reject)", t_mi_serial,
                t_mi_parallel, t_mi_serial / t_mi_parallel);
    std::printf("results bit-identical: %s\n", identical ? "yes" : "NO");
    return identical ? 0 : 1;
}
