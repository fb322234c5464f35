#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "rejectlab/bayes_rule.hpp"
#include "rejectlab/distributions.hpp"
#include "rejectlab/mi_classifier.hpp"
#include "rejectlab/parallel.hpp"

namespace rejectlab {

struct SamplePoint {
    double x;
    std::int32_t true_class; // 1 or 2
};

struct SampleBatch {
    std::uint64_t n = 0;
    std::uint64_t seed = 0;
    std::vector<SamplePoint> points;
};

// Draws n labeled points: the class from the prior, then x from the class
// conditional by inverse CDF. Point i depends only on (seed, i), so the batch
// is a pure function of the seed and independent of the execution mode.
SampleBatch sample(const ClassModel& model, std::uint64_t n, std::uint64_t seed,
                   Execution exec = Execution::Parallel);

// Classifies the batch with the given regions and reports the empirical
// counts plus the outcome statistics estimated from them.
std::pair<AugmentedConfusionMatrix, OutcomeReport> empirical_outcome(
    const SampleBatch& batch, const DecisionRegions& regions,
    const std::optional<CostMatrix>& costs = std::nullopt,
    Execution exec = Execution::Parallel);

} // namespace rejectlab
