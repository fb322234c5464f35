#pragma once

namespace rejectlab {

// Kernels with data-parallel inner loops (Monte-Carlo sampling and
// classification, the MI grid stage) accept an execution mode. Serial is the
// reference path; Parallel shards the same index space across OpenMP threads
// and must produce bit-identical results.
enum class Execution { Serial, Parallel };

int hardware_threads();

} // namespace rejectlab
