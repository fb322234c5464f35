#pragma once

#include <cstdint>

namespace rejectlab {

// SplitMix64 output function evaluated as a pure function of (seed, counter):
// the value the generator seeded with `seed` would emit at position
// `counter`. Counter-based form so sampling can shard the index space across
// workers and still merge to a bit-identical stream.
inline std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t counter) {
    std::uint64_t z = seed + (counter + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1E3EBB4BULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Map to the open interval (0, 1): 52 bits offset by half a step, so every
// value is exactly representable and inverse-CDF transforms never see 0 or 1.
// (With 53 bits the topmost value rounds up to 1.0.)
inline double uniform_open(std::uint64_t bits) {
    return (static_cast<double>(bits >> 12) + 0.5) * 0x1.0p-52;
}

// Inverse of the standard normal CDF (Wichura's PPND16 rational minimax
// fits); absolute error well below 1e-9 across (0, 1).
double inverse_normal_cdf(double p);

} // namespace rejectlab
