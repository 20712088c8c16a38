#pragma once

#include <cstdint>
#include <utility>

#include "rgdiff/grid.hpp"

namespace rgdiff {

/// Deterministic counter-based generator. Output i is a SplitMix64-style hash
/// of (seed, i), so a stream is fully defined by its seed and the number of
/// values already drawn. Identical seed + call sequence => identical stream.
///
/// Normals come from the Box-Muller transform. next_normal() consumes one
/// uniform pair and discards the second deviate; fill_normal() consumes pairs
/// and uses both, discarding only a trailing spare for odd counts.
class SeededRng {
public:
    explicit SeededRng(uint64_t seed) : seed_(seed) {}

    uint64_t seed() const { return seed_; }
    uint64_t counter() const { return counter_; }

    uint64_t next_u64() {
        uint64_t z = seed_ + (++counter_) * 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in (0, 1]; never returns 0 so log() is safe.
    double next_uniform() {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    /// Uniform integer in [lo, hi] inclusive.
    int64_t next_int(int64_t lo, int64_t hi) {
        const uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
        return lo + static_cast<int64_t>(next_u64() % span);
    }

    std::pair<double, double> next_normal_pair();

    /// Single standard normal deviate (second of the Box-Muller pair is discarded).
    double next_normal() { return next_normal_pair().first; }

    /// Derive an independent stream for a sub-task (e.g. one case of a batch).
    SeededRng fork(uint64_t stream_id) const;

private:
    uint64_t seed_ = 0;
    uint64_t counter_ = 0;
};

/// Grid of i.i.d. standard normal entries, filled row-major.
Grid2D sample_gaussian_grid(int width, int height, SeededRng& rng,
                            double spacing_x = 1.0, double spacing_y = 1.0);

}  // namespace rgdiff
