#pragma once

#include <cstdint>
#include <random>

#include "hexic/chirp.hpp"

namespace hexic {

/// Seeded source of well-conditioned test chirps: Re b in [0.2, 3],
/// |Im b| <= 2, Re w in [-2.5, 2.5], |Im w| <= 1 (so |w| < 3), and
/// |c| in [0.5, 2] with uniform phase.
class ChirpSampler {
public:
    explicit ChirpSampler(std::uint64_t seed) : rng_(seed) {}

    GaussianChirp chirp();
    /// Sum of `terms` random chirps.
    ChirpSum sum(int terms);
    /// Random sum rescaled to unit L2 norm.
    ChirpSum unit_sum(int terms);
    double uniform(double lo, double hi);

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace hexic
