#include "hexic/random.hpp"

#include <vector>

namespace hexic {

double ChirpSampler::uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
}

GaussianChirp ChirpSampler::chirp() {
    const cplx c = std::polar(uniform(0.5, 2.0), uniform(-kPi, kPi));
    const cplx b(uniform(0.2, 3.0), uniform(-2.0, 2.0));
    const cplx w(uniform(-2.5, 2.5), uniform(-1.0, 1.0));
    return GaussianChirp(c, b, w);
}

ChirpSum ChirpSampler::sum(int terms) {
    std::vector<GaussianChirp> out;
    for (int i = 0; i < terms; ++i) out.push_back(chirp());
    return ChirpSum(std::move(out));
}

ChirpSum ChirpSampler::unit_sum(int terms) {
    ChirpSum f = sum(terms);
    return (1.0 / l2_norm(f)) * f;
}

}  // namespace hexic
