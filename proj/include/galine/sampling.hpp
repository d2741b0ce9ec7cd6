#pragma once

#include <cstdint>
#include <vector>

#include "galine/group.hpp"
#include "galine/timepoly.hpp"

namespace galine {

/// Deterministic splitmix64 stream; identical draws on every platform.
class Prng {
public:
    explicit Prng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t n) { return next() % n; }
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

/// Draws from a fixed pool of small rationals. Keeping the pool fixed makes
/// witnesses reproducible and the reports human-readable.
Rational random_rational(Prng& rng);
Rational random_nonzero_rational(Prng& rng);
TimePoly random_poly(Prng& rng, int max_degree);
Vec3Poly random_vec3(Prng& rng, int max_degree);
GroupElement random_element(Prng& rng, int coeff_degree, int budget);
/// Element with affine translation a + v t.
GroupElement random_galilei(Prng& rng, int budget);

}  // namespace galine
