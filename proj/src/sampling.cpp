#include "galine/sampling.hpp"

namespace galine {

namespace {
const Rational kPool[] = {
    Rational(0),     Rational(1),      Rational(-1),    Rational(2),
    Rational(-2),    Rational(3),      Rational(1, 2),  Rational(-1, 2),
    Rational(1, 3),  Rational(-2, 3),  Rational(3, 4),  Rational(-1, 4),
    Rational(5, 2),  Rational(-3, 2),  Rational(1, 5),  Rational(7, 3),
};
constexpr std::size_t kPoolSize = sizeof(kPool) / sizeof(kPool[0]);
}  // namespace

Rational random_rational(Prng& rng) { return kPool[rng.below(kPoolSize)]; }

Rational random_nonzero_rational(Prng& rng) {
    Rational r = random_rational(rng);
    return r.is_zero() ? Rational(1) : r;
}

TimePoly random_poly(Prng& rng, int max_degree) {
    std::vector<Rational> c(static_cast<std::size_t>(max_degree) + 1);
    for (auto& v : c) v = random_rational(rng);
    return TimePoly(std::move(c));
}

Vec3Poly random_vec3(Prng& rng, int max_degree) {
    return {random_poly(rng, max_degree), random_poly(rng, max_degree),
            random_poly(rng, max_degree)};
}

GroupElement random_element(Prng& rng, int coeff_degree, int budget) {
    return GroupElement(random_vec3(rng, coeff_degree), random_rational(rng), budget);
}

GroupElement random_galilei(Prng& rng, int budget) {
    return GroupElement(random_vec3(rng, 1), random_rational(rng), budget);
}

}  // namespace galine
