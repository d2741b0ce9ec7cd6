#pragma once

#include <string>

#include "galine/errors.hpp"
#include "galine/timepoly.hpp"

namespace galine {

/// Rotation-free element of the Galilean line group: a time-dependent space
/// translation a(t) plus a time translation b. There is no rotation slot at
/// all; rotating elements cannot be represented.
template <class K>
struct BasicGroupElement {
    BasicVec3Poly<K> a;
    K b{};
    int max_degree = 8;

    BasicGroupElement() = default;
    BasicGroupElement(BasicVec3Poly<K> a_, K b_, int budget = 8)
        : a(std::move(a_)), b(std::move(b_)), max_degree(budget) {
        if (a.degree() > max_degree)
            throw DegreeError("group element translation exceeds its degree budget");
    }

    static BasicGroupElement identity(int budget = 8) {
        return BasicGroupElement(BasicVec3Poly<K>{}, detail::coeff_traits<K>::from_long(0),
                                 budget);
    }

    bool is_identity() const {
        return a.is_zero() && b == detail::coeff_traits<K>::from_long(0);
    }

    friend bool operator==(const BasicGroupElement& x, const BasicGroupElement& y) {
        return x.a == y.a && x.b == y.b && x.max_degree == y.max_degree;
    }
};

using GroupElement = BasicGroupElement<Rational>;
using GroupElementD = BasicGroupElement<double>;

/// Composition: the right argument acts first. The combined translation is
/// (shift_{b1} a2) + a1 and the time translations add.
template <class K>
BasicGroupElement<K> compose(const BasicGroupElement<K>& g2, const BasicGroupElement<K>& g1) {
    if (g2.max_degree != g1.max_degree)
        throw DegreeError("compose: degree budgets differ");
    return BasicGroupElement<K>(g1.a + g2.a.shifted(g1.b), g1.b + g2.b, g1.max_degree);
}

template <class K>
BasicGroupElement<K> inverse(const BasicGroupElement<K>& g) {
    K mb = -g.b;
    return BasicGroupElement<K>(-g.a.shifted(mb), mb, g.max_degree);
}

/// True iff every component of a(t) is affine in t (a + v t).
template <class K>
bool is_galilei(const BasicGroupElement<K>& g) {
    return g.a.degree() <= 1;
}

/// Unique factorization g = compose(translation, time_translation): the time
/// translation acts first, so the translation part carries shift_{-b} a.
template <class K>
struct GroupFactorization {
    BasicGroupElement<K> translation;       // (shift_{-b} a, 0)
    BasicGroupElement<K> time_translation;  // (0, b)
};

template <class K>
GroupFactorization<K> factor(const BasicGroupElement<K>& g) {
    return {BasicGroupElement<K>(g.a.shifted(-g.b), detail::coeff_traits<K>::from_long(0),
                                 g.max_degree),
            BasicGroupElement<K>(BasicVec3Poly<K>{}, g.b, g.max_degree)};
}

GroupElementD to_double(const GroupElement& g);

/// JSON wire format: { "a": [[...],[...],[...]], "b": "p/q" } with Taylor
/// coefficients serialized as rational strings. Unknown keys are rejected.
std::string group_to_json(const GroupElement& g);
GroupElement group_from_json(const std::string& text, int budget = 8);

}  // namespace galine
