#pragma once

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "galine/errors.hpp"
#include "galine/group.hpp"
#include "galine/timepoly.hpp"

namespace galine {

/// Coefficient sequences (beta_n, gamma_n) defining the vector functionals
///   B(a) = sum_n beta_n a^(n),   C(a) = sum_n gamma_n a^(n)
/// and through them the two-cocycle of the line group. The inertial mass is
/// derived, never stored.
template <class K>
struct BasicCocycleSpec {
    std::vector<K> beta;
    std::vector<K> gamma;
    int max_degree = 8;

    K beta_at(std::size_t n) const {
        return n < beta.size() ? beta[n] : detail::coeff_traits<K>::from_long(0);
    }
    K gamma_at(std::size_t n) const {
        return n < gamma.size() ? gamma[n] : detail::coeff_traits<K>::from_long(0);
    }

    /// m = beta0*gamma1 - gamma0*beta1, the coefficient of the reduced
    /// Galilei cocycle.
    K mass() const { return beta_at(0) * gamma_at(1) - gamma_at(0) * beta_at(1); }

    bool galilei_embeddable() const {
        return mass() != detail::coeff_traits<K>::from_long(0);
    }

    /// beta0 = m, gamma0 = 0, gamma1 = 1 (the normalization that makes the
    /// momentum operator pure multiplication).
    bool canonical_form() const {
        return gamma_at(0) == detail::coeff_traits<K>::from_long(0) &&
               gamma_at(1) == detail::coeff_traits<K>::from_long(1) && beta_at(0) == mass();
    }
};

using CocycleSpec = BasicCocycleSpec<Rational>;
using CocycleSpecD = BasicCocycleSpec<double>;

CocycleSpecD to_double(const CocycleSpec& spec);

template <class K>
BasicTimePoly<K> eval_B(const BasicCocycleSpec<K>& spec, const BasicTimePoly<K>& f) {
    BasicTimePoly<K> acc;
    for (std::size_t n = 0; n < spec.beta.size(); ++n)
        acc = acc + spec.beta[n] * f.nth_derivative(static_cast<unsigned>(n));
    return acc;
}

template <class K>
BasicTimePoly<K> eval_C(const BasicCocycleSpec<K>& spec, const BasicTimePoly<K>& f) {
    BasicTimePoly<K> acc;
    for (std::size_t n = 0; n < spec.gamma.size(); ++n)
        acc = acc + spec.gamma[n] * f.nth_derivative(static_cast<unsigned>(n));
    return acc;
}

template <class K>
BasicVec3Poly<K> eval_B(const BasicCocycleSpec<K>& spec, const BasicVec3Poly<K>& a) {
    return {eval_B(spec, a.x), eval_B(spec, a.y), eval_B(spec, a.z)};
}

template <class K>
BasicVec3Poly<K> eval_C(const BasicCocycleSpec<K>& spec, const BasicVec3Poly<K>& a) {
    return {eval_C(spec, a.x), eval_C(spec, a.y), eval_C(spec, a.z)};
}

/// The two-cocycle
///   w(g2,g1) = 1/2 (shift_{b1} B(a2)) . C(a1) - 1/2 (shift_{b1} C(a2)) . B(a1).
template <class K>
BasicTimePoly<K> omega(const BasicCocycleSpec<K>& spec, const BasicGroupElement<K>& g2,
                       const BasicGroupElement<K>& g1) {
    const K half = detail::coeff_traits<K>::from_long(1) / detail::coeff_traits<K>::from_long(2);
    BasicTimePoly<K> lhs = eval_B(spec, g2.a).shifted(g1.b).dot(eval_C(spec, g1.a));
    BasicTimePoly<K> rhs = eval_C(spec, g2.a).shifted(g1.b).dot(eval_B(spec, g1.a));
    return half * (lhs - rhs);
}

/// Solves C(a_q) = q for the translation a_q that boosts the zero velocity to
/// the label q, as a triangular system in Taylor coefficients. Gauge: all
/// coefficients below the least nonzero gamma index (in particular a_q(0))
/// are zero.
template <class K>
BasicTimePoly<K> solve_aq(const BasicCocycleSpec<K>& spec, const BasicTimePoly<K>& q,
                          std::optional<int> budget = std::nullopt) {
    int k0 = -1;
    for (std::size_t n = 0; n < spec.gamma.size(); ++n) {
        if (!(spec.gamma[n] == detail::coeff_traits<K>::from_long(0))) {
            k0 = static_cast<int>(n);
            break;
        }
    }
    if (k0 < 0) throw SolveError("solve_aq: all gamma coefficients vanish");
    if (q.is_zero()) return BasicTimePoly<K>();
    const int deg = q.degree();
    if (budget && deg + k0 > *budget)
        throw DegreeError("solve_aq: solution would exceed the degree budget");

    std::vector<K> a(static_cast<std::size_t>(deg + k0) + 1,
                     detail::coeff_traits<K>::from_long(0));
    for (int j = deg; j >= 0; --j) {
        K s = q.coeff(static_cast<std::size_t>(j));
        for (std::size_t n = static_cast<std::size_t>(k0) + 1; n < spec.gamma.size(); ++n) {
            std::size_t idx = n + static_cast<std::size_t>(j);
            if (idx < a.size()) s = s - spec.gamma[n] * a[idx];
        }
        a[static_cast<std::size_t>(k0 + j)] = s / spec.gamma[static_cast<std::size_t>(k0)];
    }
    return BasicTimePoly<K>(std::move(a));
}

template <class K>
BasicVec3Poly<K> solve_aq(const BasicCocycleSpec<K>& spec, const BasicVec3Poly<K>& q,
                          std::optional<int> budget = std::nullopt) {
    return {solve_aq(spec, q.x, budget), solve_aq(spec, q.y, budget),
            solve_aq(spec, q.z, budget)};
}

/// Vector functional on translations; lets negative controls inject shapes
/// outside the derivative-series family.
using VecFunctional = std::function<Vec3Poly(const Vec3Poly&)>;

VecFunctional functional_from_beta(const CocycleSpec& spec);
VecFunctional functional_from_gamma(const CocycleSpec& spec);
/// Nonlinear control: a scaled by its own x-offset; breaks additivity.
VecFunctional nonlinear_control_functional();

struct ConstraintViolation {
    std::string constraint;  // "B-shift", "C-shift", "B-additivity", "C-additivity"
    Vec3Poly a1, a2;         // a2 unused for shift checks
    Rational b;
    TimePoly defect;         // x component of the first failing identity
};

struct ConstraintReport {
    std::size_t samples = 0;
    std::vector<ConstraintViolation> violations;
    bool pass() const { return violations.empty(); }
};

/// Verifies shift-equivariance and additivity of B and C on sampled (a, b).
ConstraintReport check_BC_constraints(const VecFunctional& B, const VecFunctional& C,
                                      const std::vector<std::pair<Vec3Poly, Rational>>& samples);
ConstraintReport check_BC_constraints(const CocycleSpec& spec,
                                      const std::vector<std::pair<Vec3Poly, Rational>>& samples);

struct ReductionReport {
    bool embeddable = false;
    Rational mass;
    std::size_t samples = 0;
    std::optional<std::pair<GroupElement, GroupElement>> witness;
    bool pass() const { return embeddable && !witness.has_value(); }
};

/// On affine pairs a_i(t) = a_i + v_i t the cocycle must collapse to
/// (m/2)(a2.v1 - v2.a1 + b1 v2.v1) with the derived mass.
ReductionReport galilei_reduction_check(
    const CocycleSpec& spec, const std::vector<std::pair<GroupElement, GroupElement>>& pairs);

}  // namespace galine
