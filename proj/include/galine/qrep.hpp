#pragma once

#include <string>

#include "galine/cocycle.hpp"
#include "galine/operator_algebra.hpp"

namespace galine {

/// Velocity-label transform carried by the generalized eigenvectors:
/// q -> shift_{-b}(q + C(a)).
template <class K>
BasicVec3Poly<K> transform_label(const BasicCocycleSpec<K>& spec, const BasicGroupElement<K>& g,
                                 const BasicVec3Poly<K>& q) {
    return (q + eval_C(spec, g.a)).shifted(-g.b);
}

/// Argument label of the transformed wavefunction: shift_b q - C(a).
template <class K>
BasicVec3Poly<K> wavefn_argument(const BasicCocycleSpec<K>& spec, const BasicGroupElement<K>& g,
                                 const BasicVec3Poly<K>& q) {
    return q.shifted(g.b) - eval_C(spec, g.a);
}

/// Dual label q~ = q - shift_{-b} C(a) seen by the wavefunction transform.
template <class K>
BasicVec3Poly<K> dual_label(const BasicCocycleSpec<K>& spec, const BasicGroupElement<K>& g,
                            const BasicVec3Poly<K>& q) {
    return q - eval_C(spec, g.a).shifted(-g.b);
}

/// Phase attached to the eigenvector transform:
///   B(a).(q + C(a)) - 1/2 B(a).C(a)
///   + 1/2 (shift_{-b} - 1)[B(a_{q'}) . q'] - w b,   q' = q + C(a).
template <class K>
BasicTimePoly<K> xi(const BasicCocycleSpec<K>& spec, const K& w, const BasicGroupElement<K>& g,
                    const BasicVec3Poly<K>& q) {
    const K half = detail::coeff_traits<K>::from_long(1) / detail::coeff_traits<K>::from_long(2);
    BasicVec3Poly<K> Ba = eval_B(spec, g.a);
    BasicVec3Poly<K> Ca = eval_C(spec, g.a);
    BasicVec3Poly<K> qp = q + Ca;
    BasicTimePoly<K> head = Ba.dot(qp) - half * Ba.dot(Ca);
    BasicTimePoly<K> s = eval_B(spec, solve_aq(spec, qp)).dot(qp);
    BasicTimePoly<K> tail = half * (s.shifted(-g.b) - s);
    return head + tail - BasicTimePoly<K>::constant(w * g.b);
}

/// The phase of the wavefunction transform is xi evaluated at the inverse
/// element.
template <class K>
BasicTimePoly<K> xi_inverse(const BasicCocycleSpec<K>& spec, const K& w,
                            const BasicGroupElement<K>& g, const BasicVec3Poly<K>& q) {
    return xi(spec, w, inverse(g), q);
}

/// The boost of the zero label onto q, as a group element: (a_q, 0).
template <class K>
BasicGroupElement<K> label_section(const BasicCocycleSpec<K>& spec, const BasicVec3Poly<K>& q,
                                   int budget) {
    return BasicGroupElement<K>(solve_aq(spec, q), detail::coeff_traits<K>::from_long(0),
                                budget);
}

/// Phase of the eigenvector transform obtained by decomposing g through the
/// label sections inside the extension: with s(q) = (a_q, 0) and
/// h = s(g.q)^{-1} g s(q) a stabilizer of the zero label,
///   phase(g, q) = shift_{-b}[ w(g, s(q)) - w(s(g.q), h) ] - w_int b.
/// Unlike the per-element formula `xi`, this phase closes exactly under
/// composition (see composition_defect).
template <class K>
BasicTimePoly<K> section_phase(const BasicCocycleSpec<K>& spec, const K& w,
                               const BasicGroupElement<K>& g, const BasicVec3Poly<K>& q) {
    BasicGroupElement<K> sq = label_section(spec, q, g.max_degree);
    BasicGroupElement<K> sgq = label_section(spec, transform_label(spec, g, q), g.max_degree);
    BasicGroupElement<K> h = compose(compose(inverse(sgq), g), sq);
    BasicTimePoly<K> raw = omega(spec, g, sq) - omega(spec, sgq, h);
    return raw.shifted(-g.b) - BasicTimePoly<K>::constant(w * g.b);
}

/// Defect of the representation property for the eigenvector action. The
/// accumulated phase of acting with g1 then g2 carries the time shifts that
/// the extension law forces on transported phases: the phase already attached
/// to the state is shifted by -b2 when g2 acts, and the cocycle enters
/// shifted by the composed time translation:
///   shift_{-b2} phase(g1, q) + phase(g2, g1.q)
///     - shift_{-b1-b2} w(g2, g1) - phase(g2 g1, q).
/// Identically zero; this is the module's correctness theorem.
template <class K>
BasicTimePoly<K> composition_defect(const BasicCocycleSpec<K>& spec, const K& w,
                                    const BasicGroupElement<K>& g2,
                                    const BasicGroupElement<K>& g1,
                                    const BasicVec3Poly<K>& q) {
    BasicTimePoly<K> accumulated = section_phase(spec, w, g1, q).shifted(-g2.b) +
                                   section_phase(spec, w, g2, transform_label(spec, g1, q));
    BasicTimePoly<K> composed = omega(spec, g2, g1).shifted(-(g1.b + g2.b)) +
                                section_phase(spec, w, compose(g2, g1), q);
    return accumulated - composed;
}

/// P_i = beta0 q_i + i gamma0 D_i (the order-zero boost).
CanonicalOperator momentum(const CocycleSpec& spec, int component = 0);

/// K^(n)_i = sum_{k<=n} (beta_k t^{n-k} q_i + i gamma_k t^{n-k} D_i)/(n-k)!.
CanonicalOperator boost(const CocycleSpec& spec, int n, int component = 0);

/// X_i = (i/m) D_i; requires a nonzero derived mass.
CanonicalOperator position(const CocycleSpec& spec, int component = 0);

/// V = w * identity.
CanonicalOperator internal_energy(const Rational& w);

/// Time-translation generator of the wavefunction transforms, tied to the
/// running evaluation time: coefficients are polynomials in t such that
/// evaluating them at t0 gives the instantaneous generator for states whose
/// labels are read off at t0. Valid for any spec with solvable gamma. The
/// engine works in the one-dimensional reduction: the label flow is scalar
/// and the operator lives on the x component.
CanonicalOperator hamiltonian_generator(const CocycleSpec& spec, const Rational& w,
                                        const TimePoly& q_flow);

/// Dynamical model used by the numeric evolution:
///   P^2/2m + V - m qdot.X + (1/2) c(t).P + phi(t) I
/// with c and phi built from a_q = solve_aq(q_flow). The sign of the X term
/// and the derivative orders in c are fixed by the expectation-value laws
/// (momentum drift m qdot, velocity P/m + c/2, acceleration qdot).
/// Requires a canonical-form spec.
CanonicalOperator hamiltonian_evolution(const CocycleSpec& spec, const Rational& w,
                                        const TimePoly& q_flow);

/// P^2/2m + V + sum_i m qdot_i (X_i + 1/2 a_qhat_i) with the label-dependent
/// (operator-valued) boost profile a_qhat_i = A1(t) q_i + (a_F_i - F_i A1) I.
CanonicalOperator hamiltonian_half_aq_form(const CocycleSpec& spec, const Rational& w,
                                           const TimePoly& q_flow);

struct HamiltonianReport {
    CanonicalOperator generator;
    CanonicalOperator evolution;
    CanonicalOperator half_aq_form;
    CanonicalOperator generator_minus_half_aq;
    bool generator_matches_half_aq = false;
    std::string to_json() const;
};

HamiltonianReport hamiltonian_report(const CocycleSpec& spec, const Rational& w,
                                     const TimePoly& q_flow);

/// i [H, A] + dA/dt.
CanonicalOperator ehrenfest_rhs(const CanonicalOperator& H, const CanonicalOperator& A);

}  // namespace galine
