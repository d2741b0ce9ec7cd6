#include "galine/qrep.hpp"

#include <json.hpp>

namespace galine {

CanonicalOperator momentum(const CocycleSpec& spec, int component) {
    return CanonicalOperator::mult_q(component, CPoly::real_const(spec.beta_at(0))) +
           CanonicalOperator::deriv(component, CPoly::imag_const(spec.gamma_at(0)));
}

CanonicalOperator boost(const CocycleSpec& spec, int n, int component) {
    if (n < 0) throw Error("boost: order must be nonnegative");
    CanonicalOperator op;
    for (int k = 0; k <= n; ++k) {
        unsigned p = static_cast<unsigned>(n - k);
        Rational inv_f = Rational(1) / factorial(p);
        TimePoly tpow_b = TimePoly::monomial(p, inv_f * spec.beta_at(static_cast<std::size_t>(k)));
        TimePoly tpow_g = TimePoly::monomial(p, inv_f * spec.gamma_at(static_cast<std::size_t>(k)));
        op = op + CanonicalOperator::mult_q(component, CPoly::real(tpow_b)) +
             CanonicalOperator::deriv(component, CPoly::imag(tpow_g));
    }
    return op;
}

CanonicalOperator position(const CocycleSpec& spec, int component) {
    Rational m = spec.mass();
    if (m.is_zero()) throw Error("position: spec is not Galilei-embeddable (m = 0)");
    return CanonicalOperator::deriv(component, CPoly::imag_const(Rational(1) / m));
}

CanonicalOperator internal_energy(const Rational& w) {
    return CanonicalOperator::identity(CPoly::real_const(w));
}

namespace {

struct FlowData {
    TimePoly A1;       // boost profile of the unit label: C(A1) = 1
    TimePoly BA1;      // B(A1)
    TimePoly aF;       // boost profile of the flow component: C(aF) = F
    TimePoly BaF;      // B(aF)
    TimePoly F;        // flow component
    TimePoly Fdot;     // prescribed label velocity
};

FlowData flow_data(const CocycleSpec& spec, const TimePoly& F) {
    FlowData d;
    d.A1 = solve_aq(spec, TimePoly::constant(Rational(1)));
    d.BA1 = eval_B(spec, d.A1);
    d.aF = solve_aq(spec, F);
    d.BaF = eval_B(spec, d.aF);
    d.F = F;
    d.Fdot = F.derivative();
    return d;
}

}  // namespace

CanonicalOperator hamiltonian_generator(const CocycleSpec& spec, const Rational& w,
                                        const TimePoly& q_flow) {
    const Rational half(1, 2);
    CanonicalOperator H = internal_energy(w);
    FlowData d = flow_data(spec, q_flow);
    TimePoly BA1p = d.BA1.derivative();
    TimePoly BaFp = d.BaF.derivative();

    OpMonomial q2;
    q2.qe[0] = 2;
    H = H + CanonicalOperator::term(q2, CPoly::real(half * BA1p));

    TimePoly lin = half * (BaFp - d.F * BA1p + d.BA1 * d.Fdot);
    H = H + CanonicalOperator::mult_q(0, CPoly::real(lin));

    TimePoly scal = half * (d.BaF - d.F * d.BA1) * d.Fdot;
    H = H + CanonicalOperator::identity(CPoly::real(scal));

    H = H + CanonicalOperator::deriv(0, CPoly::imag(d.Fdot));
    return H;
}

CanonicalOperator hamiltonian_evolution(const CocycleSpec& spec, const Rational& w,
                                        const TimePoly& q_flow) {
    if (!spec.galilei_embeddable())
        throw Error("hamiltonian_evolution: spec is not Galilei-embeddable (m = 0)");
    if (!spec.canonical_form())
        throw Error("hamiltonian_evolution: spec must be in canonical form");
    const Rational m = spec.mass();
    const Rational half(1, 2);

    CanonicalOperator H = internal_energy(w);
    const TimePoly& F = q_flow;
    TimePoly Fdot = F.derivative();
    TimePoly aF = solve_aq(spec, F);

    OpMonomial q2;
    q2.qe[0] = 2;
    H = H + CanonicalOperator::term(q2, CPoly::real(TimePoly::constant(half * m)));

    // - m qdot X  ==  - i qdot D
    H = H + CanonicalOperator::deriv(0, CPoly::imag(-Fdot));

    // (1/2) c(t) P with P = m q; derivative order n+1 on the beta side,
    // order n on the gamma side, as the velocity expectation law requires
    TimePoly c;
    for (std::size_t n = 1; n < spec.beta.size(); ++n)
        c = c + (spec.beta[n] / m) * aF.nth_derivative(static_cast<unsigned>(n + 1));
    for (std::size_t n = 2; n < spec.gamma.size(); ++n)
        c = c - spec.gamma[n] * aF.nth_derivative(static_cast<unsigned>(n));
    H = H + CanonicalOperator::mult_q(0, CPoly::real(half * m * c));

    // scalar terms: m qdot (aF + sum_{n>=1} (beta_n/m) aF^(n))
    TimePoly s = aF;
    for (std::size_t n = 1; n < spec.beta.size(); ++n)
        s = s + (spec.beta[n] / m) * aF.nth_derivative(static_cast<unsigned>(n));
    H = H + CanonicalOperator::identity(CPoly::real(m * Fdot * s));
    return H;
}

CanonicalOperator hamiltonian_half_aq_form(const CocycleSpec& spec, const Rational& w,
                                           const TimePoly& q_flow) {
    if (!spec.galilei_embeddable())
        throw Error("hamiltonian_half_aq_form: spec is not Galilei-embeddable");
    const Rational m = spec.mass();
    const Rational half(1, 2);
    CanonicalOperator H = internal_energy(w);
    FlowData d = flow_data(spec, q_flow);

    CanonicalOperator P = momentum(spec, 0);
    H = H + (half / m) * (P * P);

    // m qdot (X + 1/2 a_qhat), a_qhat = A1 q + (aF - F A1) I
    H = H + CPoly::real(m * d.Fdot) * position(spec, 0);
    CanonicalOperator a_qhat =
        CanonicalOperator::mult_q(0, CPoly::real(d.A1)) +
        CanonicalOperator::identity(CPoly::real(d.aF - d.F * d.A1));
    H = H + CPoly::real(half * m * d.Fdot) * a_qhat;
    return H;
}

HamiltonianReport hamiltonian_report(const CocycleSpec& spec, const Rational& w,
                                     const TimePoly& q_flow) {
    HamiltonianReport r;
    r.generator = hamiltonian_generator(spec, w, q_flow);
    if (spec.canonical_form()) r.evolution = hamiltonian_evolution(spec, w, q_flow);
    if (spec.galilei_embeddable()) {
        r.half_aq_form = hamiltonian_half_aq_form(spec, w, q_flow);
        r.generator_minus_half_aq = r.generator - r.half_aq_form;
        r.generator_matches_half_aq = r.generator_minus_half_aq.is_zero();
    }
    return r;
}

std::string HamiltonianReport::to_json() const {
    nlohmann::json j;
    j["generator"] = nlohmann::json::parse(generator.to_json());
    j["evolution"] = nlohmann::json::parse(evolution.to_json());
    j["half_aq_form"] = nlohmann::json::parse(half_aq_form.to_json());
    j["generator_minus_half_aq"] = nlohmann::json::parse(generator_minus_half_aq.to_json());
    j["generator_matches_half_aq"] = generator_matches_half_aq;
    return j.dump(2);
}

CanonicalOperator ehrenfest_rhs(const CanonicalOperator& H, const CanonicalOperator& A) {
    return CPoly::imag_const(Rational(1)) * commutator(H, A) + A.time_derivative();
}

}  // namespace galine
