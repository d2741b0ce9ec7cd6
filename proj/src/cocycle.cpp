#include "galine/cocycle.hpp"

namespace galine {

CocycleSpecD to_double(const CocycleSpec& spec) {
    CocycleSpecD d;
    d.max_degree = spec.max_degree;
    d.beta.reserve(spec.beta.size());
    d.gamma.reserve(spec.gamma.size());
    for (const auto& b : spec.beta) d.beta.push_back(b.to_double());
    for (const auto& g : spec.gamma) d.gamma.push_back(g.to_double());
    return d;
}

VecFunctional functional_from_beta(const CocycleSpec& spec) {
    return [spec](const Vec3Poly& a) { return eval_B(spec, a); };
}

VecFunctional functional_from_gamma(const CocycleSpec& spec) {
    return [spec](const Vec3Poly& a) { return eval_C(spec, a); };
}

VecFunctional nonlinear_control_functional() {
    return [](const Vec3Poly& a) { return a.x.coeff(0) * a; };
}

ConstraintReport check_BC_constraints(
    const VecFunctional& B, const VecFunctional& C,
    const std::vector<std::pair<Vec3Poly, Rational>>& samples) {
    ConstraintReport report;
    auto check_one = [&report](const std::string& name, const Vec3Poly& lhs, const Vec3Poly& rhs,
                               const Vec3Poly& a1, const Vec3Poly& a2, const Rational& b) {
        Vec3Poly diff = lhs - rhs;
        if (!diff.is_zero()) {
            const TimePoly& d =
                !diff.x.is_zero() ? diff.x : (!diff.y.is_zero() ? diff.y : diff.z);
            report.violations.push_back({name, a1, a2, b, d});
        }
    };
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const auto& [a, b] = samples[i];
        const auto& [a2, b2] = samples[(i + 1) % samples.size()];
        report.samples++;
        check_one("B-shift", B(a).shifted(b), B(a.shifted(b)), a, Vec3Poly{}, b);
        check_one("C-shift", C(a).shifted(b), C(a.shifted(b)), a, Vec3Poly{}, b);
        check_one("B-additivity", B(a + a2), B(a) + B(a2), a, a2, Rational(0));
        check_one("C-additivity", C(a + a2), C(a) + C(a2), a, a2, Rational(0));
    }
    return report;
}

ConstraintReport check_BC_constraints(
    const CocycleSpec& spec, const std::vector<std::pair<Vec3Poly, Rational>>& samples) {
    return check_BC_constraints(functional_from_beta(spec), functional_from_gamma(spec), samples);
}

namespace {

std::array<Rational, 3> const_part(const Vec3Poly& v) {
    return {v.x.coeff(0), v.y.coeff(0), v.z.coeff(0)};
}

Rational dot3(const std::array<Rational, 3>& u, const std::array<Rational, 3>& v) {
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
}

}  // namespace

ReductionReport galilei_reduction_check(
    const CocycleSpec& spec, const std::vector<std::pair<GroupElement, GroupElement>>& pairs) {
    ReductionReport report;
    report.mass = spec.mass();
    report.embeddable = spec.galilei_embeddable();
    if (!report.embeddable) return report;

    const Rational half(1, 2);
    for (const auto& [g2, g1] : pairs) {
        if (!is_galilei(g2) || !is_galilei(g1))
            throw Error("galilei_reduction_check: non-affine sample pair");
        report.samples++;
        auto a2 = const_part(g2.a);
        auto v2 = const_part(g2.a.derivative());
        auto a1 = const_part(g1.a);
        auto v1 = const_part(g1.a.derivative());
        Rational target =
            half * report.mass * (dot3(a2, v1) - dot3(v2, a1) + g1.b * dot3(v2, v1));
        TimePoly value = omega(spec, g2, g1);
        if (value != TimePoly::constant(target)) {
            report.witness = std::make_pair(g2, g1);
            break;
        }
    }
    return report;
}

}  // namespace galine
