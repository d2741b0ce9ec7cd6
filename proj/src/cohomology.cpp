#include "galine/cohomology.hpp"

#include "galine/errors.hpp"

namespace galine {

TimePoly Cochain::operator()(const std::vector<GroupElement>& tuple) const {
    if (static_cast<int>(tuple.size()) != arity)
        throw Error("cochain: arity mismatch");
    return eval(tuple);
}

namespace {

std::vector<GroupElement> merge_at(const std::vector<GroupElement>& tuple, std::size_t i) {
    // replace (tuple[i], tuple[i+1]) with their product, left factor acting last
    std::vector<GroupElement> out;
    out.reserve(tuple.size() - 1);
    for (std::size_t k = 0; k < tuple.size(); ++k) {
        if (k == i) {
            out.push_back(compose(tuple[i], tuple[i + 1]));
            ++k;
        } else {
            out.push_back(tuple[k]);
        }
    }
    return out;
}

}  // namespace

TimePoly coboundary(Convention conv, const Cochain& alpha,
                    const std::vector<GroupElement>& tuple) {
    const int n = alpha.arity;
    if (static_cast<int>(tuple.size()) != n + 1)
        throw Error("coboundary: tuple must have arity+1 elements");

    TimePoly acc;
    if (conv == Convention::Standard) {
        // sigma(g1) alpha(g2..g_{n+1})
        //   + sum_i (-1)^i alpha(..., g_i g_{i+1}, ...) + (-1)^{n+1} alpha(g1..gn)
        acc = shift_action(tuple.front(),
                           alpha(std::vector<GroupElement>(tuple.begin() + 1, tuple.end())));
        for (int i = 1; i <= n; ++i) {
            TimePoly term = alpha(merge_at(tuple, static_cast<std::size_t>(i - 1)));
            acc = (i % 2 == 0) ? acc + term : acc - term;
        }
        TimePoly last = alpha(std::vector<GroupElement>(tuple.begin(), tuple.end() - 1));
        acc = ((n + 1) % 2 == 0) ? acc + last : acc - last;
    } else {
        // Mirror image: sigma acts through the last listed element (the one
        // acting first), merges run from the right.
        acc = shift_action(tuple.back(),
                           alpha(std::vector<GroupElement>(tuple.begin(), tuple.end() - 1)));
        for (int i = 1; i <= n; ++i) {
            TimePoly term = alpha(merge_at(tuple, static_cast<std::size_t>(i - 1)));
            acc = ((n + 1 - i) % 2 == 0) ? acc + term : acc - term;
        }
        TimePoly last = alpha(std::vector<GroupElement>(tuple.begin() + 1, tuple.end()));
        acc = ((n + 1) % 2 == 0) ? acc + last : acc - last;
    }
    return acc;
}

TimePoly cocycle_condition_defect(
    const std::function<TimePoly(const GroupElement&, const GroupElement&)>& omega,
    const GroupElement& g3, const GroupElement& g2, const GroupElement& g1) {
    TimePoly lhs = shift_action(g1, omega(g3, g2)) + omega(compose(g3, g2), g1);
    TimePoly rhs = omega(g2, g1) + omega(g3, compose(g2, g1));
    return lhs - rhs;
}

DdZeroReport check_dd_zero(Convention conv, const Cochain& alpha,
                           const std::vector<std::vector<GroupElement>>& tuples,
                           std::uint64_t seed) {
    DdZeroReport report;
    report.seed = seed;
    Cochain delta_alpha{alpha.arity + 1, [conv, alpha](const std::vector<GroupElement>& t) {
                            return coboundary(conv, alpha, t);
                        }};
    for (const auto& tuple : tuples) {
        TimePoly value = coboundary(conv, delta_alpha, tuple);
        ++report.samples;
        if (!value.is_zero()) report.violations.push_back({tuple, value});
    }
    return report;
}

CocycleCheckResult is_two_cocycle(
    const std::function<TimePoly(const GroupElement&, const GroupElement&)>& omega,
    const std::vector<std::array<GroupElement, 3>>& triples) {
    CocycleCheckResult res;
    for (const auto& t : triples) {
        TimePoly defect = cocycle_condition_defect(omega, t[0], t[1], t[2]);
        ++res.samples;
        if (!defect.is_zero()) {
            res.witness = Witness{{t[0], t[1], t[2]}, defect};
            break;
        }
    }
    return res;
}

CocycleCheckResult equivalent_mod_coboundary(
    const std::function<TimePoly(const GroupElement&, const GroupElement&)>& omega1,
    const std::function<TimePoly(const GroupElement&, const GroupElement&)>& omega2,
    const Cochain& alpha1, const std::vector<std::array<GroupElement, 2>>& pairs) {
    if (alpha1.arity != 1) throw Error("equivalent_mod_coboundary: alpha1 must be a 1-cochain");
    CocycleCheckResult res;
    for (const auto& p : pairs) {
        std::vector<GroupElement> tuple{p[0], p[1]};
        TimePoly defect =
            (omega1(p[0], p[1]) - omega2(p[0], p[1])) - coboundary(Convention::Dual, alpha1, tuple);
        ++res.samples;
        if (!defect.is_zero()) {
            res.witness = Witness{tuple, defect};
            break;
        }
    }
    return res;
}

ExtensionType classify_extension(bool sigma_trivial, bool omega_trivial) {
    if (sigma_trivial && !omega_trivial) return ExtensionType::Central;
    if (!sigma_trivial && omega_trivial) return ExtensionType::Semidirect;
    if (sigma_trivial && omega_trivial) return ExtensionType::Direct;
    return ExtensionType::General;
}

std::string to_string(ExtensionType t) {
    switch (t) {
        case ExtensionType::Central: return "central";
        case ExtensionType::Semidirect: return "semidirect";
        case ExtensionType::Direct: return "direct";
        case ExtensionType::General: return "general";
    }
    return "general";
}

Cochain make_random_cochain(int arity, std::uint64_t seed) {
    Prng rng(seed);
    if (arity == 0) {
        TimePoly value = random_poly(rng, 2);
        return {0, [value](const std::vector<GroupElement>&) { return value; }};
    }
    if (arity == 1) {
        LinearOneCochain lin = random_linear_one_cochain(rng, 2);
        Rational quad = random_rational(rng);  // nonlinear touch: quad * (a . a)
        Cochain base = lin.to_cochain();
        return {1, [lin, quad, base](const std::vector<GroupElement>& t) {
                    return base(t) + quad * t[0].a.dot(t[0].a);
                }};
    }
    if (arity == 2) {
        // shifted bilinear pairing of derivative orders plus a b1*b2 constant
        unsigned n2 = static_cast<unsigned>(rng.below(3));
        unsigned n1 = static_cast<unsigned>(rng.below(3));
        Rational c0 = random_rational(rng);
        Rational c1 = random_rational(rng);
        return {2, [n2, n1, c0, c1](const std::vector<GroupElement>& t) {
                    const GroupElement& g2 = t[0];
                    const GroupElement& g1 = t[1];
                    TimePoly pair =
                        g2.a.nth_derivative(n2).shifted(g1.b).dot(g1.a.nth_derivative(n1));
                    return c0 * pair + TimePoly::constant(c1 * g2.b * g1.b);
                }};
    }
    // higher arities: product of component values, shifted through the tail
    Rational c = random_rational(rng);
    unsigned order = static_cast<unsigned>(rng.below(2));
    return {arity, [c, order, arity](const std::vector<GroupElement>& t) {
                TimePoly prod = TimePoly::constant(c);
                for (int i = 0; i < arity; ++i)
                    prod = prod * t[static_cast<std::size_t>(i)].a.nth_derivative(order).x;
                return prod;
            }};
}

Cochain LinearOneCochain::to_cochain() const {
    auto self = *this;
    return {1, [self](const std::vector<GroupElement>& t) {
                const GroupElement& g = t[0];
                TimePoly acc;
                for (std::size_t n = 0; n < self.dirs.size(); ++n) {
                    Vec3Poly d = g.a.nth_derivative(static_cast<unsigned>(n));
                    acc = acc + self.dirs[n][0] * d.x + self.dirs[n][1] * d.y +
                          self.dirs[n][2] * d.z;
                }
                return acc + TimePoly::constant(self.mu * g.b);
            }};
}

LinearOneCochain random_linear_one_cochain(Prng& rng, int max_deriv) {
    LinearOneCochain lin;
    for (int n = 0; n <= max_deriv; ++n)
        lin.dirs.push_back({random_rational(rng), random_rational(rng), random_rational(rng)});
    lin.mu = random_rational(rng);
    return lin;
}

}  // namespace galine
