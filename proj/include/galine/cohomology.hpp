#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "galine/group.hpp"
#include "galine/sampling.hpp"
#include "galine/timepoly.hpp"

namespace galine {

/// The automorphism action on scalar time functions: sigma(g) shifts the time
/// argument by the element's time translation.
inline TimePoly shift_action(const GroupElement& g, const TimePoly& f) {
    return f.shifted(g.b);
}

/// n-cochain with values in the additive group of scalar time functions.
struct Cochain {
    int arity = 0;
    std::function<TimePoly(const std::vector<GroupElement>&)> eval;

    TimePoly operator()(const std::vector<GroupElement>& tuple) const;
};

/// Which way the automorphism enters the coboundary operator. `Standard` puts
/// sigma on the first listed element. `Dual` mirrors the formula to match the
/// composition order of the line group (right argument acts first) and is the
/// default everywhere else in the engine.
enum class Convention { Standard, Dual };

TimePoly coboundary(Convention conv, const Cochain& alpha,
                    const std::vector<GroupElement>& tuple);

/// Two-cocycle condition defect in the dual convention; zero for cocycles:
/// sigma(g1) w(g3,g2) + w(g3 g2, g1) - w(g2,g1) - w(g3, g2 g1).
TimePoly cocycle_condition_defect(
    const std::function<TimePoly(const GroupElement&, const GroupElement&)>& omega,
    const GroupElement& g3, const GroupElement& g2, const GroupElement& g1);

struct Witness {
    std::vector<GroupElement> tuple;
    TimePoly value;
};

struct DdZeroReport {
    std::size_t samples = 0;
    std::vector<Witness> violations;
    std::uint64_t seed = 0;
    bool pass() const { return violations.empty(); }
};

/// Applies the coboundary twice and verifies the result vanishes identically
/// on every sampled (n+2)-tuple.
DdZeroReport check_dd_zero(Convention conv, const Cochain& alpha,
                           const std::vector<std::vector<GroupElement>>& tuples,
                           std::uint64_t seed = 0);

struct CocycleCheckResult {
    std::size_t samples = 0;
    std::optional<Witness> witness;  // first violating triple
    bool pass() const { return !witness.has_value(); }
};

CocycleCheckResult is_two_cocycle(
    const std::function<TimePoly(const GroupElement&, const GroupElement&)>& omega,
    const std::vector<std::array<GroupElement, 3>>& triples);

/// True iff w1 - w2 equals the dual coboundary of alpha1 on every sampled pair.
CocycleCheckResult equivalent_mod_coboundary(
    const std::function<TimePoly(const GroupElement&, const GroupElement&)>& omega1,
    const std::function<TimePoly(const GroupElement&, const GroupElement&)>& omega2,
    const Cochain& alpha1, const std::vector<std::array<GroupElement, 2>>& pairs);

enum class ExtensionType { Central, Semidirect, Direct, General };

ExtensionType classify_extension(bool sigma_trivial, bool omega_trivial);
std::string to_string(ExtensionType t);

/// Deterministic cochain built from shifted products of translation
/// derivatives and time-translation powers; parameters drawn from `seed`.
Cochain make_random_cochain(int arity, std::uint64_t seed);

/// The declared falsification family for nontriviality searches: linear
/// functionals of the translation derivatives plus a multiple of b.
struct LinearOneCochain {
    std::vector<std::array<Rational, 3>> dirs;  // dirs[n] dotted into a^(n)
    Rational mu;                                // coefficient of b

    Cochain to_cochain() const;
};

LinearOneCochain random_linear_one_cochain(Prng& rng, int max_deriv);

}  // namespace galine
