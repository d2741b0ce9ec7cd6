#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "galine/cocycle.hpp"
#include "galine/cohomology.hpp"
#include "galine/sampling.hpp"

using namespace galine;

namespace {

GroupElement elem(TimePoly ax, Rational b, int budget = 12) {
    return GroupElement(Vec3Poly::axis_x(std::move(ax)), std::move(b), budget);
}

CocycleSpec make_spec(std::vector<Rational> beta, std::vector<Rational> gamma) {
    CocycleSpec s;
    s.beta = std::move(beta);
    s.gamma = std::move(gamma);
    s.max_degree = 12;
    return s;
}

}  // namespace

TEST_CASE("derived mass and canonical form") {
    CocycleSpec canon = make_spec({Rational(1)}, {Rational(0), Rational(1)});
    CHECK(canon.mass() == Rational(1));
    CHECK(canon.galilei_embeddable());
    CHECK(canon.canonical_form());

    CocycleSpec s = make_spec({Rational(2), Rational(1)}, {Rational(1), Rational(3)});
    CHECK(s.mass() == Rational(5));
    CHECK_FALSE(s.canonical_form());

    CocycleSpec degenerate = make_spec({Rational(1), Rational(2)}, {Rational(2), Rational(4)});
    CHECK(degenerate.mass() == Rational(0));
    CHECK_FALSE(degenerate.galilei_embeddable());
}

TEST_CASE("B and C evaluate the derivative series") {
    TimePoly half_g_t2 = TimePoly::monomial(2, Rational(1, 2));  // g0 = 1 frame pull
    CocycleSpec id_spec = make_spec({Rational(1)}, {Rational(0), Rational(1)});
    Prng rng(4);
    Vec3Poly a = random_vec3(rng, 5);
    CHECK(eval_B(id_spec, a) == a);
    CHECK(eval_C(id_spec, Vec3Poly::axis_x(half_g_t2)) ==
          Vec3Poly::axis_x(TimePoly::monomial(1, Rational(1))));

    CocycleSpec two = make_spec({Rational(1), Rational(3, 10)}, {Rational(0), Rational(1)});
    CHECK(eval_B(two, half_g_t2) ==
          half_g_t2 + TimePoly::monomial(1, Rational(3, 10)));
}

TEST_CASE("cocycle value on simple pairs") {
    CocycleSpec canon = make_spec({Rational(1)}, {Rational(0), Rational(1)});
    GroupElement e = GroupElement::identity(12);
    Prng rng(6);
    GroupElement g = random_element(rng, 3, 12);
    CHECK(omega(canon, g, e).is_zero());
    CHECK(omega(canon, e, g).is_zero());

    // boosts v2 t and v1 t with a unit time translation on the first factor
    GroupElement g2 = elem(TimePoly::monomial(1, Rational(3)), Rational(0));
    GroupElement g1 = elem(TimePoly::monomial(1, Rational(5)), Rational(1));
    CHECK(omega(canon, g2, g1) == TimePoly::constant(Rational(15, 2)));

    // constant offset against a boost
    GroupElement c2 = elem(TimePoly::constant(Rational(2)), Rational(0));
    GroupElement b1 = elem(TimePoly::monomial(1, Rational(7)), Rational(0));
    CHECK(omega(canon, c2, b1) == TimePoly::constant(Rational(7)));

    // vanishing diagonal at zero time translation
    GroupElement d = elem(TimePoly::monomial(2, Rational(1, 3)), Rational(0));
    CHECK(omega(canon, d, d).is_zero());
}

TEST_CASE("constraint checker accepts the family and rejects a nonlinear control") {
    Prng rng(8);
    std::vector<std::pair<Vec3Poly, Rational>> samples;
    for (int k = 0; k < 20; ++k) samples.emplace_back(random_vec3(rng, 4), random_rational(rng));
    samples.emplace_back(Vec3Poly{}, Rational(2));  // zero function

    CocycleSpec s = make_spec({Rational(1), Rational(3, 10), Rational(0), Rational(1, 4)},
                              {Rational(0), Rational(1), Rational(1, 5)});
    CHECK(check_BC_constraints(s, samples).pass());

    ConstraintReport rep = check_BC_constraints(nonlinear_control_functional(),
                                                functional_from_gamma(s), samples);
    CHECK_FALSE(rep.pass());
    bool additivity = false;
    for (const auto& v : rep.violations)
        if (v.constraint == "B-additivity") additivity = true;
    CHECK(additivity);
}

TEST_CASE("Galilei reduction with the derived mass") {
    Prng rng(10);
    std::vector<std::pair<GroupElement, GroupElement>> pairs;
    for (int k = 0; k < 100; ++k)
        pairs.emplace_back(random_galilei(rng, 12), random_galilei(rng, 12));

    CHECK(galilei_reduction_check(make_spec({Rational(1)}, {Rational(0), Rational(1)}), pairs)
              .pass());
    ReductionReport rep = galilei_reduction_check(
        make_spec({Rational(2), Rational(1)}, {Rational(1), Rational(3)}), pairs);
    CHECK(rep.pass());
    CHECK(rep.mass == Rational(5));

    // adding tail coefficients does not change the reduced values
    CocycleSpec tail = make_spec({Rational(2), Rational(1), Rational(0), Rational(7, 3)},
                                 {Rational(1), Rational(3), Rational(-1, 2)});
    for (const auto& [g2, g1] : pairs)
        CHECK(omega(tail, g2, g1) ==
              omega(make_spec({Rational(2), Rational(1)}, {Rational(1), Rational(3)}), g2, g1));

    ReductionReport zero_mass = galilei_reduction_check(
        make_spec({Rational(1), Rational(2)}, {Rational(2), Rational(4)}), pairs);
    CHECK_FALSE(zero_mass.embeddable);
    CHECK_FALSE(zero_mass.pass());
}

TEST_CASE("boost profile solve") {
    CocycleSpec canon = make_spec({Rational(1)}, {Rational(0), Rational(1)});
    // constant label integrates to c t
    TimePoly aq = solve_aq(canon, TimePoly::constant(Rational(3)));
    CHECK(aq == TimePoly::monomial(1, Rational(3)));
    CHECK(solve_aq(canon, TimePoly()).is_zero());

    // second-derivative correction: gamma = (0, 1, g2), q = t
    CocycleSpec with_g2 = make_spec({Rational(1)}, {Rational(0), Rational(1), Rational(1, 5)});
    TimePoly sol = solve_aq(with_g2, TimePoly::monomial(1, Rational(1)));
    CHECK(sol == TimePoly::monomial(2, Rational(1, 2)) -
                     TimePoly::monomial(1, Rational(1, 5)));

    CHECK_THROWS_AS(solve_aq(make_spec({Rational(1)}, {}), TimePoly::constant(Rational(1))),
                    SolveError);
    CHECK_THROWS_AS(
        solve_aq(canon, TimePoly::monomial(8, Rational(1)), std::optional<int>(8)),
        DegreeError);
}

TEST_CASE("solve round-trips through C for random labels") {
    Prng rng(12);
    CocycleSpec specs[] = {
        make_spec({Rational(1)}, {Rational(0), Rational(1)}),
        make_spec({Rational(1), Rational(3, 10)}, {Rational(0), Rational(1), Rational(1, 5)}),
        make_spec({Rational(2)}, {Rational(1), Rational(1, 2)}),  // gamma0 != 0
    };
    for (const auto& s : specs) {
        for (int k = 0; k < 25; ++k) {
            TimePoly q = random_poly(rng, 6);
            CHECK(eval_C(s, solve_aq(s, q)) == q);
        }
    }
}

TEST_CASE("gauge of the solved profile") {
    // coefficients below the least nonzero gamma index vanish
    CocycleSpec k2 = make_spec({Rational(1)}, {Rational(0), Rational(0), Rational(1)});
    TimePoly sol = solve_aq(k2, TimePoly::constant(Rational(4)));
    CHECK(sol.coeff(0) == Rational(0));
    CHECK(sol.coeff(1) == Rational(0));
    CHECK(sol == TimePoly::monomial(2, Rational(2)));
}

TEST_CASE("the family cocycle satisfies the cocycle condition exactly") {
    Prng rng(14);
    for (int rep = 0; rep < 6; ++rep) {
        CocycleSpec s;
        s.max_degree = 14;
        for (int i = 0; i < 4; ++i) s.beta.push_back(random_rational(rng));
        for (int i = 0; i < 4; ++i) s.gamma.push_back(random_rational(rng));
        std::vector<std::array<GroupElement, 3>> triples;
        for (int k = 0; k < 50; ++k)
            triples.push_back({random_element(rng, 3, 14), random_element(rng, 3, 14),
                               random_element(rng, 3, 14)});
        auto om = [&s](const GroupElement& a, const GroupElement& b) { return omega(s, a, b); };
        CHECK(is_two_cocycle(om, triples).pass());
    }
}
