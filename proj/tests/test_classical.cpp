#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "galine/classical.hpp"
#include "galine/qrep.hpp"
#include "galine/sampling.hpp"

using namespace galine;

namespace {

CocycleSpec make_spec(std::vector<Rational> beta, std::vector<Rational> gamma) {
    CocycleSpec s;
    s.beta = std::move(beta);
    s.gamma = std::move(gamma);
    s.max_degree = 8;
    return s;
}

GeneratingSpec gs_with(std::vector<Rational> beta, std::vector<Rational> gamma, TimePoly a,
                       double mass = 1.0) {
    return {make_spec(std::move(beta), std::move(gamma)), std::move(a), mass};
}

}  // namespace

TEST_CASE("canonical transform") {
    // vanishing frame: identity
    GeneratingSpec id = gs_with({Rational(1)}, {Rational(0), Rational(1)}, TimePoly());
    PhaseState s{0.7, -0.3, 2.0};
    PhaseState sp = canonical_transform(id, s);
    CHECK(sp.x == doctest::Approx(s.x));
    CHECK(sp.p == doctest::Approx(s.p));

    // B = a, a = t^2/2, t = 2: x shifts by 2; p drops by C(a)(2) = adot(2) = 2
    GeneratingSpec gs =
        gs_with({Rational(1)}, {Rational(0), Rational(1)}, TimePoly({Rational(0), Rational(0), Rational(1)}));
    PhaseState out = canonical_transform(gs, PhaseState{1.0, 0.5, 2.0});
    CHECK(out.x == doctest::Approx(3.0));
    CHECK(out.p == doctest::Approx(0.5 - 2.0));
}

TEST_CASE("transformed Hamiltonian") {
    GeneratingSpec id = gs_with({Rational(1)}, {Rational(0), Rational(1)}, TimePoly());
    CHECK(transformed_hamiltonian(id, {0.4, 0.8, 1.0}) == doctest::Approx(0.32));

    // linear-in-momentum frame term appears for the accelerated frame
    GeneratingSpec gs =
        gs_with({Rational(1)}, {Rational(0), Rational(1)}, TimePoly({Rational(0), Rational(0), Rational(1)}));
    double h0 = transformed_hamiltonian(gs, {0.0, 1.0, 1.0});
    double h1 = transformed_hamiltonian(gs, {0.0, 2.0, 1.0});
    // dH'/dp' at fixed x' includes the Bdot p' coupling: Bdot(1) = 1
    CHECK(h1 - h0 > 0.5);

    // value consistency H'(x',p') = H(x,p) + dF/dt along a transformed pair
    Prng rng(3);
    for (int k = 0; k < 10; ++k) {
        GeneratingSpec g2 = gs_with({Rational(1), Rational(3, 10)},
                                    {Rational(0), Rational(1), Rational(1, 5)},
                                    TimePoly({Rational(0), random_rational(rng),
                                              random_rational(rng), random_rational(rng)}),
                                    1.0);
        PhaseState s{rng.uniform() - 0.5, rng.uniform() - 0.5, rng.uniform()};
        PhaseState sp = canonical_transform(g2, s);
        GFunction g = linear_g(g2);
        std::vector<double> z = derivative_slots(g2, s.t);
        TimePolyD a = to_double(g2.frame_a);
        TimePolyD B = eval_B(to_double(g2.spec), a);
        double dFdt = B.derivative().evaluate(s.t) * sp.p;
        std::vector<double> dz = g.ddz(s.x, z);
        for (std::size_t n = 0; n < dz.size(); ++n)
            dFdt += a.nth_derivative(static_cast<unsigned>(n) + 1).evaluate(s.t) * dz[n];
        double lhs = transformed_hamiltonian(g2, sp);
        double rhs = base_hamiltonian(g2, s.p) + dFdt;
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
}

TEST_CASE("other base Hamiltonians plug into the transform") {
    GeneratingSpec gs =
        gs_with({Rational(1)}, {Rational(0), Rational(1)}, TimePoly({Rational(0), Rational(1)}));
    // harmonic base H = p^2/2m + x^2/2
    BaseHamiltonian harmonic = [](double x, double p) { return 0.5 * p * p + 0.5 * x * x; };
    PhaseState s{0.3, 0.4, 0.7};
    PhaseState sp = canonical_transform(gs, s);
    double h_free = transformed_hamiltonian(gs, linear_g(gs), sp);
    double h_osc = transformed_hamiltonian(gs, linear_g(gs), sp, harmonic);
    CHECK(h_osc == doctest::Approx(h_free + 0.5 * s.x * s.x).epsilon(1e-12));
}

TEST_CASE("nonlinear generating term is supported by the transform") {
    GeneratingSpec gs =
        gs_with({Rational(1)}, {Rational(0), Rational(1)}, TimePoly({Rational(0), Rational(1)}));
    // g = x^2 z1 (quadratic in position)
    GFunction g;
    g.value = [](double x, const std::vector<double>& z) { return x * x * z[1]; };
    g.ddx = [](double x, const std::vector<double>& z) { return 2.0 * x * z[1]; };
    g.ddz = [](double x, const std::vector<double>& z) {
        std::vector<double> d(z.size(), 0.0);
        d[1] = x * x;
        return d;
    };
    PhaseState s{0.5, 0.2, 1.0};
    PhaseState sp = canonical_transform(gs, g, s);
    CHECK(sp.p == doctest::Approx(0.2 - 2.0 * 0.5 * 1.0));
    // the transformed Hamiltonian evaluates without needing the integrator
    double h = transformed_hamiltonian(gs, g, sp);
    CHECK(std::isfinite(h));
}

TEST_CASE("free particle stays put in the inertial frame") {
    GeneratingSpec id = gs_with({Rational(1)}, {Rational(0), Rational(1)}, TimePoly());
    Trajectory tr = integrate_hamilton(id, {0.3, 0.0, 0.0}, 1.0, 1e-3);
    for (double x : tr.x) CHECK(x == doctest::Approx(0.3).epsilon(1e-12));
}

TEST_CASE("trajectory acceleration equals the transformed-frame pull") {
    // B = a + (3/10) adot, a = t^2/2: Bddot = 1 for all t
    GeneratingSpec gs = gs_with({Rational(1), Rational(3, 10)}, {Rational(0), Rational(1)},
                                TimePoly({Rational(0), Rational(0), Rational(1)}));
    Trajectory tr = integrate_hamilton(gs, {0.0, 0.25, 0.0}, 1.0, 1e-3);
    for (std::size_t i = 2; i + 2 < tr.x.size(); ++i)
        CHECK(std::abs(tr.accel_est[i] - tr.accel_model[i]) < 1e-6);
    for (double a : tr.accel_model) CHECK(a == doctest::Approx(1.0));
}

TEST_CASE("trajectories are independent of the mass") {
    TimePoly frame({Rational(0), Rational(1, 3), Rational(1, 2), Rational(-1, 4)});
    GeneratingSpec light = gs_with({Rational(1), Rational(3, 10)},
                                   {Rational(0), Rational(1), Rational(1, 5)}, frame, 1.0);
    GeneratingSpec heavy = light;
    heavy.mass = 2.7;
    // matching initial velocity: scale the momentum with the mass
    PhaseState s_light{0.1, 0.25, 0.0};
    double c0 = to_double(eval_C(light.spec, frame)).evaluate(0.0);
    double v0 = (s_light.p + c0) / light.mass;
    PhaseState s_heavy{0.1, heavy.mass * v0 - c0, 0.0};
    Trajectory a = integrate_hamilton(light, s_light, 1.0, 1e-3);
    Trajectory b = integrate_hamilton(heavy, s_heavy, 1.0, 1e-3);
    for (std::size_t i = 0; i < a.x.size(); ++i) CHECK(std::abs(a.x[i] - b.x[i]) < 1e-9);
}

TEST_CASE("integration matches the closed form to integrator accuracy") {
    Prng rng(9);
    for (int k = 0; k < 5; ++k) {
        GeneratingSpec gs = gs_with(
            {Rational(1), random_rational(rng)}, {Rational(0), Rational(1), random_rational(rng)},
            TimePoly({Rational(0), random_rational(rng), random_rational(rng),
                      random_rational(rng)}),
            1.0 + rng.uniform());
        PhaseState s0{rng.uniform(), rng.uniform() - 0.5, 0.0};
        Trajectory tr = integrate_hamilton(gs, s0, 1.0, 1e-3);
        double worst = 0.0;
        for (std::size_t i = 0; i < tr.t.size(); ++i)
            worst = std::max(worst, std::abs(tr.x[i] - closed_form_state(gs, s0, tr.t[i]).x));
        CHECK(worst < 1e-9);
    }
}

TEST_CASE("identity coefficient family recovers the bare frame pull") {
    TimePoly frame({Rational(0), Rational(0), Rational(0), Rational(6)});  // t^3
    GeneratingSpec gs = gs_with({Rational(1)}, {Rational(0), Rational(1)}, frame);
    CHECK(eval_B(gs.spec, frame) == frame);
    Trajectory tr = integrate_hamilton(gs, {0.0, 0.0, 0.0}, 1.0, 1e-3);
    TimePolyD addot = to_double(frame).derivative().derivative();
    for (std::size_t i = 2; i + 2 < tr.x.size(); ++i)
        CHECK(std::abs(tr.accel_est[i] - addot.evaluate(tr.t[i])) < 1e-5);
}

TEST_CASE("step-size rejection on a stiff frame") {
    GeneratingSpec gs = gs_with({Rational(1)}, {Rational(0), Rational(1)},
                                TimePoly::monomial(6, Rational(40)));
    CHECK_THROWS_AS(integrate_hamilton(gs, {0.0, 0.0, 0.0}, 2.0, 0.4), NumericError);
    CHECK_THROWS(integrate_hamilton(gs, {0.0, 0.0, 0.0}, 1.0, -1.0));
}

TEST_CASE("linear generators and their bracket") {
    CocycleSpec s = make_spec({Rational(2), Rational(1)}, {Rational(1), Rational(3)});
    LinearGenerator a0 = generator_A(s, 0);
    CHECK(a0.cx == TimePoly::constant(Rational(1)));
    CHECK(a0.cp == TimePoly::constant(Rational(2)));
    LinearGenerator a1 = generator_A(s, 1);
    CHECK(a1.cx == TimePoly({Rational(3), Rational(1)}));  // gamma1 + gamma0 t
    CHECK(a1.cp == TimePoly({Rational(1), Rational(2)}));  // beta1 + beta0 t

    TimePoly bracket = poisson(a1, a0);
    CHECK(bracket == TimePoly::constant(s.mass()));
    CHECK(poisson(a0, a0).is_zero());

    // canonical family: the order-zero generator is the momentum itself
    CocycleSpec canon = make_spec({Rational(1)}, {Rational(0), Rational(1)});
    LinearGenerator p = generator_A(canon, 0);
    CHECK(p.cx.is_zero());
    CHECK(p.cp == TimePoly::constant(Rational(1)));
}

TEST_CASE("classical bracket equals the quantum commutator scalar") {
    Prng rng(21);
    for (int k = 0; k < 10; ++k) {
        CocycleSpec s;
        s.max_degree = 8;
        for (int i = 0; i < 3; ++i) s.beta.push_back(random_rational(rng));
        for (int i = 0; i < 3; ++i) s.gamma.push_back(random_rational(rng));
        TimePoly classical = poisson(generator_A(s, 1), generator_A(s, 0));
        CanonicalOperator quantum = commutator(boost(s, 1, 0), momentum(s, 0));
        CHECK(classical == TimePoly::constant(s.mass()));
        CHECK(quantum == CanonicalOperator::identity(CPoly::imag(classical)));
    }
}
