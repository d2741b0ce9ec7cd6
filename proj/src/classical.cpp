#include "galine/classical.hpp"

#include <cmath>

#include "galine/errors.hpp"

namespace galine {

namespace {

struct FrameEval {
    TimePolyD B, Bdot, Bddot, C, Cdot;
};

FrameEval frame_eval(const GeneratingSpec& gs) {
    CocycleSpecD spec = to_double(gs.spec);
    TimePolyD a = to_double(gs.frame_a);
    FrameEval f;
    f.B = eval_B(spec, a);
    f.Bdot = f.B.derivative();
    f.Bddot = f.Bdot.derivative();
    f.C = eval_C(spec, a);
    f.Cdot = f.C.derivative();
    return f;
}

}  // namespace

std::vector<double> derivative_slots(const GeneratingSpec& gs, double t) {
    TimePolyD a = to_double(gs.frame_a);
    std::vector<double> z;
    for (int n = 0; n <= gs.spec.max_degree; ++n)
        z.push_back(a.nth_derivative(static_cast<unsigned>(n)).evaluate(t));
    return z;
}

GFunction linear_g(const GeneratingSpec& gs) {
    std::vector<double> gamma;
    for (const auto& gn : gs.spec.gamma) gamma.push_back(gn.to_double());
    GFunction g;
    g.value = [gamma](double x, const std::vector<double>& z) {
        double f = 0.0;
        for (std::size_t n = 0; n < gamma.size() && n < z.size(); ++n) f += gamma[n] * z[n];
        return x * f;
    };
    g.ddx = [gamma](double, const std::vector<double>& z) {
        double f = 0.0;
        for (std::size_t n = 0; n < gamma.size() && n < z.size(); ++n) f += gamma[n] * z[n];
        return f;
    };
    g.ddz = [gamma](double x, const std::vector<double>& z) {
        std::vector<double> d(z.size(), 0.0);
        for (std::size_t n = 0; n < gamma.size() && n < z.size(); ++n) d[n] = gamma[n] * x;
        return d;
    };
    return g;
}

PhaseState canonical_transform(const GeneratingSpec& gs, const GFunction& g,
                               const PhaseState& s) {
    FrameEval f = frame_eval(gs);
    std::vector<double> z = derivative_slots(gs, s.t);
    return {s.x + f.B.evaluate(s.t), s.p - g.ddx(s.x, z), s.t};
}

PhaseState canonical_transform(const GeneratingSpec& gs, const PhaseState& s) {
    return canonical_transform(gs, linear_g(gs), s);
}

double base_hamiltonian(const GeneratingSpec& gs, double p) { return p * p / (2.0 * gs.mass); }

double transformed_hamiltonian(const GeneratingSpec& gs, const GFunction& g,
                               const PhaseState& sp, const BaseHamiltonian& base) {
    FrameEval f = frame_eval(gs);
    std::vector<double> z = derivative_slots(gs, sp.t);
    const double x = sp.x - f.B.evaluate(sp.t);
    const double p = sp.p + g.ddx(x, z);
    double h = base(x, p) + f.Bdot.evaluate(sp.t) * sp.p;
    std::vector<double> dz = g.ddz(x, z);
    TimePolyD a = to_double(gs.frame_a);
    for (std::size_t n = 0; n < dz.size(); ++n)
        h += a.nth_derivative(static_cast<unsigned>(n) + 1).evaluate(sp.t) * dz[n];
    return h;
}

double transformed_hamiltonian(const GeneratingSpec& gs, const GFunction& g,
                               const PhaseState& sp) {
    return transformed_hamiltonian(gs, g, sp,
                                   [&gs](double, double p) { return base_hamiltonian(gs, p); });
}

double transformed_hamiltonian(const GeneratingSpec& gs, const PhaseState& sp) {
    return transformed_hamiltonian(gs, linear_g(gs), sp);
}

namespace {

Trajectory run_rk4(const GeneratingSpec& gs, const PhaseState& s0, double horizon, double dt) {
    FrameEval f = frame_eval(gs);
    const double m = gs.mass;
    auto xdot = [&](double t, double p) {
        return (p + f.C.evaluate(t)) / m + f.Bdot.evaluate(t);
    };
    auto pdot = [&](double t) { return -f.Cdot.evaluate(t); };

    const long steps = std::lround(std::ceil(horizon / dt - 1e-12));
    Trajectory tr;
    double x = s0.x, p = s0.p, t = s0.t;
    tr.t.push_back(t);
    tr.x.push_back(x);
    tr.p.push_back(p);
    for (long k = 0; k < steps; ++k) {
        const double k1x = xdot(t, p), k1p = pdot(t);
        const double k2x = xdot(t + dt / 2, p + dt / 2 * k1p), k2p = pdot(t + dt / 2);
        const double k3x = xdot(t + dt / 2, p + dt / 2 * k2p), k3p = pdot(t + dt / 2);
        const double k4x = xdot(t + dt, p + dt * k3p), k4p = pdot(t + dt);
        x += dt / 6 * (k1x + 2 * k2x + 2 * k3x + k4x);
        p += dt / 6 * (k1p + 2 * k2p + 2 * k3p + k4p);
        t = s0.t + static_cast<double>(k + 1) * dt;
        tr.t.push_back(t);
        tr.x.push_back(x);
        tr.p.push_back(p);
    }
    tr.accel_est.assign(tr.x.size(), 0.0);
    tr.accel_model.assign(tr.x.size(), 0.0);
    for (std::size_t i = 0; i < tr.t.size(); ++i)
        tr.accel_model[i] = f.Bddot.evaluate(tr.t[i]);
    for (std::size_t i = 1; i + 1 < tr.x.size(); ++i)
        tr.accel_est[i] = (tr.x[i + 1] - 2.0 * tr.x[i] + tr.x[i - 1]) / (dt * dt);
    if (tr.x.size() >= 3) {
        tr.accel_est.front() = tr.accel_est[1];
        tr.accel_est.back() = tr.accel_est[tr.accel_est.size() - 2];
    }
    return tr;
}

}  // namespace

Trajectory integrate_hamilton(const GeneratingSpec& gs, const PhaseState& s0, double horizon,
                              double dt) {
    if (dt <= 0) throw Error("integrate_hamilton: dt must be positive");
    Trajectory full = run_rk4(gs, s0, horizon, dt);
    Trajectory half = run_rk4(gs, s0, horizon, dt / 2);
    if (std::abs(full.x.back() - half.x.back()) > 1e-8 ||
        std::abs(full.p.back() - half.p.back()) > 1e-8)
        throw NumericError("integrate_hamilton: step size rejected, halved run disagrees");
    return full;
}

PhaseState closed_form_state(const GeneratingSpec& gs, const PhaseState& s0, double t) {
    FrameEval f = frame_eval(gs);
    const double c0 = f.C.evaluate(s0.t);
    const double v = (s0.p + c0) / gs.mass;
    return {s0.x + v * (t - s0.t) + f.B.evaluate(t) - f.B.evaluate(s0.t),
            s0.p - (f.C.evaluate(t) - c0), t};
}

LinearGenerator generator_A(const CocycleSpec& spec, int n) {
    if (n < 0) throw Error("generator_A: order must be nonnegative");
    LinearGenerator gen;
    for (int k = 0; k <= n; ++k) {
        unsigned pw = static_cast<unsigned>(n - k);
        Rational inv_f = Rational(1) / factorial(pw);
        gen.cx = gen.cx +
                 TimePoly::monomial(pw, inv_f * spec.gamma_at(static_cast<std::size_t>(k)));
        gen.cp = gen.cp +
                 TimePoly::monomial(pw, inv_f * spec.beta_at(static_cast<std::size_t>(k)));
    }
    return gen;
}

TimePoly poisson(const LinearGenerator& A, const LinearGenerator& B) {
    return A.cx * B.cp - A.cp * B.cx;
}

}  // namespace galine
