#include "galine/qdyn.hpp"

#include <algorithm>
#include <cmath>

#include "galine/errors.hpp"

namespace galine {

using cplx = std::complex<double>;

double WavepacketState::norm() const {
    double s = 0.0;
    for (const auto& a : amp) s += std::norm(a);
    return std::sqrt(s * grid.spacing());
}

FrameScenario FrameScenario::make(CocycleSpec spec, Rational w, Vec3Poly frame_a) {
    FrameScenario s;
    s.q_flow = eval_C(spec, frame_a.x);
    s.spec = std::move(spec);
    s.w = std::move(w);
    s.frame_a = std::move(frame_a);
    return s;
}

WavepacketState gaussian_packet(const Grid1D& grid, double center, double sigma, double t0) {
    WavepacketState s;
    s.grid = grid;
    s.t0 = t0;
    s.amp.resize(static_cast<std::size_t>(grid.n_points));
    const double norm_c = std::pow(2.0 * M_PI * sigma * sigma, -0.25);
    for (int i = 0; i < grid.n_points; ++i) {
        double u = grid.point(i);
        s.amp[static_cast<std::size_t>(i)] =
            norm_c * std::exp(-(u - center) * (u - center) / (4.0 * sigma * sigma));
    }
    return s;
}

namespace {

// 4th-order first and second derivative stencils on the uniform grid;
// out-of-range samples are treated as zero (packet support stays interior).
std::vector<cplx> fd_derivative(const std::vector<cplx>& f, double h, int order) {
    const int n = static_cast<int>(f.size());
    std::vector<cplx> d(f.size());
    auto at = [&](int i) { return (i < 0 || i >= n) ? cplx(0.0) : f[static_cast<std::size_t>(i)]; };
    for (int i = 0; i < n; ++i) {
        if (order == 1) {
            d[static_cast<std::size_t>(i)] =
                (at(i - 2) - 8.0 * at(i - 1) + 8.0 * at(i + 1) - at(i + 2)) / (12.0 * h);
        } else {
            d[static_cast<std::size_t>(i)] = (-at(i - 2) + 16.0 * at(i - 1) - 30.0 * at(i) +
                                              16.0 * at(i + 1) - at(i + 2)) /
                                             (12.0 * h * h);
        }
    }
    return d;
}

}  // namespace

double expectation_p(const CocycleSpec& spec, const WavepacketState& s) {
    // P = beta0 q + i gamma0 d/dq
    const double b0 = spec.beta_at(0).to_double();
    const double g0 = spec.gamma_at(0).to_double();
    const double h = s.grid.spacing();
    double acc = 0.0;
    if (g0 == 0.0) {
        for (int i = 0; i < s.grid.n_points; ++i)
            acc += b0 * s.grid.point(i) * std::norm(s.amp[static_cast<std::size_t>(i)]);
        return acc * h;
    }
    auto d = fd_derivative(s.amp, h, 1);
    for (int i = 0; i < s.grid.n_points; ++i) {
        std::size_t k = static_cast<std::size_t>(i);
        acc += std::real(std::conj(s.amp[k]) *
                         (b0 * s.grid.point(i) * s.amp[k] + cplx(0, g0) * d[k]));
    }
    return acc * h;
}

double expectation_x(const CocycleSpec& spec, const WavepacketState& s) {
    const double m = spec.mass().to_double();
    if (m == 0.0) throw Error("expectation_x: massless spec");
    auto d = fd_derivative(s.amp, s.grid.spacing(), 1);
    double acc = 0.0;
    for (std::size_t k = 0; k < s.amp.size(); ++k)
        acc += std::real(std::conj(s.amp[k]) * cplx(0, 1.0 / m) * d[k]);
    return acc * s.grid.spacing();
}

double relative_phase(const WavepacketState& a, const WavepacketState& b) {
    cplx overlap = 0.0;
    for (std::size_t k = 0; k < a.amp.size(); ++k) overlap += std::conj(a.amp[k]) * b.amp[k];
    return std::arg(overlap);
}

namespace {

// 4-point Lagrange interpolation; the stencil window slides one-sided at the
// grid edges, targets beyond the grid read as zero.
cplx cubic_interp(const std::vector<cplx>& f, const Grid1D& g, double x) {
    const int n = static_cast<int>(f.size());
    const double s = (x - g.q_min) / g.spacing();
    if (s < -0.5 || s > n - 0.5) return 0.0;
    int k0 = static_cast<int>(std::floor(s)) - 1;
    k0 = std::max(0, std::min(k0, n - 4));
    cplx acc = 0.0;
    for (int a = 0; a < 4; ++a) {
        double w = 1.0;
        for (int b = 0; b < 4; ++b) {
            if (a == b) continue;
            w *= (s - (k0 + b)) / static_cast<double>(a - b);
        }
        acc += w * f[static_cast<std::size_t>(k0 + a)];
    }
    return acc;
}

// The phase is exactly quadratic in the grid value; three exact evaluations
// pin the coefficients.
struct QuadPhase {
    double c0, c1, c2;
    double operator()(double u) const { return c0 + u * (c1 + u * c2); }
};

template <class F>
QuadPhase fit_quadratic(F&& value_at) {
    double vm = value_at(-1.0), v0 = value_at(0.0), vp = value_at(1.0);
    return {v0, 0.5 * (vp - vm), 0.5 * (vp + vm) - v0};
}

}  // namespace

WavepacketState apply_U(const FrameScenario& scn, const GroupElement& g,
                        const WavepacketState& psi, PhaseConvention conv,
                        std::optional<double> phase_time, const TimePoly* flow_override) {
    CocycleSpecD spec = to_double(scn.spec);
    const double w = scn.w.to_double();
    GroupElementD gd = to_double(g);
    GroupElementD ginv = inverse(gd);
    TimePolyD flow = to_double(flow_override ? *flow_override : scn.q_flow);
    const double t0 = psi.t0;
    const double tphase = phase_time.value_or(t0);

    // argument shift: (T_g q_u)(t0) - u, the same for every grid point
    const double ca_t0 = eval_C(spec, gd.a.x).evaluate(t0);
    const double shift = flow.evaluate(t0 + gd.b) - flow.evaluate(t0) - ca_t0;

    auto phase_at = [&](double u) {
        // label q_u(s) = u + F(s) - F(t0)
        std::vector<double> c(static_cast<std::size_t>(std::max(flow.degree(), 0)) + 1, 0.0);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = flow.coeff(i);
        c[0] += u - flow.evaluate(t0);
        Vec3PolyD label = Vec3PolyD::axis_x(TimePolyD(std::move(c)));
        TimePolyD ph = (conv == PhaseConvention::PerElement)
                           ? xi(spec, w, ginv, label)
                           : section_phase(spec, w, ginv, label);
        return ph.evaluate(tphase);
    };
    QuadPhase quad = fit_quadratic(phase_at);

    WavepacketState out;
    out.grid = psi.grid;
    out.t0 = psi.t0;
    out.amp.resize(psi.amp.size());
    for (int i = 0; i < psi.grid.n_points; ++i) {
        const double u = psi.grid.point(i);
        cplx v = cubic_interp(psi.amp, psi.grid, u + shift);
        out.amp[static_cast<std::size_t>(i)] = std::polar(1.0, -quad(u)) * v;
    }
    const double n_in = psi.norm(), n_out = out.norm();
    if (n_in > 0 && std::abs(n_out - n_in) > 1e-6 * n_in)
        throw NumericError("apply_U: transformed packet escaped the grid support");
    return out;
}

std::vector<cplx> apply_operator(const CanonicalOperator& op, const WavepacketState& s) {
    std::vector<cplx> out(s.amp.size(), cplx(0.0));
    for (const auto& [mono, coeff] : op.terms()) {
        if (mono.qe[1] || mono.qe[2] || mono.de[1] || mono.de[2])
            throw Error("apply_operator: operator has components off the x axis");
        if (mono.de[0] > 2) throw Error("apply_operator: derivative order beyond stencils");
        cplx c = coeff.evaluate(s.t0);
        std::vector<cplx> work = s.amp;
        if (mono.de[0] > 0) work = fd_derivative(work, s.grid.spacing(), mono.de[0]);
        for (int i = 0; i < s.grid.n_points; ++i) {
            double upow = 1.0;
            for (int k = 0; k < mono.qe[0]; ++k) upow *= s.grid.point(i);
            out[static_cast<std::size_t>(i)] += c * upow * work[static_cast<std::size_t>(i)];
        }
    }
    return out;
}

namespace {

GroupElement probe_element(GeneratorKind kind, const Rational& eps, int order, int budget) {
    switch (kind) {
        case GeneratorKind::Hamiltonian:
            return GroupElement(Vec3Poly{}, eps, budget);
        case GeneratorKind::Momentum:
            return GroupElement(Vec3Poly::axis_x(TimePoly::constant(eps)), Rational(0), budget);
        case GeneratorKind::Boost1:
            return GroupElement(Vec3Poly::axis_x(TimePoly::monomial(1, eps)), Rational(0),
                                budget);
        case GeneratorKind::BoostN:
            return GroupElement(
                Vec3Poly::axis_x(TimePoly::monomial(static_cast<unsigned>(order),
                                                    eps / factorial(static_cast<unsigned>(order)))),
                Rational(0), budget);
    }
    throw Error("probe_element: bad kind");
}

double fd_defect(const FrameScenario& scn, GeneratorKind kind, const WavepacketState& psi,
                 double eps, int order) {
    Rational reps{mpq_class(eps)};
    GroupElement gp = probe_element(kind, reps, order, scn.spec.max_degree);
    GroupElement gm = probe_element(kind, -reps, order, scn.spec.max_degree);
    WavepacketState up = apply_U(scn, gp, psi);
    WavepacketState um = apply_U(scn, gm, psi);

    CanonicalOperator sym;
    switch (kind) {
        case GeneratorKind::Hamiltonian:
            sym = hamiltonian_generator(scn.spec, scn.w, scn.q_flow);
            break;
        case GeneratorKind::Momentum:
            sym = momentum(scn.spec, 0);
            break;
        case GeneratorKind::Boost1:
            sym = boost(scn.spec, 1, 0);
            break;
        case GeneratorKind::BoostN:
            sym = boost(scn.spec, order, 0);
            break;
    }
    std::vector<cplx> symv = apply_operator(sym, psi);

    // H = i dU/db, translations/boosts use -i d/deps
    const cplx pref = (kind == GeneratorKind::Hamiltonian) ? cplx(0, 1) : cplx(0, -1);
    double worst = 0.0;
    const int n = psi.grid.n_points;
    for (int i = 4; i < n - 4; ++i) {
        std::size_t k = static_cast<std::size_t>(i);
        cplx fd = pref * (up.amp[k] - um.amp[k]) / (2.0 * eps);
        worst = std::max(worst, std::abs(fd - symv[k]));
    }
    return worst;
}

}  // namespace

GeneratorCheck generator_check(const FrameScenario& scn, GeneratorKind kind,
                               const WavepacketState& psi, double eps, int boost_order) {
    GeneratorCheck r;
    r.eps = eps;
    r.defect = fd_defect(scn, kind, psi, eps, boost_order);
    r.defect_half = fd_defect(scn, kind, psi, eps / 2.0, boost_order);
    return r;
}

namespace {

struct EvolveCoefficients {
    CPoly diag0, diag1, diag2;  // identity, q, q^2 multipliers
    CPoly dcoef;                // coefficient of d/du
};

EvolveCoefficients split_evolution_terms(const CanonicalOperator& H) {
    EvolveCoefficients c;
    for (const auto& [mono, coeff] : H.terms()) {
        if (mono.qe[1] || mono.qe[2] || mono.de[1] || mono.de[2])
            throw Error("evolve: Hamiltonian has components off the x axis");
        if (mono.de[0] == 0) {
            if (mono.qe[0] == 0) c.diag0 = c.diag0 + coeff;
            else if (mono.qe[0] == 1) c.diag1 = c.diag1 + coeff;
            else if (mono.qe[0] == 2) c.diag2 = c.diag2 + coeff;
            else throw Error("evolve: multiplication order beyond quadratic");
        } else if (mono.de[0] == 1 && mono.qe[0] == 0) {
            c.dcoef = c.dcoef + coeff;
        } else {
            throw Error("evolve: unsupported derivative structure");
        }
    }
    return c;
}

// Complex banded solve, bandwidth 2, no pivoting (rows are diagonally
// dominant for the step sizes used here).
void penta_solve(std::vector<std::array<cplx, 5>>& A, std::vector<cplx>& rhs) {
    const int n = static_cast<int>(rhs.size());
    for (int i = 0; i < n; ++i) {
        for (int r = i + 1; r <= std::min(i + 2, n - 1); ++r) {
            int off = i - r + 2;  // column i in row r
            cplx f = A[static_cast<std::size_t>(r)][static_cast<std::size_t>(off)] /
                     A[static_cast<std::size_t>(i)][2];
            if (f == cplx(0.0)) continue;
            for (int c = 0; c <= 2; ++c) {
                int col = i + c;  // absolute column
                if (col > std::min(r + 2, n - 1)) break;
                A[static_cast<std::size_t>(r)][static_cast<std::size_t>(col - r + 2)] -=
                    f * A[static_cast<std::size_t>(i)][static_cast<std::size_t>(2 + c)];
            }
            rhs[static_cast<std::size_t>(r)] -= f * rhs[static_cast<std::size_t>(i)];
        }
    }
    for (int i = n - 1; i >= 0; --i) {
        cplx acc = rhs[static_cast<std::size_t>(i)];
        for (int c = 1; c <= 2; ++c) {
            int col = i + c;
            if (col >= n) break;
            acc -= A[static_cast<std::size_t>(i)][static_cast<std::size_t>(2 + c)] *
                   rhs[static_cast<std::size_t>(col)];
        }
        rhs[static_cast<std::size_t>(i)] = acc / A[static_cast<std::size_t>(i)][2];
    }
}

double unwrap(double prev, double raw) {
    const double twopi = 2.0 * M_PI;
    return raw + twopi * std::round((prev - raw) / twopi);
}

struct NormDriftError : NumericError {
    using NumericError::NumericError;
};

EvolveSeries evolve_once(const FrameScenario& scn, const WavepacketState& psi0, double dt) {
    const CanonicalOperator H = hamiltonian_evolution(scn.spec, scn.w, scn.q_flow);
    const EvolveCoefficients coef = split_evolution_terms(H);
    const int n = scn.grid.n_points;
    const double h = scn.grid.spacing();
    const long steps = std::lround(std::ceil(scn.horizon / dt - 1e-12));

    WavepacketState state = psi0;
    state.grid = scn.grid;
    const double norm0 = state.norm();

    EvolveSeries out;
    auto sample = [&](double b) {
        out.b.push_back(b);
        out.norm.push_back(state.norm());
        out.x.push_back(expectation_x(scn.spec, state));
        out.p.push_back(expectation_p(scn.spec, state));
        double raw = relative_phase(psi0, state);
        out.phase.push_back(out.phase.empty() ? raw : unwrap(out.phase.back(), raw));
        out.states.push_back(state);
    };
    sample(0.0);

    // first-derivative stencil weights (offsets -2..2)
    const double s1[5] = {1.0 / (12.0 * h), -8.0 / (12.0 * h), 0.0, 8.0 / (12.0 * h),
                          -1.0 / (12.0 * h)};

    std::vector<std::array<cplx, 5>> A(static_cast<std::size_t>(n));
    std::vector<cplx> rhs(static_cast<std::size_t>(n));
    for (long k = 0; k < steps; ++k) {
        const double t_mid = psi0.t0 + (static_cast<double>(k) + 0.5) * dt;
        const cplx d0 = coef.diag0.evaluate(t_mid);
        const cplx d1 = coef.diag1.evaluate(t_mid);
        const cplx d2 = coef.diag2.evaluate(t_mid);
        const cplx dc = coef.dcoef.evaluate(t_mid);
        const cplx half_idt = cplx(0, 0.5 * dt);

        auto apply_H = [&](const std::vector<cplx>& f, int i) {
            const double u = scn.grid.point(i);
            cplx acc = (d0 + u * (d1 + u * d2)) * f[static_cast<std::size_t>(i)];
            for (int o = -2; o <= 2; ++o) {
                int j = i + o;
                if (j < 0 || j >= n || o == 0) continue;
                acc += dc * s1[o + 2] * f[static_cast<std::size_t>(j)];
            }
            return acc;
        };
        for (int i = 0; i < n; ++i) {
            rhs[static_cast<std::size_t>(i)] =
                state.amp[static_cast<std::size_t>(i)] - half_idt * apply_H(state.amp, i);
            auto& row = A[static_cast<std::size_t>(i)];
            const double u = scn.grid.point(i);
            for (int o = -2; o <= 2; ++o) {
                int j = i + o;
                cplx v = 0.0;
                if (j >= 0 && j < n) {
                    if (o == 0) v = cplx(1.0) + half_idt * (d0 + u * (d1 + u * d2));
                    else v = half_idt * dc * s1[o + 2];
                }
                row[static_cast<std::size_t>(o + 2)] = v;
            }
        }
        penta_solve(A, rhs);
        state.amp = rhs;
        state.t0 = psi0.t0 + static_cast<double>(k + 1) * dt;

        if ((k + 1) % scn.sample_every == 0 || k + 1 == steps)
            sample(static_cast<double>(k + 1) * dt);

        double edge = 0.0;
        for (int i = 0; i < 5; ++i)
            edge += std::norm(state.amp[static_cast<std::size_t>(i)]) +
                    std::norm(state.amp[static_cast<std::size_t>(n - 1 - i)]);
        if (edge * h > 1e-7)
            throw NumericError("evolve: packet support reached the grid boundary");
    }
    if (std::abs(state.norm() - norm0) > scn.norm_drift_tol * norm0)
        throw NormDriftError("evolve: norm drift beyond tolerance");
    out.final_state = state;
    return out;
}

}  // namespace

EvolveSeries evolve(const FrameScenario& scn, const WavepacketState& psi0) {
    double dt = scn.dt;
    for (int attempt = 0; attempt < 7; ++attempt) {
        try {
            EvolveSeries s = evolve_once(scn, psi0, dt);
            s.dt_halvings = attempt;
            return s;
        } catch (const NormDriftError&) {
            dt *= 0.5;
        }
    }
    throw NumericError("evolve: norm drift persists after dt halving");
}

std::vector<double> accel_of_expectation(const std::vector<double>& x, double db) {
    if (x.size() < 5) throw Error("accel_of_expectation: need at least five samples");
    std::vector<double> acc;
    acc.reserve(x.size() - 4);
    for (std::size_t i = 2; i + 2 < x.size(); ++i)
        acc.push_back((x[i + 1] - 2.0 * x[i] + x[i - 1]) / (db * db));
    return acc;
}

}  // namespace galine
