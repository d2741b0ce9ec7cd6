#pragma once

#include <functional>
#include <vector>

#include "galine/cocycle.hpp"

namespace galine {

struct PhaseState {
    double x = 0.0;
    double p = 0.0;
    double t = 0.0;
};

/// Mixed-variable generating data for the canonical transformation family
/// F(x, p', t) = (x + B(a)) p' + g(x; a, adot, ...). The linear selector
/// g = x . f with f = C makes the brackets coordinate-free and is the only
/// family integrated numerically.
struct GeneratingSpec {
    CocycleSpec spec;   // beta -> B, gamma -> f = C
    TimePoly frame_a;   // 1-D frame translation
    double mass = 1.0;
};

/// Arbitrary smooth g(x, z) with analytic partials; z_n slots receive the
/// derivatives a^(n)(t). Supported by the transform and the transformed
/// Hamiltonian, not by the integrator.
struct GFunction {
    std::function<double(double, const std::vector<double>&)> value;
    std::function<double(double, const std::vector<double>&)> ddx;
    std::function<std::vector<double>(double, const std::vector<double>&)> ddz;
};

GFunction linear_g(const GeneratingSpec& gs);

/// z_n = a^(n)(t) up to the spec's degree budget.
std::vector<double> derivative_slots(const GeneratingSpec& gs, double t);

PhaseState canonical_transform(const GeneratingSpec& gs, const PhaseState& s);
PhaseState canonical_transform(const GeneratingSpec& gs, const GFunction& g,
                               const PhaseState& s);

/// Inertial-frame Hamiltonian H(x, p); the default is the free particle.
using BaseHamiltonian = std::function<double(double, double)>;

/// Transformed Hamiltonian evaluated at a primed state.
double transformed_hamiltonian(const GeneratingSpec& gs, const PhaseState& sp);
double transformed_hamiltonian(const GeneratingSpec& gs, const GFunction& g,
                               const PhaseState& sp);
double transformed_hamiltonian(const GeneratingSpec& gs, const GFunction& g,
                               const PhaseState& sp, const BaseHamiltonian& base);
/// Free-particle value p^2/2m at the spec's mass.
double base_hamiltonian(const GeneratingSpec& gs, double p);

struct Trajectory {
    std::vector<double> t, x, p;
    std::vector<double> accel_est;    // second differences of x, trimmed
    std::vector<double> accel_model;  // B''(a)(t) on the same samples
};

/// RK4 on the primed equations of motion of the linear-g family:
///   x' . = (p' + C(a))/m + B'(a),   p' . = -C'(a).
/// Rejects the step size when a half-step rerun disagrees beyond 1e-8.
Trajectory integrate_hamilton(const GeneratingSpec& gs, const PhaseState& s0, double horizon,
                              double dt);

/// Exact solution of the same equations (the flow is affine).
PhaseState closed_form_state(const GeneratingSpec& gs, const PhaseState& s0, double t);

/// Generator of the n-th Taylor-slot transformation: A = cx(t) x + cp(t) p.
struct LinearGenerator {
    TimePoly cx, cp;
};

LinearGenerator generator_A(const CocycleSpec& spec, int n);

/// {A, B} = dA/dx dB/dp - dA/dp dB/dx; a constant polynomial for linear
/// generators.
TimePoly poisson(const LinearGenerator& A, const LinearGenerator& B);

}  // namespace galine
