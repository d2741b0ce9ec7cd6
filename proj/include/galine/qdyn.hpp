#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "galine/cocycle.hpp"
#include "galine/operator_algebra.hpp"
#include "galine/qrep.hpp"

namespace galine {

struct Grid1D {
    double q_min = -8.0;
    double q_max = 8.0;
    int n_points = 512;

    double spacing() const { return (q_max - q_min) / (n_points - 1); }
    double point(int i) const { return q_min + spacing() * i; }
};

struct WavepacketState {
    Grid1D grid;
    std::vector<std::complex<double>> amp;
    double t0 = 0.0;  // evaluation time for labels and phases

    double norm() const;
};

/// One-dimensional scenario: the frame translation lives on the x axis and
/// the label flow is C(a) of it.
struct FrameScenario {
    CocycleSpec spec;
    Rational w{0};
    Vec3Poly frame_a;  // x component only
    TimePoly q_flow;   // x component of C(frame_a)
    Grid1D grid;
    double horizon = 1.0;
    double dt = 5e-4;
    int sample_every = 20;
    double packet_center = 1.0;
    double packet_sigma = 1.0;
    double norm_drift_tol = 1e-8;

    static FrameScenario make(CocycleSpec spec, Rational w, Vec3Poly frame_a);
};

WavepacketState gaussian_packet(const Grid1D& grid, double center, double sigma,
                                double t0 = 0.0);

double expectation_p(const CocycleSpec& spec, const WavepacketState& s);
double expectation_x(const CocycleSpec& spec, const WavepacketState& s);
/// arg <a|b>, zero when the states coincide.
double relative_phase(const WavepacketState& a, const WavepacketState& b);

/// Which phase function backs the numeric transform: the per-element formula
/// (matches the printed generator formulas) or the composition-closed section
/// phase (satisfies the group law pointwise).
enum class PhaseConvention { PerElement, Closed };

/// Numeric unitary transform on the sampled wavefunction:
///   (U psi)(u) = exp(-i phase(g^{-1}, q_u)|_{t=phase_time}) psi(u + shift)
/// with labels q_u(s) = u + F(s) - F(t0) attached at the state's evaluation
/// time, off-grid arguments cubically interpolated. `flow_override` replaces
/// the scenario flow F (used when chaining transformed label families).
WavepacketState apply_U(const FrameScenario& scn, const GroupElement& g,
                        const WavepacketState& psi,
                        PhaseConvention conv = PhaseConvention::PerElement,
                        std::optional<double> phase_time = std::nullopt,
                        const TimePoly* flow_override = nullptr);

/// Applies a symbolic operator on the grid: coefficients evaluated at the
/// state's t0, derivative symbols realized with 4th-order stencils.
std::vector<std::complex<double>> apply_operator(const CanonicalOperator& op,
                                                 const WavepacketState& s);

enum class GeneratorKind { Hamiltonian, Momentum, Boost1, BoostN };

struct GeneratorCheck {
    double defect = 0.0;       // max pointwise |FD - symbolic| at eps
    double defect_half = 0.0;  // same at eps/2
    double ratio() const { return defect_half > 0 ? defect / defect_half : 0.0; }
    double eps = 0.0;
};

/// Central finite difference of the one-parameter transform family against
/// the symbolic generator; the defect must shrink O(eps^2).
GeneratorCheck generator_check(const FrameScenario& scn, GeneratorKind kind,
                               const WavepacketState& psi, double eps, int boost_order = 1);

struct EvolveSeries {
    std::vector<double> b;
    std::vector<double> norm;
    std::vector<double> x;       // <X>
    std::vector<double> p;       // <P>
    std::vector<double> phase;   // unwrapped arg<psi0|psi(b)>
    std::vector<WavepacketState> states;  // snapshots at the sample points
    WavepacketState final_state;
    int dt_halvings = 0;
};

/// Crank-Nicolson integration of i dpsi/db = H(b) psi with the dynamical
/// Hamiltonian of the scenario; unconditionally norm-preserving for the
/// Hermitian discretization used here. Halves dt and restarts if the norm
/// drifts beyond the scenario tolerance.
EvolveSeries evolve(const FrameScenario& scn, const WavepacketState& psi0);

/// Second-difference estimate of d^2<X>/db^2 with one sample trimmed at each
/// end; needs at least five samples.
std::vector<double> accel_of_expectation(const std::vector<double>& x, double db);

}  // namespace galine
