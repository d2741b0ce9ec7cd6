#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "galine/scenario.hpp"

namespace galine {

struct SuiteOptions {
    std::uint64_t seed = 12345;
    bool negative_control = false;
    double tol = 1e-8;  // numeric comparisons only; algebraic checks are exact
};

struct SuiteReport {
    std::string check;
    std::size_t samples = 0;
    std::vector<std::string> violations;  // serialized witnesses
    std::uint64_t seed = 0;
    bool pass = false;
    std::string details;

    std::string to_json() const;
};

SuiteReport suite_group_axioms(const ScenarioFile& scn, const SuiteOptions& opt);
SuiteReport suite_dd_zero(const ScenarioFile& scn, const SuiteOptions& opt);
SuiteReport suite_cocycle_condition(const ScenarioFile& scn, const SuiteOptions& opt);
SuiteReport suite_bc_constraints(const ScenarioFile& scn, const SuiteOptions& opt);
SuiteReport suite_galilei_reduction(const ScenarioFile& scn, const SuiteOptions& opt);
SuiteReport suite_nontriviality(const ScenarioFile& scn, const SuiteOptions& opt);
SuiteReport suite_composition_defect(const ScenarioFile& scn, const SuiteOptions& opt);
SuiteReport suite_commutators(const ScenarioFile& scn, const SuiteOptions& opt);
/// Numeric group-law check for the sampled transforms.
SuiteReport suite_numeric_composition(const ScenarioFile& scn, const SuiteOptions& opt);

const std::vector<std::string>& all_suite_names();
SuiteReport run_suite(const std::string& name, const ScenarioFile& scn,
                      const SuiteOptions& opt);

struct EvolveOutputs {
    EvolveSeries series;
    std::vector<double> accel;
    double mean_accel = 0.0;
    double max_accel_dev = 0.0;  // against the scenario's prescribed qdotdot at mid-horizon
    std::string csv;             // b, re_norm, <X>, <P>, accel, global_phase
};

EvolveOutputs run_evolution(const FrameScenario& scn);
std::string evolve_summary_json(const FrameScenario& scn, const EvolveOutputs& out);

struct ClassicalOutputs {
    Trajectory trajectory;
    double max_closed_form_dev = 0.0;
    double max_accel_residual = 0.0;  // |second-difference accel - B''|
    std::string csv;                  // t, x', p', accel_est, B''
};

ClassicalOutputs run_classical(const GeneratingSpec& gs, const PhaseState& s0, double horizon,
                               double dt);
std::string classical_summary_json(const GeneratingSpec& gs, const ClassicalOutputs& out);

struct EpPairSummary {
    double max_accel_diff = 0.0;   // pointwise acceleration difference
    double max_x_diff = 0.0;       // pointwise <X> trajectory difference
    double max_phase_diff = 0.0;   // |arg<psi_A(b)|psi_B(b)>|
    double final_phase_diff = 0.0;
    EvolveOutputs run_a, run_b;
};

/// Runs the two scenarios from the same initial packet and compares the
/// expectation trajectories and the mutual phase.
EpPairSummary run_ep_pair(const FrameScenario& a, const FrameScenario& b);
std::string ep_pair_summary_json(const EpPairSummary& s);

}  // namespace galine
