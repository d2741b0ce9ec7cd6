#pragma once

#include <optional>
#include <string>

#include "galine/classical.hpp"
#include "galine/qdyn.hpp"

namespace galine {

/// Parsed scenario file. All rationals accept integers or "p/q" strings;
/// unknown keys anywhere are rejected.
struct ScenarioFile {
    CocycleSpec spec;
    Rational w{0};
    TimePoly frame_a;  // 1-D frame translation, Taylor coefficients
    Grid1D grid;
    double horizon = 1.0;
    double dt = 5e-4;
    int sample_every = 20;
    double packet_center = 1.0;
    double packet_sigma = 1.0;
    double classical_mass = 1.0;
    double classical_x0 = 0.0;
    double classical_p0 = 0.0;
    double classical_horizon = 1.0;
    double classical_dt = 1e-3;

    static ScenarioFile parse(const std::string& json_text);
    static ScenarioFile load(const std::string& path);

    FrameScenario frame_scenario() const;
    GeneratingSpec generating_spec() const;
};

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

/// Fixed 17-significant-digit float formatting for byte-stable reports.
std::string format_double(double v);

}  // namespace galine
