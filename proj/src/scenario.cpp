#include "galine/scenario.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "galine/errors.hpp"

namespace galine {

using nlohmann::json;

namespace {

void reject_unknown(const json& j, std::initializer_list<const char*> known,
                    const std::string& where) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* k : known)
            if (it.key() == k) ok = true;
        if (!ok) throw ConfigError("scenario: unknown key '" + it.key() + "' in " + where);
    }
}

Rational rational_from_json(const json& v, const std::string& where) {
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (v.is_number_float()) {
        // go through the shortest decimal form so 0.3 means 3/10
        std::ostringstream os;
        os << v;
        return Rational::parse(os.str());
    }
    throw ConfigError("scenario: expected rational (int or \"p/q\") in " + where);
}

std::vector<Rational> rational_list(const json& v, const std::string& where) {
    if (!v.is_array()) throw ConfigError("scenario: expected list in " + where);
    std::vector<Rational> out;
    for (const auto& e : v) out.push_back(rational_from_json(e, where));
    return out;
}

double number(const json& j, const char* key, double fallback) {
    return j.contains(key) ? j.at(key).get<double>() : fallback;
}

}  // namespace

ScenarioFile ScenarioFile::parse(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw ConfigError(std::string("scenario: malformed JSON: ") + e.what());
    }
    reject_unknown(j, {"beta", "gamma", "w", "N", "frame", "grid", "evolution", "packet",
                       "classical"},
                   "top level");
    ScenarioFile s;
    if (!j.contains("beta") || !j.contains("gamma"))
        throw ConfigError("scenario: beta and gamma are required");
    s.spec.beta = rational_list(j["beta"], "beta");
    s.spec.gamma = rational_list(j["gamma"], "gamma");
    if (j.contains("w")) s.w = rational_from_json(j["w"], "w");
    if (j.contains("N")) s.spec.max_degree = j["N"].get<int>();
    if (s.spec.max_degree < 1 || s.spec.max_degree > 32)
        throw ConfigError("scenario: N out of range");
    if (static_cast<int>(s.spec.beta.size()) > s.spec.max_degree + 1 ||
        static_cast<int>(s.spec.gamma.size()) > s.spec.max_degree + 1)
        throw ConfigError("scenario: beta/gamma longer than the degree budget");

    if (j.contains("frame")) {
        reject_unknown(j["frame"], {"a_x"}, "frame");
        if (j["frame"].contains("a_x"))
            s.frame_a = TimePoly(rational_list(j["frame"]["a_x"], "frame.a_x"));
        if (s.frame_a.degree() > s.spec.max_degree)
            throw ConfigError("scenario: frame translation exceeds the degree budget");
    }
    if (j.contains("grid")) {
        const json& g = j["grid"];
        reject_unknown(g, {"q_min", "q_max", "n_points"}, "grid");
        s.grid.q_min = number(g, "q_min", s.grid.q_min);
        s.grid.q_max = number(g, "q_max", s.grid.q_max);
        if (g.contains("n_points")) s.grid.n_points = g["n_points"].get<int>();
        if (s.grid.n_points < 16 || s.grid.q_max <= s.grid.q_min)
            throw ConfigError("scenario: bad grid");
    }
    if (j.contains("evolution")) {
        const json& e = j["evolution"];
        reject_unknown(e, {"horizon", "dt", "sample_every"}, "evolution");
        s.horizon = number(e, "horizon", s.horizon);
        s.dt = number(e, "dt", s.dt);
        if (e.contains("sample_every")) s.sample_every = e["sample_every"].get<int>();
        if (s.horizon <= 0 || s.dt <= 0 || s.sample_every < 1)
            throw ConfigError("scenario: bad evolution block");
    }
    if (j.contains("packet")) {
        const json& p = j["packet"];
        reject_unknown(p, {"center", "sigma"}, "packet");
        s.packet_center = number(p, "center", s.packet_center);
        s.packet_sigma = number(p, "sigma", s.packet_sigma);
        if (s.packet_sigma <= 0) throw ConfigError("scenario: bad packet sigma");
    }
    if (j.contains("classical")) {
        const json& c = j["classical"];
        reject_unknown(c, {"mass", "x0", "p0", "horizon", "dt"}, "classical");
        s.classical_mass = number(c, "mass", s.classical_mass);
        s.classical_x0 = number(c, "x0", s.classical_x0);
        s.classical_p0 = number(c, "p0", s.classical_p0);
        s.classical_horizon = number(c, "horizon", s.classical_horizon);
        s.classical_dt = number(c, "dt", s.classical_dt);
        if (s.classical_mass <= 0 || s.classical_dt <= 0)
            throw ConfigError("scenario: bad classical block");
    }
    return s;
}

ScenarioFile ScenarioFile::load(const std::string& path) {
    return parse(read_file(path));
}

FrameScenario ScenarioFile::frame_scenario() const {
    FrameScenario f = FrameScenario::make(spec, w, Vec3Poly::axis_x(frame_a));
    f.grid = grid;
    f.horizon = horizon;
    f.dt = dt;
    f.sample_every = sample_every;
    f.packet_center = packet_center;
    f.packet_sigma = packet_sigma;
    return f;
}

GeneratingSpec ScenarioFile::generating_spec() const {
    return {spec, frame_a, classical_mass};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write file: " + path);
    out << content;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace galine
