#include "galine.h"

#include <cstring>
#include <string>

#include "galine/qrep.hpp"
#include "galine/suites.hpp"

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

galine_status fail(galine_status code, const char* what) {
    g_last_error = what;
    return code;
}

galine_status classify(const std::exception& e) {
    if (dynamic_cast<const galine::ConfigError*>(&e))
        return fail(GALINE_ERR_CONFIG, e.what());
    return fail(GALINE_ERR_RUNTIME, e.what());
}

}  // namespace

struct galine_scenario {
    galine::ScenarioFile file;
};

extern "C" {

const char* galine_last_error(void) { return g_last_error.c_str(); }

void galine_string_free(char* s) { std::free(s); }

galine_scenario* galine_scenario_parse(const char* json_text) {
    if (!json_text) {
        g_last_error = "null scenario text";
        return nullptr;
    }
    try {
        return new galine_scenario{galine::ScenarioFile::parse(json_text)};
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return nullptr;
    }
}

galine_scenario* galine_scenario_load(const char* path) {
    if (!path) {
        g_last_error = "null scenario path";
        return nullptr;
    }
    try {
        return new galine_scenario{galine::ScenarioFile::load(path)};
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return nullptr;
    }
}

void galine_scenario_free(galine_scenario* scn) { delete scn; }

galine_status galine_scenario_mass(const galine_scenario* scn, char** out) {
    if (!scn || !out) return fail(GALINE_ERR_CONFIG, "null argument");
    *out = dup_string(scn->file.spec.mass().str());
    return GALINE_OK;
}

int galine_scenario_embeddable(const galine_scenario* scn) {
    return scn && scn->file.spec.galilei_embeddable() ? 1 : 0;
}

static galine_scenario* with_coeff(const galine_scenario* scn, int index, const char* value,
                                   bool beta) {
    if (!scn || !value || index < 0) {
        g_last_error = "bad coefficient override";
        return nullptr;
    }
    try {
        auto copy = new galine_scenario{scn->file};
        auto& v = beta ? copy->file.spec.beta : copy->file.spec.gamma;
        if (static_cast<std::size_t>(index) >= v.size())
            v.resize(static_cast<std::size_t>(index) + 1, galine::Rational(0));
        v[static_cast<std::size_t>(index)] = galine::Rational::parse(value);
        return copy;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return nullptr;
    }
}

galine_scenario* galine_scenario_with_beta(const galine_scenario* scn, int index,
                                           const char* value) {
    return with_coeff(scn, index, value, true);
}

galine_scenario* galine_scenario_with_gamma(const galine_scenario* scn, int index,
                                            const char* value) {
    return with_coeff(scn, index, value, false);
}

galine_scenario* galine_scenario_with_classical_mass(const galine_scenario* scn, double mass) {
    if (!scn || mass <= 0) {
        g_last_error = "bad classical mass";
        return nullptr;
    }
    auto copy = new galine_scenario{scn->file};
    copy->file.classical_mass = mass;
    return copy;
}

const char* galine_suite_names(void) {
    static std::string names = [] {
        std::string s;
        for (const auto& n : galine::all_suite_names()) {
            if (!s.empty()) s += ",";
            s += n;
        }
        return s;
    }();
    return names.c_str();
}

galine_status galine_run_suite(const galine_scenario* scn, const char* suite_name,
                               uint64_t seed, int negative_control, double tol,
                               char** report_json) {
    if (!scn || !suite_name || !report_json) return fail(GALINE_ERR_CONFIG, "null argument");
    try {
        galine::SuiteOptions opt;
        opt.seed = seed;
        opt.negative_control = negative_control != 0;
        if (tol > 0) opt.tol = tol;
        galine::SuiteReport rep = galine::run_suite(suite_name, scn->file, opt);
        *report_json = dup_string(rep.to_json());
        return rep.pass ? GALINE_OK : fail(GALINE_SUITE_FAILED, ("suite failed: " + rep.check).c_str());
    } catch (const std::exception& e) {
        return classify(e);
    }
}

galine_status galine_run_evolve(const galine_scenario* scn, char** csv, char** summary_json) {
    if (!scn || !csv || !summary_json) return fail(GALINE_ERR_CONFIG, "null argument");
    try {
        galine::FrameScenario fs = scn->file.frame_scenario();
        galine::EvolveOutputs out = galine::run_evolution(fs);
        *csv = dup_string(out.csv);
        *summary_json = dup_string(galine::evolve_summary_json(fs, out));
        return GALINE_OK;
    } catch (const std::exception& e) {
        return classify(e);
    }
}

galine_status galine_run_classical(const galine_scenario* scn, char** csv,
                                   char** summary_json) {
    if (!scn || !csv || !summary_json) return fail(GALINE_ERR_CONFIG, "null argument");
    try {
        galine::GeneratingSpec gs = scn->file.generating_spec();
        galine::PhaseState s0{scn->file.classical_x0, scn->file.classical_p0, 0.0};
        galine::ClassicalOutputs out = galine::run_classical(
            gs, s0, scn->file.classical_horizon, scn->file.classical_dt);
        *csv = dup_string(out.csv);
        *summary_json = dup_string(galine::classical_summary_json(gs, out));
        return GALINE_OK;
    } catch (const std::exception& e) {
        return classify(e);
    }
}

galine_status galine_run_ep_pair(const galine_scenario* a, const galine_scenario* b,
                                 char** summary_json) {
    if (!a || !b || !summary_json) return fail(GALINE_ERR_CONFIG, "null argument");
    try {
        galine::EpPairSummary s =
            galine::run_ep_pair(a->file.frame_scenario(), b->file.frame_scenario());
        *summary_json = dup_string(galine::ep_pair_summary_json(s));
        return GALINE_OK;
    } catch (const std::exception& e) {
        return classify(e);
    }
}

galine_status galine_group_compose(const char* g2_json, const char* g1_json, int budget,
                                   char** out_json) {
    if (!g2_json || !g1_json || !out_json) return fail(GALINE_ERR_CONFIG, "null argument");
    try {
        galine::GroupElement g2 = galine::group_from_json(g2_json, budget);
        galine::GroupElement g1 = galine::group_from_json(g1_json, budget);
        *out_json = dup_string(galine::group_to_json(galine::compose(g2, g1)));
        return GALINE_OK;
    } catch (const std::exception& e) {
        return classify(e);
    }
}

galine_status galine_group_inverse(const char* g_json, int budget, char** out_json) {
    if (!g_json || !out_json) return fail(GALINE_ERR_CONFIG, "null argument");
    try {
        galine::GroupElement g = galine::group_from_json(g_json, budget);
        *out_json = dup_string(galine::group_to_json(galine::inverse(g)));
        return GALINE_OK;
    } catch (const std::exception& e) {
        return classify(e);
    }
}

galine_status galine_cocycle_eval(const galine_scenario* scn, const char* g2_json,
                                  const char* g1_json, char** out_poly) {
    if (!scn || !g2_json || !g1_json || !out_poly)
        return fail(GALINE_ERR_CONFIG, "null argument");
    try {
        int budget = scn->file.spec.max_degree;
        galine::GroupElement g2 = galine::group_from_json(g2_json, budget);
        galine::GroupElement g1 = galine::group_from_json(g1_json, budget);
        *out_poly = dup_string(galine::to_string(galine::omega(scn->file.spec, g2, g1)));
        return GALINE_OK;
    } catch (const std::exception& e) {
        return classify(e);
    }
}

galine_status galine_hamiltonian_report(const galine_scenario* scn, char** out_json) {
    if (!scn || !out_json) return fail(GALINE_ERR_CONFIG, "null argument");
    try {
        galine::FrameScenario fs = scn->file.frame_scenario();
        galine::HamiltonianReport rep =
            galine::hamiltonian_report(fs.spec, fs.w, fs.q_flow);
        *out_json = dup_string(rep.to_json());
        return GALINE_OK;
    } catch (const std::exception& e) {
        return classify(e);
    }
}

}  // extern "C"
