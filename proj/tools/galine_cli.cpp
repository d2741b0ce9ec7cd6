// Command-line driver for the verification suites and simulations. Talks to
// the engine exclusively through the shared-library C interface.
#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "galine.h"

namespace fs = std::filesystem;

namespace {

bool verbose() {
    const char* v = std::getenv("GALINE_LOG");
    return v && *v;
}

void log_line(const std::string& s) {
    if (verbose()) std::cerr << "[galine] " << s << "\n";
}

struct OwnedString {
    char* ptr = nullptr;
    ~OwnedString() { galine_string_free(ptr); }
    std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

struct OwnedScenario {
    galine_scenario* ptr = nullptr;
    explicit OwnedScenario(galine_scenario* p = nullptr) : ptr(p) {}
    ~OwnedScenario() { galine_scenario_free(ptr); }
    OwnedScenario(const OwnedScenario&) = delete;
    OwnedScenario& operator=(const OwnedScenario&) = delete;
};

int config_error(const std::string& what) {
    std::cerr << "error: " << what << "\n";
    return 2;
}

void write_text(const fs::path& p, const std::string& content) {
    fs::create_directories(p.parent_path().empty() ? "." : p.parent_path());
    std::ofstream out(p, std::ios::binary);
    out << content;
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

struct CommonOpts {
    std::string scenario;
    std::string out_dir = "out";
    std::uint64_t seed = 12345;
    double tol = 1e-8;
    std::string suites;
    bool negative_control = false;
};

int run_verify(const CommonOpts& o, const std::vector<std::string>& which) {
    OwnedScenario scn(galine_scenario_load(o.scenario.c_str()));
    if (!scn.ptr) return config_error(galine_last_error());
    OwnedString mass;
    galine_scenario_mass(scn.ptr, &mass.ptr);
    log_line("scenario mass " + mass.str());

    bool all_pass = true;
    std::ostringstream summary;
    summary << "{\n  \"mass\": \"" << mass.str() << "\",\n  \"suites\": {\n";
    for (std::size_t i = 0; i < which.size(); ++i) {
        const std::string& name = which[i];
        OwnedString report;
        galine_status st = galine_run_suite(scn.ptr, name.c_str(), o.seed,
                                            o.negative_control ? 1 : 0, o.tol, &report.ptr);
        if (st == GALINE_ERR_CONFIG) return config_error(galine_last_error());
        if (st == GALINE_ERR_RUNTIME) {
            std::cerr << "error: suite " << name << ": " << galine_last_error() << "\n";
            return 1;
        }
        bool pass = st == GALINE_OK;
        all_pass = all_pass && pass;
        std::cout << (pass ? "PASS " : "FAIL ") << name << "\n";
        write_text(fs::path(o.out_dir) / ("suite-" + name + ".json"), report.str());
        summary << "    \"" << name << "\": " << (pass ? "true" : "false")
                << (i + 1 < which.size() ? ",\n" : "\n");
    }
    summary << "  },\n  \"pass\": " << (all_pass ? "true" : "false") << "\n}\n";
    write_text(fs::path(o.out_dir) / "verify_summary.json", summary.str());
    return all_pass ? 0 : 1;
}

int run_evolve(const CommonOpts& o, const std::string& sweep_beta1) {
    OwnedScenario scn(galine_scenario_load(o.scenario.c_str()));
    if (!scn.ptr) return config_error(galine_last_error());

    if (sweep_beta1.empty()) {
        OwnedString csv, summary;
        galine_status st = galine_run_evolve(scn.ptr, &csv.ptr, &summary.ptr);
        if (st != GALINE_OK) {
            std::cerr << "error: " << galine_last_error() << "\n";
            return st == GALINE_ERR_CONFIG ? 2 : 1;
        }
        write_text(fs::path(o.out_dir) / "evolve.csv", csv.str());
        write_text(fs::path(o.out_dir) / "evolve_summary.json", summary.str());
        std::cout << summary.str() << "\n";
        return 0;
    }

    std::vector<std::string> values = split_csv(sweep_beta1);
    if (values.size() != 2) return config_error("--sweep-beta1 needs exactly two values");
    OwnedScenario a(galine_scenario_with_beta(scn.ptr, 1, values[0].c_str()));
    OwnedScenario b(galine_scenario_with_beta(scn.ptr, 1, values[1].c_str()));
    if (!a.ptr || !b.ptr) return config_error(galine_last_error());
    for (auto [handle, tag] : {std::pair{a.ptr, "a"}, std::pair{b.ptr, "b"}}) {
        OwnedString csv, summary;
        galine_status st = galine_run_evolve(handle, &csv.ptr, &summary.ptr);
        if (st != GALINE_OK) {
            std::cerr << "error: " << galine_last_error() << "\n";
            return 1;
        }
        write_text(fs::path(o.out_dir) / ("evolve_" + std::string(tag) + ".csv"), csv.str());
        write_text(fs::path(o.out_dir) / ("evolve_summary_" + std::string(tag) + ".json"),
                   summary.str());
    }
    OwnedString diff;
    galine_status st = galine_run_ep_pair(a.ptr, b.ptr, &diff.ptr);
    if (st != GALINE_OK) {
        std::cerr << "error: " << galine_last_error() << "\n";
        return 1;
    }
    write_text(fs::path(o.out_dir) / "ep_diff.json", diff.str());
    std::cout << diff.str() << "\n";
    return 0;
}

int run_classical(const CommonOpts& o) {
    OwnedScenario scn(galine_scenario_load(o.scenario.c_str()));
    if (!scn.ptr) return config_error(galine_last_error());
    OwnedString csv, summary;
    galine_status st = galine_run_classical(scn.ptr, &csv.ptr, &summary.ptr);
    if (st != GALINE_OK) {
        std::cerr << "error: " << galine_last_error() << "\n";
        return st == GALINE_ERR_CONFIG ? 2 : 1;
    }
    write_text(fs::path(o.out_dir) / "classical.csv", csv.str());
    write_text(fs::path(o.out_dir) / "classical_summary.json", summary.str());
    std::cout << summary.str() << "\n";
    return 0;
}

int run_report(const CommonOpts& o) {
    fs::path dir(o.out_dir);
    if (!fs::exists(dir)) return config_error("no such output directory: " + o.out_dir);
    std::ostringstream consolidated;
    consolidated << "{\n  \"reports\": [\n";
    bool first = true;
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.path().extension() == ".json") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    for (const auto& p : files) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream body;
        body << in.rdbuf();
        if (!first) consolidated << ",\n";
        consolidated << "    {\"file\": \"" << p.filename().string() << "\", \"body\": "
                     << body.str() << "}";
        first = false;
        std::cout << p.filename().string() << "\n";
    }
    consolidated << "\n  ]\n}\n";
    write_text(dir / "report.json", consolidated.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification and simulation engine for cocycle representations of the "
                 "Galilean line group"};
    app.require_subcommand(1);

    CommonOpts o;
    std::string sweep_beta1;

    auto add_common = [&](CLI::App* cmd, bool need_scenario) {
        if (need_scenario)
            cmd->add_option("--scenario", o.scenario, "scenario JSON path")->required();
        cmd->add_option("--seed", o.seed, "sampling seed");
        cmd->add_option("--out", o.out_dir, "output directory");
        cmd->add_option("--tol", o.tol, "numeric tolerance override");
        return cmd;
    };

    CLI::App* verify = add_common(app.add_subcommand("verify", "run verification suites"), true);
    verify->add_option("--suite", o.suites, "comma-separated suite subset");
    verify->add_flag("--negative-control", o.negative_control,
                     "corrupt the inputs and demand failure witnesses");

    CLI::App* evolve = add_common(
        app.add_subcommand("evolve", "integrate the wavepacket and write CSV"), true);
    evolve->add_option("--sweep-beta1", sweep_beta1,
                       "two comma-separated values; runs the pair and diffs");

    add_common(app.add_subcommand("classical", "integrate the classical trajectory"), true);

    CLI::App* cocycle = add_common(
        app.add_subcommand("cocycle-check", "cocycle condition, constraints, reduction"), true);
    (void)cocycle;

    add_common(app.add_subcommand("commutators", "operator and bracket identities"), true);
    add_common(app.add_subcommand("report", "consolidate reports in --out"), false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand("verify")) {
            std::vector<std::string> which = o.suites.empty()
                                                 ? split_csv(galine_suite_names())
                                                 : split_csv(o.suites);
            return run_verify(o, which);
        }
        if (app.got_subcommand("evolve")) return run_evolve(o, sweep_beta1);
        if (app.got_subcommand("classical")) return run_classical(o);
        if (app.got_subcommand("cocycle-check"))
            return run_verify(o, {"cocycle-condition", "bc-constraints", "galilei-reduction"});
        if (app.got_subcommand("commutators")) return run_verify(o, {"commutators"});
        if (app.got_subcommand("report")) return run_report(o);
    } catch (const std::exception& e) {
        return config_error(e.what());
    }
    return 2;
}
