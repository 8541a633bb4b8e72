// qcwave: sample fundamental solutions, half-plane Green's functions and
// plane-wave free fields of 1D hexagonal quasicrystals, and run the
// verification suite.

#include <iostream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "qcwave/cli/commands.hpp"
#include "qcwave/version.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Anti-plane elastodynamic kernels for 1D hexagonal quasicrystals", "qcwave"};
    app.set_version_flag("--version", std::string(qcwave::kVersion));
    app.require_subcommand(1);

    std::string material;
    std::string omegas;

    auto* decompose = app.add_subcommand("decompose", "Print eigenvalues, rotation angle and wave parameters");
    decompose->add_option("--material", material, "Material JSON file")->required();
    decompose->add_option("--omega", omegas, "Comma-separated angular frequencies [rad/s]");

    std::string scenario;
    std::string out_path;
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    bool no_sidecar = false;
    auto* sample = app.add_subcommand("sample", "Evaluate a scenario and write CSV");
    sample->add_option("--scenario", scenario, "Scenario JSON file")->required();
    sample->add_option("--out", out_path, "Output CSV path")->required();
    sample->add_option("--material", material, "Override the scenario's material file");
    sample->add_option("--threads", threads, "Worker threads");
    sample->add_flag("--no-sidecar", no_sidecar, "Do not write <out>.json metadata");

    std::string suites = "all";
    std::uint64_t seed = qcwave::kDefaultSeed;
    std::string report;
    std::string verify_omegas = "1,10";
    auto* verify = app.add_subcommand("verify", "Run the verification suite");
    verify->add_option("--material", material, "Material JSON file")->required();
    verify->add_option("--omega", verify_omegas, "Comma-separated angular frequencies [rad/s]");
    verify->add_option("--suite", suites,
                       "Comma-separated suites: pde-residual,dirac-flux,reciprocity,decoupling,boundary-scan or all");
    verify->add_option("--seed", seed, "Seed for random sampling");
    verify->add_option("--report", report, "Write the JSON report to this path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : qcwave::cli::kExitValidation;
    }

    if (*decompose) return qcwave::cli::run_decompose(material, omegas, std::cout, std::cerr);
    if (*sample) return qcwave::cli::run_sample(scenario, material, out_path, threads, !no_sidecar, std::cerr);
    return qcwave::cli::run_verify(material, verify_omegas, suites, seed, report, std::cout, std::cerr);
}
