#ifndef QCWAVE_CLI_COMMANDS_HPP
#define QCWAVE_CLI_COMMANDS_HPP

// Subcommand bodies. Each returns the process exit status and reports
// failures on `err`:
//   0 success, 2 parse/validation error, 3 evaluation error,
//   4 verification failure.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "qcwave/cli/sampler.hpp"
#include "qcwave/cli/verify_suite.hpp"

namespace qcwave::cli {

/// Splits "1,10,1e3" into numbers.
inline std::vector<double> parse_number_list(const std::string& text, const std::string& option) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size())
            throw CliError(FailureKind::Parse, option + ": '" + item + "' is not a number");
        out.push_back(v);
    }
    if (out.empty()) throw CliError(FailureKind::Parse, option + ": empty list");
    return out;
}

inline std::vector<std::string> parse_name_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

inline void print_decomposition(std::ostream& out, const QcMaterial& m, const std::vector<double>& omegas) {
    const SpectralDecomposition d = decompose(m);
    std::ostringstream os;
    os << std::setprecision(10);
    os << "material: c44=" << m.c44 << " Pa, R3=" << m.R3 << " Pa, K2=" << m.K2 << " Pa, rho=" << m.rho
       << " kg/m^3\n";
    os << "a1   = " << d.a1 << " Pa\n";
    os << "a2   = " << d.a2 << " Pa\n";
    os << "psi  = " << d.psi * 180.0 / std::numbers::pi << " deg (" << d.psi << " rad)\n";
    const auto q = d.rotation();
    os << "Q    = [[" << q[0][0] << ", " << q[0][1] << "], [" << q[1][0] << ", " << q[1][1] << "]]\n";
    if (m.R3 == 0.0) {
        os << "note: R3 = 0, phonon and phason fields decouple; psi = "
           << (m.c44 >= m.K2 ? "0 deg (c44 >= K2)" : "90 deg (c44 < K2)") << " by continuity\n";
    }
    if (!omegas.empty()) {
        os << std::left << std::setw(18) << "omega [rad/s]" << std::setw(18) << "k1 [1/m]" << std::setw(18)
           << "k2 [1/m]" << std::setw(18) << "c1 [m/s]" << "c2 [m/s]\n";
        for (double omega : omegas) {
            const WaveParameters w = wave_parameters(d, m.rho, omega);
            os << std::setw(18) << w.omega << std::setw(18) << w.k1 << std::setw(18) << w.k2 << std::setw(18) << w.c1
               << w.c2 << "\n";
        }
    }
    out << os.str();
}

inline int run_decompose(const std::string& material_path, const std::string& omega_list, std::ostream& out,
                         std::ostream& err) {
    try {
        const QcMaterial m = load_material(material_path);
        std::vector<double> omegas;
        if (!omega_list.empty()) omegas = parse_number_list(omega_list, "--omega");
        for (double omega : omegas) {
            try {
                require_positive_frequency(omega);
            } catch (const Error& e) {
                throw CliError(FailureKind::Validation, e.what());
            }
        }
        print_decomposition(out, m, omegas);
        return kExitOk;
    } catch (const CliError& e) {
        err << e.what() << "\n";
        return e.exit_code();
    }
}

/// Loads, validates and evaluates a scenario, then writes the CSV and the
/// `<out>.json` sidecar.
inline int run_sample(const std::string& scenario_path, const std::string& material_override,
                      const std::string& out_path, unsigned threads, bool write_sidecar, std::ostream& err) {
    try {
        const Scenario s = load_scenario(scenario_path, material_override);
        validate_scenario(s, scenario_path);
        const auto rows = sample_scenario(s, threads);
        std::ofstream csv(out_path, std::ios::binary);
        if (!csv) throw CliError(FailureKind::Validation, "cannot write '" + out_path + "'");
        write_csv(csv, s, rows);
        if (write_sidecar) {
            std::ofstream meta(out_path + ".json");
            meta << sidecar_json(s, rows.size()).dump(2) << "\n";
        }
        return kExitOk;
    } catch (const CliError& e) {
        err << e.what() << "\n";
        return e.exit_code();
    }
}

inline int run_verify(const std::string& material_path, const std::string& omega_list, const std::string& suite_list,
                      std::uint64_t seed, const std::string& report_path, std::ostream& out, std::ostream& err) {
    try {
        const QcMaterial m = load_material(material_path);
        const auto omegas = parse_number_list(omega_list, "--omega");
        for (double omega : omegas) {
            try {
                require_positive_frequency(omega);
            } catch (const Error& e) {
                throw CliError(FailureKind::Validation, e.what());
            }
        }
        std::vector<std::string> suites = parse_name_list(suite_list);
        if (suites.empty() || (suites.size() == 1 && suites[0] == "all")) suites = suite_names();
        for (const auto& s : suites) {
            if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
                throw CliError(FailureKind::Validation, "unknown suite '" + s + "'");
        }
        VerifyOutcome outcome;
        try {
            outcome = run_verify_suite(m, omegas, suites, seed);
        } catch (const Error& e) {
            throw CliError(FailureKind::Evaluation, e.what());
        }
        for (const auto& c : outcome.report["checks"]) {
            out << std::left << std::setw(8) << c["status"].get<std::string>() << std::setw(15)
                << c["suite"].get<std::string>() << "omega=" << c["omega"].get<double>();
            if (c.contains("metric"))
                out << "  metric=" << c["metric"].get<double>() << "  threshold=" << c["threshold"].get<double>();
            if (c.contains("note")) out << "  (" << c["note"].get<std::string>() << ")";
            out << "\n";
        }
        out << (outcome.passed ? "verification passed" : "verification FAILED") << "\n";
        if (!report_path.empty()) {
            std::ofstream rep(report_path);
            if (!rep) throw CliError(FailureKind::Validation, "cannot write '" + report_path + "'");
            rep << outcome.report.dump(2) << "\n";
        }
        return outcome.passed ? kExitOk : kExitVerification;
    } catch (const CliError& e) {
        err << e.what() << "\n";
        return e.exit_code();
    }
}

}  // namespace qcwave::cli

#endif  // QCWAVE_CLI_COMMANDS_HPP
