#ifndef QCWAVE_CLI_VERIFY_SUITE_HPP
#define QCWAVE_CLI_VERIFY_SUITE_HPP

// The property suite behind `qcwave verify`. Each suite runs once per
// frequency and contributes one JSON entry to the report.

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qcwave/cli/scenario.hpp"
#include "qcwave/verify.hpp"
#include "qcwave/version.hpp"

namespace qcwave::cli {

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"pde-residual", "dirac-flux", "reciprocity", "decoupling",
                                                "boundary-scan"};
    return names;
}

struct SuiteThresholds {
    double kernel_residual = 1e-4;
    double plane_wave_fd_residual = 1e-6;
    double plane_wave_analytic_residual = 1e-12;
    double flux_deviation = 1e-3;
    double green_boundary = 1e-10;
    double freefield_boundary = 1e-13;
    double negative_control_min = 0.5;
};

namespace detail {

inline Json point_json(Point2 p) { return Json::array({p.x1, p.x2}); }

inline Json run_pde_residual(const QcMaterial& m, double omega, std::uint64_t seed, const SuiteThresholds& th) {
    const WaveParameters w = wave_parameters(m, omega);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    const Point2 xi{0.25 / w.k1, -0.5 / w.k1};

    double worst_kernel = 0.0;
    constexpr int kPoints = 20;
    for (int i = 0; i < kPoints; ++i) {
        const double kr = 0.5 * std::pow(40.0, static_cast<double>(i) / (kPoints - 1));
        const double r = kr / w.k1;
        const double a = angle(rng);
        const Point2 x = xi + r * Point2{std::cos(a), std::sin(a)};
        const double h = recommended_step(m, omega, r);
        for (int load = 0; load < 2; ++load) {
            const auto rep = pde_residual(fundamental_column(m, xi, omega, load), m, omega, x, h);
            worst_kernel = std::max(worst_kernel, rep.relative_residual);
        }
    }

    // Green's function columns away from the source, its image and the boundary.
    const Point2 src{0.0, -3.0 / w.k1};
    double worst_green = 0.0;
    for (int i = 0; i < 5; ++i) {
        const Point2 x{(0.7 + 0.9 * i) / w.k1, -(0.4 + 1.1 * i) / w.k1};
        const double r = std::min(norm(x - src), norm(x - image_point(src)));
        const double h = std::min(recommended_step(m, omega, r), -0.25 * x.x2);
        for (int load = 0; load < 2; ++load) {
            const auto rep = pde_residual(green_column(m, src, omega, load), m, omega, x, h);
            worst_green = std::max(worst_green, rep.relative_residual);
        }
    }

    double worst_fd_wave = 0.0;
    double worst_analytic_wave = 0.0;
    for (auto mode : {WaveMode::S1, WaveMode::S2}) {
        const IncidentWave wave{mode, {1.0, 0.0}, 0.3 + 0.4 * static_cast<int>(mode)};
        const double k = mode == WaveMode::S1 ? w.k1 : w.k2;
        const double h = 2.0 * std::numbers::pi / k / 2000.0;
        for (bool half : {false, true}) {
            const Point2 x{1.3 / k, -2.1 / k};
            worst_fd_wave = std::max(
                worst_fd_wave, pde_residual(plane_wave_field(m, wave, omega, half), m, omega, x, h).relative_residual);
            worst_analytic_wave = std::max(worst_analytic_wave,
                                           plane_wave_analytic_residual(m, wave, omega, x, half).relative_residual);
        }
    }

    const bool passed = worst_kernel < th.kernel_residual && worst_green < th.kernel_residual &&
                        worst_fd_wave < th.plane_wave_fd_residual &&
                        worst_analytic_wave < th.plane_wave_analytic_residual;
    return Json{{"passed", passed},
                {"metric", std::max(worst_kernel, worst_green)},
                {"threshold", th.kernel_residual},
                {"details",
                 {{"fundamental_max_relative_residual", worst_kernel},
                  {"green_max_relative_residual", worst_green},
                  {"plane_wave_fd_max_relative_residual", worst_fd_wave},
                  {"plane_wave_fd_threshold", th.plane_wave_fd_residual},
                  {"plane_wave_analytic_max_relative_residual", worst_analytic_wave},
                  {"plane_wave_analytic_threshold", th.plane_wave_analytic_residual}}}};
}

inline Json run_dirac_flux(const QcMaterial& m, double omega, const SuiteThresholds& th) {
    const WaveParameters w = wave_parameters(m, omega);
    const Point2 xi{0.37, -0.21};
    Json radii = Json::array();
    double eps = 1e-3 / w.k2;
    double previous = 0.0;
    double first = 0.0;
    bool monotone = true;
    for (int i = 0; i < 4; ++i, eps *= 0.5) {
        const FluxReport rep = dirac_flux(m, xi, omega, eps, 256);
        if (i == 0)
            first = rep.deviation;
        else
            monotone = monotone && rep.deviation < previous;
        previous = rep.deviation;
        radii.push_back({{"radius", eps}, {"deviation", rep.deviation}, {"balance_deviation", rep.balance_deviation}});
    }
    return Json{{"passed", first < th.flux_deviation && monotone},
                {"metric", first},
                {"threshold", th.flux_deviation},
                {"details", {{"nodes", 256}, {"monotone", monotone}, {"radii", radii}}}};
}

inline Json run_reciprocity(const QcMaterial& m, double omega, std::uint64_t seed) {
    const ReciprocityReport rep = reciprocity_check(m, omega, 100, seed);
    return Json{{"passed", rep.passed},
                {"metric", rep.max_deviation},
                {"threshold", rep.tolerance},
                {"details", {{"samples", rep.samples}}}};
}

inline Json run_decoupling(const QcMaterial& m, double omega, std::uint64_t seed) {
    if (m.R3 != 0.0) return Json{{"status", "skipped"}, {"note", "decoupling check applies only to R3 = 0"}};
    const WaveParameters w = wave_parameters(m, omega);
    const auto pairs = random_half_plane_pairs(20, 4.0 / w.k1, seed);
    const DecouplingReport rep = decoupling_check(m, omega, pairs);
    return Json{{"passed", rep.passed},
                {"metric", std::max(rep.max_fundamental_deviation, rep.max_green_deviation)},
                {"threshold", rep.tolerance},
                {"details",
                 {{"fundamental_points", rep.fundamental_points},
                  {"green_points", rep.green_points},
                  {"max_fundamental_deviation", rep.max_fundamental_deviation},
                  {"max_green_deviation", rep.max_green_deviation}}}};
}

inline Json run_boundary_scan(const QcMaterial& m, double omega, std::uint64_t seed, const SuiteThresholds& th) {
    const WaveParameters w = wave_parameters(m, omega);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> along(-3.0 / w.k1, 3.0 / w.k1);
    std::uniform_real_distribution<double> depth(0.1 / w.k1, 5.0 / w.k1);
    double green = 0.0;
    for (int i = 0; i < 10; ++i) {
        const Point2 src{along(rng), -depth(rng)};
        green = std::max(green, boundary_traction_scan(m, omega, src, 50).max_normalized_traction);
    }
    double freefield = 0.0;
    double control = std::numeric_limits<double>::infinity();
    for (auto mode : {WaveMode::S1, WaveMode::S2}) {
        const IncidentWave wave{mode, {1.0, 0.5}, 0.7};
        freefield = std::max(freefield, boundary_traction_scan(m, omega, wave, 50, true).max_normalized_traction);
        control = std::min(control, boundary_traction_scan(m, omega, wave, 50, false).max_normalized_traction);
    }
    const bool passed = green < th.green_boundary && freefield < th.freefield_boundary &&
                        control > th.negative_control_min;
    return Json{{"passed", passed},
                {"metric", green},
                {"threshold", th.green_boundary},
                {"details",
                 {{"green_max_normalized_traction", green},
                  {"freefield_max_normalized_traction", freefield},
                  {"freefield_threshold", th.freefield_boundary},
                  {"incident_only_control", control},
                  {"control_minimum", th.negative_control_min}}}};
}

}  // namespace detail

struct VerifyOutcome {
    bool passed = true;
    Json report;
};

/// Runs the selected suites at every frequency.
inline VerifyOutcome run_verify_suite(const QcMaterial& m, const std::vector<double>& omegas,
                                      const std::vector<std::string>& suites, std::uint64_t seed,
                                      const SuiteThresholds& th = {}) {
    VerifyOutcome out;
    Json checks = Json::array();
    for (double omega : omegas) {
        for (const std::string& name : suites) {
            Json entry;
            if (name == "pde-residual")
                entry = detail::run_pde_residual(m, omega, seed, th);
            else if (name == "dirac-flux")
                entry = detail::run_dirac_flux(m, omega, th);
            else if (name == "reciprocity")
                entry = detail::run_reciprocity(m, omega, seed);
            else if (name == "decoupling")
                entry = detail::run_decoupling(m, omega, seed);
            else if (name == "boundary-scan")
                entry = detail::run_boundary_scan(m, omega, seed, th);
            else
                throw CliError(FailureKind::Validation, "unknown suite '" + name + "'");
            if (!entry.contains("status")) entry["status"] = entry["passed"].get<bool>() ? "passed" : "failed";
            if (entry["status"] == "failed") out.passed = false;
            entry["suite"] = name;
            entry["omega"] = omega;
            checks.push_back(entry);
        }
    }
    out.report = Json{{"code_version", kVersion},
                      {"material", material_to_json(m)},
                      {"seed", seed},
                      {"omegas", omegas},
                      {"suites", suites},
                      {"checks", checks},
                      {"passed", out.passed}};
    return out;
}

}  // namespace qcwave::cli

#endif  // QCWAVE_CLI_VERIFY_SUITE_HPP
