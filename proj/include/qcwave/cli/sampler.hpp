#ifndef QCWAVE_CLI_SAMPLER_HPP
#define QCWAVE_CLI_SAMPLER_HPP

// Evaluates a scenario on its points and writes the samples as CSV.
//
// Columns (complex values always split into _re/_im):
//   fundamental, green-half:
//     x1,x2,u31_re,u31_im,u32_re,u32_im,w31_re,w31_im,w32_re,w32_im
//     [,t31_re,t31_im,t32_re,t32_im,G31_re,G31_im,G32_re,G32_im]
//   freefield-full, freefield-half:
//     x1,x2,u3_re,u3_im,w3_re,w3_im[,t3_re,t3_im,G3_re,G3_im]
// Numbers use the shortest representation that reads back to the same
// double, so the CSV reproduces library values exactly.

#include <algorithm>
#include <charconv>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "qcwave/cli/scenario.hpp"
#include "qcwave/version.hpp"

namespace qcwave::cli {

/// One evaluated point: the complex values in column order (after x1, x2).
struct FieldSample {
    Point2 point;
    std::vector<Complex> values;
};

inline std::vector<std::string> csv_columns(const Scenario& s) {
    std::vector<std::string> cols{"x1", "x2"};
    auto add = [&cols](const std::string& name) {
        cols.push_back(name + "_re");
        cols.push_back(name + "_im");
    };
    if (is_kernel_kind(s.kind)) {
        for (const char* n : {"u31", "u32", "w31", "w32"}) add(n);
        if (s.traction_normal)
            for (const char* n : {"t31", "t32", "G31", "G32"}) add(n);
    } else {
        for (const char* n : {"u3", "w3"}) add(n);
        if (s.traction_normal)
            for (const char* n : {"t3", "G3"}) add(n);
    }
    return cols;
}

/// Evaluates one point through the public library calls.
inline FieldSample sample_point(const Scenario& s, Point2 x) {
    FieldSample out{x, {}};
    switch (s.kind) {
        case SolutionKind::Fundamental:
        case SolutionKind::GreenHalf: {
            const bool green = s.kind == SolutionKind::GreenHalf;
            const KernelMatrix v = green ? green_displacement(s.material, x, s.source, s.omega)
                                         : fundamental_displacement(s.material, x, s.source, s.omega);
            out.values = {v(0, 0), v(0, 1), v(1, 0), v(1, 1)};
            if (s.traction_normal) {
                const TractionMatrix t = green ? green_traction(s.material, x, s.source, s.omega, *s.traction_normal)
                                               : fundamental_traction(s.material, x, s.source, s.omega,
                                                                      *s.traction_normal);
                out.values.insert(out.values.end(), {t(0, 0), t(0, 1), t(1, 0), t(1, 1)});
            }
            break;
        }
        case SolutionKind::FreefieldFull:
        case SolutionKind::FreefieldHalf: {
            const bool half = s.kind == SolutionKind::FreefieldHalf;
            const FieldValue f = half ? halfplane_freefield(s.material, s.wave, s.omega, x)
                                      : fullplane_incident(s.material, s.wave, s.omega, x);
            out.values = {f.u3, f.w3};
            if (s.traction_normal) {
                const FieldTraction t = freefield_traction(s.material, s.wave, s.omega, x, half, *s.traction_normal);
                out.values.insert(out.values.end(), {t.t3, t.g3});
            }
            break;
        }
    }
    return out;
}

/// Evaluates every point, optionally on several threads. Results are in
/// point order; the first failing point in that order is reported.
inline std::vector<FieldSample> sample_scenario(const Scenario& s, unsigned threads = 1) {
    const std::vector<Point2> pts = evaluation_points(s);
    std::vector<FieldSample> rows(pts.size());
    std::vector<std::optional<std::string>> failures(pts.size());
    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            try {
                rows[i] = sample_point(s, pts[i]);
            } catch (const Error& e) {
                failures[i] = e.what();
            }
        }
    };
    const std::size_t n_threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(1, pts.size()));
    if (n_threads == 1) {
        work(0, pts.size());
    } else {
        std::vector<std::jthread> pool;
        const std::size_t chunk = (pts.size() + n_threads - 1) / n_threads;
        for (std::size_t t = 0; t < n_threads; ++t) {
            const std::size_t begin = t * chunk;
            const std::size_t end = std::min(pts.size(), begin + chunk);
            if (begin < end) pool.emplace_back(work, begin, end);
        }
    }
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (failures[i]) {
            std::ostringstream os;
            os.precision(17);
            os << "evaluation failed at point (" << pts[i].x1 << ", " << pts[i].x2 << "): " << *failures[i];
            throw CliError(FailureKind::Evaluation, os.str());
        }
    }
    return rows;
}

inline void write_number(std::ostream& out, double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    out.write(buf, res.ptr - buf);
}

inline void write_csv(std::ostream& out, const Scenario& s, const std::vector<FieldSample>& rows) {
    const auto cols = csv_columns(s);
    for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
    out << '\n';
    for (const auto& row : rows) {
        write_number(out, row.point.x1);
        out << ',';
        write_number(out, row.point.x2);
        for (const Complex& v : row.values) {
            out << ',';
            write_number(out, v.real());
            out << ',';
            write_number(out, v.imag());
        }
        out << '\n';
    }
}

/// Metadata written next to the CSV: the scenario echo, version and units.
inline Json sidecar_json(const Scenario& s, std::size_t rows) {
    return Json{{"scenario", scenario_to_json(s)},
                {"code_version", kVersion},
                {"material", material_to_json(s.material)},
                {"rows", rows},
                {"columns", csv_columns(s)},
                {"units",
                 {{"c44", "Pa"}, {"R3", "Pa"}, {"K2", "Pa"}, {"rho", "kg/m^3"}, {"omega", "rad/s"},
                  {"coordinates", "m"}, {"time_convention", "exp(-i omega t)"}}}};
}

}  // namespace qcwave::cli

#endif  // QCWAVE_CLI_SAMPLER_HPP
