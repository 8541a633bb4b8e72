#ifndef QCWAVE_CLI_SCENARIO_HPP
#define QCWAVE_CLI_SCENARIO_HPP

// JSON documents read and written by the command-line tool.
//
// Material file (schema_version 1), SI units:
//   { "schema_version": 1, "c44": 2.0, "R3": 1.0, "K2": 2.0, "rho": 1.0,
//     "note": "optional free text" }
//
// Scenario file (schema_version 1):
//   { "schema_version": 1,
//     "material": "material.json" | { inline material object },
//     "kind": "fundamental" | "green-half" | "freefield-full" | "freefield-half",
//     "omega": 1.0,
//     "source": [x1, x2],                                  (fundamental, green-half)
//     "wave": { "mode": "S1", "amplitude": [re, im], "phi": 0.6 },  (freefield-*)
//     "grid": { "x1": [min, max], "x2": [min, max], "n1": 50, "n2": 50 }
//       or "points": [[x1, x2], ...],
//     "traction": { "normal": [n1, n2] } }                 (optional)
// A material path is resolved relative to the scenario file.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qcwave/freefield.hpp"
#include "qcwave/halfplane.hpp"
#include "qcwave/material.hpp"

namespace qcwave::cli {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitEvaluation = 3;
inline constexpr int kExitVerification = 4;

enum class FailureKind { Parse, Validation, Evaluation };

/// Failure surfaced to the command line with its exit status.
class CliError : public std::runtime_error {
public:
    CliError(FailureKind kind, const std::string& what)
        : std::runtime_error(label(kind) + ": " + what), kind_(kind) {}

    FailureKind kind() const noexcept { return kind_; }
    int exit_code() const noexcept { return kind_ == FailureKind::Evaluation ? kExitEvaluation : kExitValidation; }

private:
    static std::string label(FailureKind kind) {
        switch (kind) {
            case FailureKind::Parse: return "ParseError";
            case FailureKind::Validation: return "ValidationError";
            case FailureKind::Evaluation: return "EvaluationError";
        }
        return "Error";
    }

    FailureKind kind_;
};

enum class SolutionKind { Fundamental, GreenHalf, FreefieldFull, FreefieldHalf };

inline std::string to_string(SolutionKind kind) {
    switch (kind) {
        case SolutionKind::Fundamental: return "fundamental";
        case SolutionKind::GreenHalf: return "green-half";
        case SolutionKind::FreefieldFull: return "freefield-full";
        case SolutionKind::FreefieldHalf: return "freefield-half";
    }
    return "";
}

inline bool is_kernel_kind(SolutionKind kind) {
    return kind == SolutionKind::Fundamental || kind == SolutionKind::GreenHalf;
}

inline bool is_half_plane_kind(SolutionKind kind) {
    return kind == SolutionKind::GreenHalf || kind == SolutionKind::FreefieldHalf;
}

struct GridSpec {
    double x1_min = 0.0;
    double x1_max = 0.0;
    double x2_min = 0.0;
    double x2_max = 0.0;
    long long n1 = 1;
    long long n2 = 1;

    friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

struct Scenario {
    std::string material_file;  // as written in the scenario; empty when inline
    QcMaterial material;
    SolutionKind kind = SolutionKind::Fundamental;
    double omega = 0.0;
    Point2 source;
    IncidentWave wave;
    std::optional<GridSpec> grid;
    std::vector<Point2> points;
    std::optional<Point2> traction_normal;

    friend bool operator==(const Scenario&, const Scenario&) = default;
};

// ---------------------------------------------------------------------------
// Parsing helpers

namespace detail {

inline std::string line_of(const std::string& text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

inline Json parse_text(const std::string& text, const std::string& origin) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw CliError(FailureKind::Parse, origin + ": malformed JSON at " + line_of(text, e.byte) + ": " + e.what());
    }
}

inline Json parse_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw CliError(FailureKind::Parse, "cannot open '" + path.string() + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_text(ss.str(), path.string());
}

[[noreturn]] inline void field_error(const std::string& origin, const std::string& field, const std::string& what) {
    throw CliError(FailureKind::Parse, origin + ": field '" + field + "' " + what);
}

inline void require_object(const Json& j, const std::string& origin, const std::string& field) {
    if (!j.is_object()) field_error(origin, field, "must be a JSON object");
}

inline void reject_unknown(const Json& j, const std::set<std::string>& allowed, const std::string& origin,
                           const std::string& prefix) {
    for (const auto& item : j.items()) {
        if (!allowed.contains(item.key())) field_error(origin, prefix + item.key(), "is not recognised");
    }
}

inline const Json& member(const Json& j, const std::string& key, const std::string& origin,
                          const std::string& prefix = "") {
    auto it = j.find(key);
    if (it == j.end()) field_error(origin, prefix + key, "is missing");
    return *it;
}

inline double number(const Json& j, const std::string& key, const std::string& origin,
                     const std::string& prefix = "") {
    const Json& v = member(j, key, origin, prefix);
    if (!v.is_number()) field_error(origin, prefix + key, "must be a number");
    return v.get<double>();
}

inline long long integer(const Json& j, const std::string& key, const std::string& origin,
                         const std::string& prefix = "") {
    const Json& v = member(j, key, origin, prefix);
    if (!v.is_number_integer()) field_error(origin, prefix + key, "must be an integer");
    return v.get<long long>();
}

inline std::array<double, 2> pair(const Json& v, const std::string& origin, const std::string& field) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
        field_error(origin, field, "must be an array of two numbers");
    return {v[0].get<double>(), v[1].get<double>()};
}

inline void check_schema(const Json& j, const std::string& origin) {
    const long long version = integer(j, "schema_version", origin);
    if (version != kSchemaVersion)
        field_error(origin, "schema_version", "must be " + std::to_string(kSchemaVersion));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Material

inline QcMaterial material_from_json(const Json& j, const std::string& origin, bool require_schema = true) {
    detail::require_object(j, origin, "material");
    detail::reject_unknown(j, {"schema_version", "c44", "R3", "K2", "rho", "note", "units"}, origin, "");
    if (require_schema || j.contains("schema_version")) detail::check_schema(j, origin);
    QcMaterial m;
    m.c44 = detail::number(j, "c44", origin);
    m.R3 = detail::number(j, "R3", origin);
    m.K2 = detail::number(j, "K2", origin);
    m.rho = detail::number(j, "rho", origin);
    return m;
}

inline Json material_to_json(const QcMaterial& m) {
    return Json{{"schema_version", kSchemaVersion}, {"c44", m.c44}, {"R3", m.R3}, {"K2", m.K2}, {"rho", m.rho}};
}

inline void validate_material(const QcMaterial& m, const std::string& origin) {
    try {
        validate(m);
    } catch (const Error& e) {
        throw CliError(FailureKind::Validation, origin + ": " + e.what());
    }
}

/// Parses and validates a material file.
inline QcMaterial load_material(const std::filesystem::path& path) {
    const QcMaterial m = material_from_json(detail::parse_file(path), path.string());
    validate_material(m, path.string());
    return m;
}

// ---------------------------------------------------------------------------
// Scenario

inline SolutionKind kind_from_string(const std::string& s, const std::string& origin) {
    for (auto k : {SolutionKind::Fundamental, SolutionKind::GreenHalf, SolutionKind::FreefieldFull,
                   SolutionKind::FreefieldHalf}) {
        if (to_string(k) == s) return k;
    }
    detail::field_error(origin, "kind", "must be one of fundamental, green-half, freefield-full, freefield-half");
}

/// Structural parse only; see validate_scenario for the semantic checks.
inline Scenario scenario_from_json(const Json& j, const std::string& origin,
                                   const std::filesystem::path& base_dir = {}) {
    using namespace detail;
    require_object(j, origin, "scenario");
    reject_unknown(j, {"schema_version", "material", "material_file", "kind", "omega", "source", "wave", "grid",
                       "points", "traction"},
                   origin, "");
    check_schema(j, origin);

    Scenario s;
    const Json& mat = member(j, "material", origin);
    if (mat.is_string()) {
        s.material_file = mat.get<std::string>();
        std::filesystem::path p(s.material_file);
        if (p.is_relative()) p = base_dir / p;
        s.material = material_from_json(parse_file(p), p.string());
    } else if (mat.is_object()) {
        s.material = material_from_json(mat, origin + " (material)", false);
        if (j.contains("material_file")) {
            if (!j["material_file"].is_string()) field_error(origin, "material_file", "must be a string");
            s.material_file = j["material_file"].get<std::string>();
        }
    } else {
        field_error(origin, "material", "must be a file path or an inline material object");
    }

    const Json& kind = member(j, "kind", origin);
    if (!kind.is_string()) field_error(origin, "kind", "must be a string");
    s.kind = kind_from_string(kind.get<std::string>(), origin);
    s.omega = number(j, "omega", origin);

    if (is_kernel_kind(s.kind)) {
        const auto src = pair(member(j, "source", origin), origin, "source");
        s.source = {src[0], src[1]};
        if (j.contains("wave")) field_error(origin, "wave", "is only valid for freefield kinds");
    } else {
        const Json& w = member(j, "wave", origin);
        require_object(w, origin, "wave");
        reject_unknown(w, {"mode", "amplitude", "phi"}, origin, "wave.");
        const Json& mode = member(w, "mode", origin, "wave.");
        if (mode == "S1")
            s.wave.mode = WaveMode::S1;
        else if (mode == "S2")
            s.wave.mode = WaveMode::S2;
        else
            field_error(origin, "wave.mode", "must be \"S1\" or \"S2\"");
        if (w.contains("amplitude")) {
            const auto a = pair(w["amplitude"], origin, "wave.amplitude");
            s.wave.amplitude = {a[0], a[1]};
        }
        s.wave.phi = number(w, "phi", origin, "wave.");
        if (j.contains("source")) field_error(origin, "source", "is only valid for fundamental and green-half kinds");
    }

    const bool has_grid = j.contains("grid");
    const bool has_points = j.contains("points");
    if (has_grid == has_points) field_error(origin, "grid", "exactly one of 'grid' or 'points' must be given");
    if (has_grid) {
        const Json& g = j["grid"];
        require_object(g, origin, "grid");
        reject_unknown(g, {"x1", "x2", "n1", "n2"}, origin, "grid.");
        GridSpec grid;
        const auto r1 = pair(member(g, "x1", origin, "grid."), origin, "grid.x1");
        const auto r2 = pair(member(g, "x2", origin, "grid."), origin, "grid.x2");
        grid.x1_min = r1[0];
        grid.x1_max = r1[1];
        grid.x2_min = r2[0];
        grid.x2_max = r2[1];
        grid.n1 = integer(g, "n1", origin, "grid.");
        grid.n2 = integer(g, "n2", origin, "grid.");
        s.grid = grid;
    } else {
        const Json& pts = j["points"];
        if (!pts.is_array()) field_error(origin, "points", "must be an array of [x1, x2] pairs");
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const auto p = pair(pts[i], origin, "points[" + std::to_string(i) + "]");
            s.points.push_back({p[0], p[1]});
        }
    }

    if (j.contains("traction")) {
        const Json& t = j["traction"];
        require_object(t, origin, "traction");
        reject_unknown(t, {"normal"}, origin, "traction.");
        const auto n = pair(member(t, "normal", origin, "traction."), origin, "traction.normal");
        s.traction_normal = Point2{n[0], n[1]};
    }
    return s;
}

/// A non-empty `material_override` replaces the scenario's "material" entry
/// with that file.
inline Scenario load_scenario(const std::filesystem::path& path, const std::string& material_override = {}) {
    Json j = detail::parse_file(path);
    if (!material_override.empty()) {
        if (!j.is_object()) detail::require_object(j, path.string(), "scenario");
        j.erase("material_file");
        j["material"] = std::filesystem::absolute(material_override).string();
    }
    return scenario_from_json(j, path.string(), path.parent_path());
}

/// Echo with the resolved material inlined; material_file is kept for
/// reference. scenario_from_json(scenario_to_json(s)) == s.
inline Json scenario_to_json(const Scenario& s) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    Json mat = material_to_json(s.material);
    mat.erase("schema_version");
    j["material"] = mat;
    if (!s.material_file.empty()) j["material_file"] = s.material_file;
    j["kind"] = to_string(s.kind);
    j["omega"] = s.omega;
    if (is_kernel_kind(s.kind)) {
        j["source"] = {s.source.x1, s.source.x2};
    } else {
        j["wave"] = {{"mode", s.wave.mode == WaveMode::S1 ? "S1" : "S2"},
                     {"amplitude", {s.wave.amplitude.real(), s.wave.amplitude.imag()}},
                     {"phi", s.wave.phi}};
    }
    if (s.grid) {
        j["grid"] = {{"x1", {s.grid->x1_min, s.grid->x1_max}},
                     {"x2", {s.grid->x2_min, s.grid->x2_max}},
                     {"n1", s.grid->n1},
                     {"n2", s.grid->n2}};
    } else {
        Json pts = Json::array();
        for (const auto& p : s.points) pts.push_back({p.x1, p.x2});
        j["points"] = pts;
    }
    if (s.traction_normal) j["traction"] = {{"normal", {s.traction_normal->x1, s.traction_normal->x2}}};
    return j;
}

/// Evaluation points in deterministic order: x2 rows outer, x1 inner.
inline std::vector<Point2> evaluation_points(const Scenario& s) {
    if (!s.grid) return s.points;
    const GridSpec& g = *s.grid;
    std::vector<Point2> out;
    out.reserve(static_cast<std::size_t>(g.n1 * g.n2));
    auto coord = [](double lo, double hi, long long n, long long i) {
        return n == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    };
    for (long long i2 = 0; i2 < g.n2; ++i2)
        for (long long i1 = 0; i1 < g.n1; ++i1)
            out.push_back({coord(g.x1_min, g.x1_max, g.n1, i1), coord(g.x2_min, g.x2_max, g.n2, i2)});
    return out;
}

/// Semantic checks performed before any evaluation.
inline void validate_scenario(const Scenario& s, const std::string& origin) {
    auto fail = [&](const std::string& what) { throw CliError(FailureKind::Validation, origin + ": " + what); };
    validate_material(s.material, origin);
    if (!(s.omega > 0.0) || !std::isfinite(s.omega)) fail("omega must be positive (NonPositiveFrequency)");
    if (s.grid) {
        if (s.grid->n1 < 1 || s.grid->n2 < 1) fail("grid counts n1, n2 must be at least 1");
        for (double v : {s.grid->x1_min, s.grid->x1_max, s.grid->x2_min, s.grid->x2_max})
            if (!std::isfinite(v)) fail("grid bounds must be finite");
    } else if (s.points.empty()) {
        fail("points must not be empty");
    }
    if (is_kernel_kind(s.kind)) {
        if (!std::isfinite(s.source.x1) || !std::isfinite(s.source.x2)) fail("source must be finite");
        if (s.kind == SolutionKind::GreenHalf && !(s.source.x2 < 0.0))
            fail("green-half requires a source strictly inside x2 < 0");
    } else {
        try {
            validate(s.wave);
        } catch (const Error& e) {
            fail(e.what());
        }
    }
    if (s.traction_normal) {
        try {
            require_unit_normal(*s.traction_normal);
        } catch (const Error& e) {
            fail(e.what());
        }
    }
    if (is_half_plane_kind(s.kind)) {
        for (const Point2& p : evaluation_points(s)) {
            if (!(p.x2 <= 0.0)) {
                std::ostringstream os;
                os.precision(17);
                os << "half-plane kinds require x2 <= 0 for every evaluation point; (" << p.x1 << ", " << p.x2
                   << ") violates it";
                fail(os.str());
            }
        }
    }
}

}  // namespace qcwave::cli

#endif  // QCWAVE_CLI_SCENARIO_HPP
