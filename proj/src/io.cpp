#include "elastica/io.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <numbers>
#include <sstream>

#include "elastica/errors.hpp"

namespace elastica {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kPolylineFitHarmonics = 16;
}  // namespace

nlohmann::json RunManifest::to_json() const {
    nlohmann::json j;
    j["command"] = command;
    j["input_paths"] = input_paths;
    j["config"] = config_echo;
    j["tool_version"] = tool_version;
    j["seed"] = seed;
    j["timestamp"] = timestamp.empty() ? current_utc_timestamp() : timestamp;
    return j;
}

std::string current_utc_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

ConvexShape shape_from_json(const nlohmann::json& j) {
    if (j.contains("polyline")) {
        std::vector<Vec2> pts;
        for (const auto& row : j.at("polyline")) {
            if (!row.is_array() || row.size() != 2)
                throw OutOfRange("shape: polyline entries must be [x, y] pairs");
            pts.push_back({row[0].get<double>(), row[1].get<double>()});
        }
        if (pts.size() < 3) throw DegenerateShape("shape: polyline needs at least 3 points");

        // Support samples of the point cloud, then a truncated trigonometric
        // projection; a genuinely convex polyline is reproduced closely.
        const int m = 2048;
        std::vector<double> h(m);
        for (int i = 0; i < m; ++i) {
            const Vec2 u = unit_dir(kTwoPi * i / m);
            double best = -std::numeric_limits<double>::infinity();
            for (const Vec2& p : pts) best = std::max(best, dot(p, u));
            h[static_cast<size_t>(i)] = best;
        }
        ConvexShape shape;
        shape.a0 = 0.0;
        for (int i = 0; i < m; ++i) shape.a0 += h[static_cast<size_t>(i)] / m;
        shape.cos_coeffs.assign(kPolylineFitHarmonics, 0.0);
        shape.sin_coeffs.assign(kPolylineFitHarmonics, 0.0);
        for (int k = 1; k <= kPolylineFitHarmonics; ++k) {
            double ck = 0.0, sk = 0.0;
            for (int i = 0; i < m; ++i) {
                const double th = kTwoPi * i / m;
                ck += h[static_cast<size_t>(i)] * std::cos(k * th);
                sk += h[static_cast<size_t>(i)] * std::sin(k * th);
            }
            // Lanczos sigma factor: tames Gibbs oscillation of the truncated
            // series so mildly polygonal input stays convex.
            const double x = std::numbers::pi * k / (kPolylineFitHarmonics + 1);
            const double sigma = std::sin(x) / x;
            shape.cos_coeffs[static_cast<size_t>(k - 1)] = sigma * 2.0 * ck / m;
            shape.sin_coeffs[static_cast<size_t>(k - 1)] = sigma * 2.0 * sk / m;
        }
        validate_shape(shape);
        // A reflex vertex of a nonconvex input sits strictly inside the
        // convex support body; reject when any vertex is that far off.
        const double tol = 2e-2 * shape.a0;
        for (const Vec2& p : pts) {
            double depth = std::numeric_limits<double>::infinity();
            for (int i = 0; i < m; ++i) {
                const double th = kTwoPi * i / m;
                depth = std::min(depth, shape.support(th) - dot(p, unit_dir(th)));
            }
            if (depth > tol)
                throw ConvexityViolation("shape: polyline is not convex (vertex strictly inside its convex support body)");
        }
        return shape;
    }

    ConvexShape shape;
    shape.a0 = j.at("a0").get<double>();
    if (j.contains("cos")) shape.cos_coeffs = j.at("cos").get<std::vector<double>>();
    if (j.contains("sin")) shape.sin_coeffs = j.at("sin").get<std::vector<double>>();
    validate_shape(shape);
    return shape;
}

ConvexShape read_shape(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open shape file: " + path);
    nlohmann::json j;
    in >> j;
    return shape_from_json(j);
}

nlohmann::json shape_to_json(const ConvexShape& shape) {
    nlohmann::json j;
    j["a0"] = shape.a0;
    j["cos"] = shape.cos_coeffs;
    j["sin"] = shape.sin_coeffs;
    return j;
}

nlohmann::json energy_to_json(const EnergyBreakdown& e, const RunManifest& manifest) {
    nlohmann::json j;
    j["p"] = e.p;
    j["lambda"] = e.lambda;
    j["avg_distance_term"] = e.avg_distance_term;
    j["elastica_term"] = e.elastica_term;
    j["total"] = e.total;
    j["manifest"] = manifest.to_json();
    return j;
}

nlohmann::json bounds_to_json(const BoundsReport& report, const RunManifest& manifest) {
    nlohmann::json j;
    j["shape_id"] = report.shape_id;
    j["p"] = report.p;
    j["lambda"] = report.lambda;
    j["energy"] = report.energy;
    j["all_satisfied"] = report.all_satisfied();
    j["entries"] = nlohmann::json::array();
    for (const auto& e : report.entries) {
        j["entries"].push_back({{"name", e.name},
                                {"lhs", e.lhs},
                                {"rhs", e.rhs},
                                {"satisfied", e.satisfied},
                                {"note", e.citation}});
    }
    j["skipped"] = report.skipped;
    j["manifest"] = manifest.to_json();
    return j;
}

std::string bounds_to_table(const BoundsReport& report) {
    std::ostringstream out;
    out << "bounds report";
    if (!report.shape_id.empty()) out << " for " << report.shape_id;
    char line[160];
    std::snprintf(line, sizeof(line), "  (p=%g, lambda=%g, E=%.10g)\n",
                  report.p, report.lambda, report.energy);
    out << line;
    std::snprintf(line, sizeof(line), "%-22s %18s %18s  %s\n", "check", "lhs", "rhs", "status");
    out << line;
    for (const auto& e : report.entries) {
        std::snprintf(line, sizeof(line), "%-22s %18.10g %18.10g  %s\n", e.name.c_str(),
                      e.lhs, e.rhs, e.satisfied ? "PASS" : "FAIL");
        out << line;
    }
    for (const auto& s : report.skipped) out << "skipped: " << s << "\n";
    return out.str();
}

nlohmann::json competitor_to_json(const SweepReport& report, const RunManifest& manifest) {
    nlohmann::json j;
    j["rows"] = nlohmann::json::array();
    for (const auto& r : report.rows) {
        j["rows"].push_back({{"eps", r.eps},
                             {"M", r.M},
                             {"delta_avg", r.delta_avg},
                             {"f_rhs", r.f_bound_rhs},
                             {"delta_elastica", r.delta_elastica},
                             {"hausdorff_gap", r.hausdorff_gap},
                             {"piece_deltas",
                              {r.piece_deltas[0], r.piece_deltas[1], r.piece_deltas[2],
                               r.piece_deltas[3]}}});
    }
    j["fitted_linear"] = report.fitted_linear;
    j["fitted_three_half"] = report.fitted_three_half;
    j["k_limit"] = report.k_limit;
    j["checks"] = {{"hausdorff_ok", report.checks.hausdorff_ok},
                   {"f_ok", report.checks.f_ok},
                   {"translation_ok", report.checks.translation_ok},
                   {"homothety_ok", report.checks.homothety_ok},
                   {"stretch_ok", report.checks.stretch_ok},
                   {"k_fit_ok", report.checks.k_fit_ok},
                   {"all_ok", report.checks.all_ok()}};
    j["manifest"] = manifest.to_json();
    return j;
}

std::string trace_to_csv(const OptimizationTrace& trace) {
    std::ostringstream out;
    out << "iter,energy,avg_term,elastica_term,grad_norm,min_curv_radius\n";
    for (const auto& r : trace.rows) {
        out << r.iter << ',' << format_double(r.energy) << ',' << format_double(r.avg_term)
            << ',' << format_double(r.elastica_term) << ',' << format_double(r.grad_norm)
            << ',' << format_double(r.min_curvature_radius) << '\n';
    }
    return out.str();
}

namespace {
const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};
}

std::string shape_svg(const std::vector<BoundaryCurve>& curves,
                      const std::vector<std::string>& labels) {
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (const auto& c : curves)
        for (const auto& p : c.points) {
            xmin = std::min(xmin, p.x);
            xmax = std::max(xmax, p.x);
            ymin = std::min(ymin, p.y);
            ymax = std::max(ymax, p.y);
        }
    if (curves.empty()) xmin = ymin = -1.0, xmax = ymax = 1.0;
    const double span = std::max(xmax - xmin, ymax - ymin);
    const double margin = 0.1 * span;
    const double scale = 480.0 / (span + 2.0 * margin);
    auto sx = [&](double x) { return (x - xmin + margin) * scale + 10.0; };
    auto sy = [&](double y) { return 490.0 - (y - ymin + margin) * scale; };

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"500\" height=\"500\" "
           "viewBox=\"0 0 500 500\">\n";
    for (size_t ci = 0; ci < curves.size(); ++ci) {
        const char* color = kPalette[ci % 5];
        out << "  <path fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" d=\"";
        const auto& pts = curves[ci].points;
        for (size_t i = 0; i < pts.size(); ++i) {
            char seg[64];
            std::snprintf(seg, sizeof(seg), "%c%.3f %.3f ", i == 0 ? 'M' : 'L',
                          sx(pts[i].x), sy(pts[i].y));
            out << seg;
        }
        out << "Z\"/>\n";
        if (ci < labels.size() && !labels[ci].empty()) {
            out << "  <text x=\"15\" y=\"" << (20 + 18 * ci) << "\" fill=\"" << color
                << "\" font-size=\"14\">" << labels[ci] << "</text>\n";
        }
    }
    out << "</svg>\n";
    return out.str();
}

std::string trace_svg(const std::vector<TraceRow>& rows) {
    double emin = 1e300, emax = -1e300;
    for (const auto& r : rows) {
        emin = std::min(emin, r.energy);
        emax = std::max(emax, r.energy);
    }
    if (rows.empty()) emin = 0.0, emax = 1.0;
    if (emax - emin < 1e-12) emax = emin + 1.0;
    const double n = std::max<size_t>(rows.size() - 1, 1);

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"400\" "
           "viewBox=\"0 0 600 400\">\n"
        << "  <line x1=\"50\" y1=\"360\" x2=\"580\" y2=\"360\" stroke=\"#000\"/>\n"
        << "  <line x1=\"50\" y1=\"360\" x2=\"50\" y2=\"20\" stroke=\"#000\"/>\n"
        << "  <text x=\"300\" y=\"390\" font-size=\"13\">iteration</text>\n"
        << "  <text x=\"10\" y=\"30\" font-size=\"13\">energy</text>\n"
        << "  <polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" points=\"";
    for (size_t i = 0; i < rows.size(); ++i) {
        const double x = 50.0 + 530.0 * static_cast<double>(i) / n;
        const double y = 360.0 - 340.0 * (rows[i].energy - emin) / (emax - emin);
        char seg[48];
        std::snprintf(seg, sizeof(seg), "%.2f,%.2f ", x, y);
        out << seg;
    }
    out << "\"/>\n</svg>\n";
    return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace elastica
