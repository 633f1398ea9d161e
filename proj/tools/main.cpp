#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "gonia/anthyphairesis.hpp"
#include "gonia/serialize.hpp"
#include "gonia/side_diameter.hpp"
#include "gonia/solid_angle.hpp"
#include "gonia/spherical.hpp"

namespace {

using namespace gonia;

struct OutputOptions {
    std::string format = "text";
    int precision = 10;
};

std::string fnum(double v, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
    return buf;
}

void add_output_options(CLI::App* cmd, OutputOptions& out, bool allow_csv) {
    std::vector<std::string> formats = {"text", "json"};
    if (allow_csv) formats.push_back("csv");
    cmd->add_option("--format", out.format, "output format")
        ->check(CLI::IsMember(formats))
        ->capture_default_str();
    cmd->add_option("--precision", out.precision, "significant digits for text output")
        ->check(CLI::Range(1, 17))
        ->capture_default_str();
}

void emit_json(const nlohmann::json& j) { std::cout << j.dump() << "\n"; }

double degrees_scale(bool degrees) { return degrees ? std::numbers::pi / 180.0 : 1.0; }

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void print_anth(const AnthOutcome& r, const OutputOptions& out) {
    if (out.format == "json") {
        emit_json(to_json(r));
        return;
    }
    auto list = [](const QuotientSeq& q) {
        std::string s = "[";
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (i) s += ", ";
            s += q[i].get_str();
        }
        return s + "]";
    };
    switch (r.kind) {
        case AnthOutcome::Kind::Finite:
            std::cout << "kind: finite\nquotients: " << list(r.quotients)
                      << "\ngcd: " << to_string(*r.gcd) << "\n";
            break;
        case AnthOutcome::Kind::Periodic:
            std::cout << "kind: periodic\npreperiod: " << list(r.quotients)
                      << "\nperiod: " << list(r.period) << "\n";
            break;
        case AnthOutcome::Kind::Truncated:
            std::cout << "kind: truncated\nquotients: " << list(r.quotients) << "\n";
            break;
    }
}

void run_anth(const std::string& a_text, const std::string& b_text, int max_terms,
              const OutputOptions& out) {
    Magnitude a = parse_magnitude(a_text);
    Magnitude b = parse_magnitude(b_text);
    print_anth(anth_magnitudes(a, b, max_terms), out);
}

void run_sidediam(int count, const OutputOptions& out) {
    auto rows = side_diameter_table(count);
    if (out.format == "json") {
        emit_json(to_json(rows));
    } else if (out.format == "csv") {
        std::cout << to_csv(rows);
    } else {
        std::cout << "n\tp\tq\tresidual\tclass\tapex_rad\tgap_rad\n";
        for (const auto& r : rows) {
            std::cout << r.n << '\t' << r.p.get_str() << '\t' << r.q.get_str() << '\t'
                      << r.residual.get_str() << '\t' << to_string(r.angle_class) << '\t'
                      << fnum(r.apex_rad, out.precision) << '\t'
                      << fnum(r.gap_rad, out.precision) << "\n";
        }
    }
}

void run_sphere_excess(std::vector<double> sides, const std::string& method,
                       std::uint64_t samples, std::uint64_t seed, bool degrees,
                       const OutputOptions& out) {
    double k = degrees_scale(degrees);
    SphericalTriangle t = make_triangle(k * sides[0], k * sides[1], k * sides[2]);

    nlohmann::json results = nlohmann::json::array();
    if (method == "girard" || method == "both") {
        AngleTriple ang = angles_from_sides(t);
        results.push_back(
            excess_result_json("girard", excess_from_angles(ang), std::nullopt, ang.clamp_used));
    }
    if (method == "lhuilier" || method == "both") {
        results.push_back(excess_result_json("lhuilier", excess_lhuilier(t), std::nullopt, 0.0));
    }
    if (method == "mc") {
        McEstimate mc = monte_carlo_excess(t, samples, seed);
        results.push_back(excess_result_json("mc", mc.value, mc.stderr_value, 0.0));
    }

    if (out.format == "json") {
        emit_json(results.size() == 1 ? results[0] : results);
        return;
    }
    for (const auto& r : results) {
        std::cout << r["method"].get<std::string>() << ": excess_sr = "
                  << fnum(r["excess_sr"].get<double>(), out.precision);
        if (!r["stderr"].is_null())
            std::cout << " +- " << fnum(r["stderr"].get<double>(), out.precision);
        std::cout << "\n";
    }
}

void run_solid_trihedral(std::vector<double> faces, bool degrees, const OutputOptions& out) {
    double k = degrees_scale(degrees);
    TrihedralAngle t = validate_trihedral(k * faces[0], k * faces[1], k * faces[2]);
    double omega = trihedral_solid_angle(t);
    if (out.format == "json") {
        nlohmann::json j;
        j["f1"] = t.f1;
        j["f2"] = t.f2;
        j["f3"] = t.f3;
        j["solid_angle_sr"] = omega;
        j["fraction_of_sphere"] = omega / (4.0 * std::numbers::pi);
        emit_json(j);
    } else {
        std::cout << "solid_angle_sr = " << fnum(omega, out.precision) << "\n";
    }
}

void run_solid_regular(int n, double alpha, bool degrees, const OutputOptions& out) {
    RegularVertexFigure fig = make_vertex_figure(n, degrees_scale(degrees) * alpha);
    double omega = regular_vertex_solid_angle(fig);
    if (out.format == "json") {
        nlohmann::json j;
        j["n"] = fig.n;
        j["alpha"] = fig.alpha;
        j["solid_angle_sr"] = omega;
        j["fraction_of_sphere"] = omega / (4.0 * std::numbers::pi);
        emit_json(j);
    } else {
        std::cout << "solid_angle_sr = " << fnum(omega, out.precision) << "\n";
    }
}

std::vector<SolidAngleRow> corpus_rows(const std::vector<VertexFigureEntry>& entries) {
    std::vector<SolidAngleRow> rows;
    rows.reserve(entries.size());
    for (const auto& e : entries) {
        RegularVertexFigure fig = make_vertex_figure(e.faces_at_vertex, e.apex_angle_rad);
        double omega = regular_vertex_solid_angle(fig);
        rows.push_back({e.name, fig.n, fig.alpha, omega, omega / (4.0 * std::numbers::pi)});
    }
    return rows;
}

void run_solid_platonic(const std::string& name, const std::string& data_path,
                        const OutputOptions& out) {
    std::vector<SolidAngleRow> rows;
    std::string path = data_path;
    if (path.empty()) {
        if (const char* env = std::getenv("GONIA_CORPUS")) path = env;
    }
    if (!path.empty()) {
        rows = corpus_rows(parse_corpus(read_file(path)));
    } else {
        rows = platonic_table();
    }
    if (name != "all") {
        std::vector<SolidAngleRow> picked;
        for (const auto& r : rows)
            if (r.name == name) picked.push_back(r);
        if (picked.empty()) throw DomainError("unknown solid: " + name);
        rows = std::move(picked);
    }
    if (out.format == "json") {
        emit_json(rows.size() == 1 ? to_json(rows[0]) : to_json(rows));
    } else if (out.format == "csv") {
        std::cout << to_csv(rows);
    } else {
        for (const auto& r : rows) {
            std::cout << r.name << ": n = " << r.n << ", alpha = "
                      << fnum(r.alpha, out.precision)
                      << ", solid_angle_sr = " << fnum(r.solid_angle_sr, out.precision)
                      << ", fraction_of_sphere = "
                      << fnum(r.fraction_of_sphere, out.precision) << "\n";
        }
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact anthyphairesis, Pell side/diameter sequences, spherical excess "
                 "and solid angle measures"};
    app.require_subcommand(1);

    // anth
    auto* anth = app.add_subcommand("anth", "reciprocal subtraction of two magnitudes");
    std::string anth_a, anth_b;
    int max_terms = 64;
    OutputOptions anth_out;
    anth->add_option("A", anth_a, "first magnitude, e.g. \"sqrt(2)\" or \"7/5\"")->required();
    anth->add_option("B", anth_b, "second magnitude")->required();
    anth->add_option("--max-terms", max_terms, "bound on emitted quotients")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_output_options(anth, anth_out, false);

    // sidediam
    auto* sidediam = app.add_subcommand("sidediam", "side and diameter number table");
    int count = 10;
    OutputOptions sd_out;
    sidediam->add_option("--count", count, "number of pairs")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_output_options(sidediam, sd_out, true);

    // sphere excess
    auto* sphere = app.add_subcommand("sphere", "spherical triangle computations");
    sphere->require_subcommand(1);
    auto* excess = sphere->add_subcommand("excess", "spherical excess from side lengths");
    std::vector<double> sides;
    std::string method = "both";
    std::uint64_t samples = 1000000, seed = 0;
    bool sphere_degrees = false;
    OutputOptions ex_out;
    excess->add_option("--sides", sides, "three great-circle side lengths (radians)")
        ->required()
        ->expected(3);
    excess->add_option("--method", method, "girard | lhuilier | both | mc")
        ->check(CLI::IsMember({"girard", "lhuilier", "both", "mc"}))
        ->capture_default_str();
    excess->add_option("--samples", samples, "monte carlo sample count")->capture_default_str();
    excess->add_option("--seed", seed, "monte carlo seed")->capture_default_str();
    excess->add_flag("--degrees", sphere_degrees, "sides are given in degrees");
    add_output_options(excess, ex_out, false);

    // solid
    auto* solid = app.add_subcommand("solid", "solid angle measures");
    solid->require_subcommand(1);

    auto* trihedral = solid->add_subcommand("trihedral", "solid angle from three face angles");
    std::vector<double> faces;
    bool tri_degrees = false;
    OutputOptions tri_out;
    trihedral->add_option("faces", faces, "face angles F1 F2 F3 (radians)")
        ->required()
        ->expected(3);
    trihedral->add_flag("--degrees", tri_degrees, "face angles are given in degrees");
    add_output_options(trihedral, tri_out, false);

    auto* regular = solid->add_subcommand("regular", "regular vertex figure solid angle");
    int reg_n = 3;
    double reg_alpha = 0.0;
    bool reg_degrees = false;
    OutputOptions reg_out;
    regular->add_option("--n", reg_n, "number of faces at the vertex")->required();
    regular->add_option("--alpha", reg_alpha, "common planar apex angle (radians)")->required();
    regular->add_flag("--degrees", reg_degrees, "alpha is given in degrees");
    add_output_options(regular, reg_out, false);

    auto* platonic = solid->add_subcommand("platonic", "platonic vertex solid angles");
    std::string solid_name = "all";
    std::string data_path;
    OutputOptions plat_out;
    platonic->add_option("name", solid_name, "solid name or 'all'");
    platonic->add_option("--data", data_path, "vertex-figure corpus JSON file");
    add_output_options(platonic, plat_out, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*anth) {
            run_anth(anth_a, anth_b, max_terms, anth_out);
        } else if (*sidediam) {
            run_sidediam(count, sd_out);
        } else if (*excess) {
            run_sphere_excess(sides, method, samples, seed, sphere_degrees, ex_out);
        } else if (*trihedral) {
            run_solid_trihedral(faces, tri_degrees, tri_out);
        } else if (*regular) {
            run_solid_regular(reg_n, reg_alpha, reg_degrees, reg_out);
        } else if (*platonic) {
            run_solid_platonic(solid_name, data_path, plat_out);
        }
    } catch (const NumericError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
