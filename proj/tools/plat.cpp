// plat — persistence lattice toolkit CLI.
//
// Subcommands: algebra eval|laws, sheaf check|glue,
//              homology betti|pairs|diagram, complex validate|print.
// Exit codes: 0 success, 1 validation/domain error, 2 law counterexample,
//             3 parse/usage error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "plattice/complex.hpp"
#include "plattice/expr.hpp"
#include "plattice/homology.hpp"
#include "plattice/laws.hpp"
#include "plattice/lifetime.hpp"
#include "plattice/order.hpp"
#include "plattice/sheaf.hpp"
#include "plattice/svg.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitCounterexample = 2;
constexpr int kExitUsage = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw plat::DomainError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        throw plat::DomainError("cannot write '" + out_path + "'");
    out << content;
}

plat::Bounds parse_bounds(const std::vector<std::string>& raw) {
    return plat::Bounds(plat::parse_rational(raw.at(0)), plat::parse_rational(raw.at(1)));
}

plat::FieldTag parse_field(const std::string& name) {
    if (name == "f2")
        return plat::FieldTag::F2;
    if (name == "q")
        return plat::FieldTag::Q;
    throw CLI::ValidationError("--field must be f2 or q");
}

int run_algebra_eval(const std::string& expr, const plat::Bounds& bounds, unsigned decimals) {
    plat::ExprValue value = plat::eval_expression(expr, bounds);
    std::cout << plat::to_string(value, decimals) << "\n";
    return kExitOk;
}

int run_algebra_laws(std::uint64_t seed, std::size_t samples, const plat::Bounds& bounds) {
    std::vector<plat::laws::LawReport> reports = plat::laws::run_all(seed, bounds, samples);
    bool all_ok = true;
    for (const plat::laws::LawReport& report : reports) {
        if (report.ok) {
            std::cout << report.name << ": " << report.checked << "/" << report.checked
                      << "\n";
        } else {
            all_ok = false;
            std::cout << report.name << ": FAILED after " << report.checked << " samples\n";
            std::cout << "counterexample: " << report.counterexample << "\n";
        }
    }
    if (!all_ok)
        return kExitCounterexample;
    std::cout << "all laws hold (seed " << seed << ", " << samples << " samples per suite)\n";
    return kExitOk;
}

int run_sheaf(const std::string& path, const plat::Bounds& bounds, bool do_glue,
              unsigned decimals) {
    plat::Cover cover = plat::parse_cover(read_file(path), bounds);
    auto render = [&](const plat::Lifetime& a) {
        return decimals > 0 ? plat::to_decimal_string(a, decimals) : plat::to_string(a);
    };
    std::cout << "items=" << cover.items().size() << "\n";
    std::cout << "base=" << render(cover.base()) << "\n";
    auto bad = plat::find_incompatible_pair(cover);
    std::cout << "compatible=" << (bad ? "false" : "true") << "\n";
    if (bad) {
        const plat::CoverItem& lhs = cover.items()[bad->first];
        const plat::CoverItem& rhs = cover.items()[bad->second];
        std::cerr << "incompatible family: items " << bad->first << " and " << bad->second
                  << " disagree on the overlap: "
                  << render(plat::meet(lhs.section, rhs.patch)) << " vs "
                  << render(plat::meet(rhs.section, lhs.patch)) << "\n";
        return kExitValidation;
    }
    if (do_glue) {
        plat::Lifetime glued = plat::glue(cover);
        std::cout << "glued=" << render(glued) << "\n";
        for (std::size_t i = 0; i < cover.items().size(); ++i) {
            const plat::CoverItem& item = cover.items()[i];
            plat::Lifetime back = plat::restrict_section(glued, cover.base(), item.patch);
            std::cout << "restrict[" << i << "]=" << render(back)
                      << (back == item.section ? " ok" : " MISMATCH") << "\n";
        }
    }
    return kExitOk;
}

int run_homology_betti(const std::string& path, std::optional<int> dim, plat::FieldTag field,
                       const std::string& format, const std::string& out_path) {
    plat::VariableComplex complex = plat::parse_complex(read_file(path));
    std::vector<plat::BettiCurve> curves;
    if (dim)
        curves.push_back(plat::betti_curve(complex, *dim, field));
    else
        curves = plat::all_betti_curves(complex, field);
    if (format == "svg")
        emit(plat::barcode_svg(curves), out_path);
    else
        emit(plat::curves_to_csv(curves), out_path);
    return kExitOk;
}

int run_homology_pairs(const std::string& path, std::optional<int> dim, plat::FieldTag field,
                       const std::string& out_path) {
    plat::VariableComplex complex = plat::parse_complex(read_file(path));
    std::vector<plat::PersistencePair> pairs = plat::persistence_pairs(complex, field);
    if (dim) {
        std::erase_if(pairs, [&](const plat::PersistencePair& p) { return p.dimension != *dim; });
    }
    emit(plat::pairs_to_csv(pairs), out_path);
    return kExitOk;
}

int run_homology_diagram(const std::string& path, std::optional<int> dim,
                         plat::FieldTag field, bool collapse, const std::string& out_path) {
    plat::VariableComplex complex = plat::parse_complex(read_file(path));
    std::vector<plat::PersistencePair> pairs = plat::persistence_pairs(complex, field);
    if (dim) {
        std::erase_if(pairs, [&](const plat::PersistencePair& p) { return p.dimension != *dim; });
    }
    plat::PersistenceDiagram d = plat::diagram(pairs, complex.bounds());
    if (collapse)
        d = plat::collapse_multiplicity(std::move(d));
    emit(plat::diagram_svg(d, complex.bounds()), out_path);
    return kExitOk;
}

int run_complex_validate(const std::string& path) {
    plat::VariableComplex complex = plat::parse_complex(read_file(path));
    std::cout << "valid: " << complex.entries().size() << " simplices, max dimension "
              << complex.max_dim() << ", bounds (" << plat::to_string(complex.bounds().eps1())
              << "," << plat::to_string(complex.bounds().eps2()) << ")\n";
    return kExitOk;
}

int run_complex_print(const std::string& path, const std::string& out_path) {
    emit(plat::print_complex(plat::parse_complex(read_file(path))), out_path);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"plat — persistence lattice toolkit"};
    app.require_subcommand(1);

    std::vector<std::string> bounds_raw{"10", "10"};
    std::string field_name = "f2";
    std::string format = "csv";
    std::string out_path;
    std::string input_path;
    std::string expr_text;
    std::uint64_t seed = 0;
    long long samples = 1000;
    int dim_flag = -1;
    unsigned decimals = 0;
    bool collapse = false;

    auto add_bounds = [&](CLI::App* cmd) {
        cmd->add_option("--bounds", bounds_raw, "carrier bounds E1 E2")->expected(2);
    };
    auto add_decimals = [&](CLI::App* cmd) {
        cmd->add_option("--decimals", decimals, "render decimal approximations");
    };

    CLI::App* algebra = app.add_subcommand("algebra", "lattice algebra of lifetimes");
    CLI::App* alg_eval = algebra->add_subcommand("eval", "evaluate an algebra expression");
    alg_eval->add_option("expr", expr_text, "expression, e.g. '(1,4) ^ (3,7)'")->required();
    add_bounds(alg_eval);
    add_decimals(alg_eval);

    CLI::App* alg_laws = algebra->add_subcommand("laws", "run seeded law suites");
    alg_laws->add_option("--samples", samples, "samples per suite");
    alg_laws->add_option("--seed", seed, "random seed");
    add_bounds(alg_laws);

    CLI::App* sheaf = app.add_subcommand("sheaf", "covers and sections of the canonical sheaf");
    CLI::App* sheaf_check = sheaf->add_subcommand("check", "check compatibility of a cover file");
    sheaf_check->add_option("file", input_path, "cover file")->required();
    add_bounds(sheaf_check);
    add_decimals(sheaf_check);
    CLI::App* sheaf_glue = sheaf->add_subcommand("glue", "glue a compatible cover file");
    sheaf_glue->add_option("file", input_path, "cover file")->required();
    add_bounds(sheaf_glue);
    add_decimals(sheaf_glue);

    CLI::App* homology = app.add_subcommand("homology", "homology of variable complexes");
    CLI::App* hom_betti = homology->add_subcommand("betti", "betti curves over time");
    hom_betti->add_option("file", input_path, "complex file")->required();
    hom_betti->add_option("--dim", dim_flag, "restrict to one dimension");
    hom_betti->add_option("--field", field_name, "f2 or q");
    hom_betti->add_option("--format", format, "csv or svg");
    hom_betti->add_option("--out", out_path, "write output to a file");
    CLI::App* hom_pairs = homology->add_subcommand("pairs", "persistence pairs (filtrations)");
    hom_pairs->add_option("file", input_path, "complex file")->required();
    hom_pairs->add_option("--dim", dim_flag, "restrict to one dimension");
    hom_pairs->add_option("--field", field_name, "f2 or q");
    hom_pairs->add_option("--out", out_path, "write output to a file");
    CLI::App* hom_diagram = homology->add_subcommand("diagram", "persistence diagram SVG");
    hom_diagram->add_option("file", input_path, "complex file")->required();
    hom_diagram->add_option("--dim", dim_flag, "restrict to one dimension");
    hom_diagram->add_option("--field", field_name, "f2 or q");
    hom_diagram->add_option("--out", out_path, "write output to a file");
    hom_diagram->add_flag("--collapse-multiplicity", collapse,
                          "render every diagram point with multiplicity 1");

    CLI::App* complex_cmd = app.add_subcommand("complex", "complex files");
    CLI::App* cx_validate = complex_cmd->add_subcommand("validate", "parse and validate");
    cx_validate->add_option("file", input_path, "complex file")->required();
    CLI::App* cx_print = complex_cmd->add_subcommand("print", "canonical rendering");
    cx_print->add_option("file", input_path, "complex file")->required();
    cx_print->add_option("--out", out_path, "write output to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*alg_eval)
            return run_algebra_eval(expr_text, parse_bounds(bounds_raw), decimals);
        if (*alg_laws) {
            if (samples <= 0) {
                std::cerr << "usage error: --samples must be positive\n";
                return kExitUsage;
            }
            return run_algebra_laws(seed, static_cast<std::size_t>(samples),
                                    parse_bounds(bounds_raw));
        }
        if (*sheaf_check)
            return run_sheaf(input_path, parse_bounds(bounds_raw), false, decimals);
        if (*sheaf_glue)
            return run_sheaf(input_path, parse_bounds(bounds_raw), true, decimals);

        std::optional<int> dim;
        if (dim_flag >= 0)
            dim = dim_flag;
        if (*hom_betti) {
            if (format != "csv" && format != "svg") {
                std::cerr << "usage error: --format must be csv or svg\n";
                return kExitUsage;
            }
            return run_homology_betti(input_path, dim, parse_field(field_name), format,
                                      out_path);
        }
        if (*hom_pairs)
            return run_homology_pairs(input_path, dim, parse_field(field_name), out_path);
        if (*hom_diagram)
            return run_homology_diagram(input_path, dim, parse_field(field_name), collapse,
                                        out_path);
        if (*cx_validate)
            return run_complex_validate(input_path);
        if (*cx_print)
            return run_complex_print(input_path, out_path);
        std::cerr << "usage error: no subcommand selected\n";
        return kExitUsage;
    } catch (const plat::ComplexError& e) {
        std::cerr << "complex error (" << plat::to_string(e.kind) << "): " << e.what() << "\n";
        return e.kind == plat::ComplexError::Kind::Syntax ? kExitUsage : kExitValidation;
    } catch (const plat::ParseError& e) {
        std::cerr << "parse error";
        if (e.position != plat::ParseError::npos)
            std::cerr << " at position " << e.position;
        std::cerr << ": " << e.what() << "\n";
        return kExitUsage;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const plat::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
}
