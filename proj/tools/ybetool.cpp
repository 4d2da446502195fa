// Command-line front end: validate, analyze, and diagonalize finite
// set-theoretic Yang-Baxter solutions from .ybe files.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "ybe/cotwist.hpp"
#include "ybe/enumerate.hpp"
#include "ybe/exterior.hpp"
#include "ybe/io.hpp"
#include "ybe/retraction.hpp"

using namespace ybe;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitInputError = 2;

struct Options {
    long long max_group = 1000000;
    int max_degree = 3;
};

int cmd_validate(const std::string& file) {
    ParsedSolution ps = load_solution(file);
    AxiomReport rep = check_axioms(ps.qs);
    std::cout << "file: " << file << "\n" << report_axioms(ps.qs, rep);
    return rep.symmetric_set ? kExitOk : kExitPropertyFailure;
}

int cmd_analyze(const std::string& file, const Options& opt) {
    ParsedSolution ps = load_solution(file);
    std::cout << "file: " << file << "\n" << report_analyze(ps.qs, opt.max_group);
    return kExitOk;
}

int cmd_datum(const std::string& file, const Options& opt) {
    ParsedSolution ps = load_solution(file);
    OrbitDecomposition orb = orbits(ps.qs);
    BasisOverride ov = resolve_basis_override(ps, orb);
    CompleteDatum d = build_datum(ps.qs, ov.empty() ? std::nullopt : std::make_optional(ov),
                                  opt.max_group);
    std::cout << "file: " << file << "\n" << report_datum(ps.qs, d);
    return kExitOk;
}

int cmd_diagonalize(const std::string& file, const std::string& basis_file, const Options& opt) {
    ParsedSolution ps = load_solution(file);
    OrbitDecomposition orb = orbits(ps.qs);
    if (!basis_file.empty()) {
        UserBasis basis = load_basis_file(basis_file, ps.qs, orb);
        BasisCheckResult res = check_diagonal_in_basis(ps.qs, orb, basis);
        std::cout << "file: " << file << "\n" << report_basis_check(ps.qs, basis, res);
        return res.diagonalizable ? kExitOk : kExitPropertyFailure;
    }
    BasisOverride ov = resolve_basis_override(ps, orb);
    CompleteDatum d = build_datum(ps.qs, ov.empty() ? std::nullopt : std::make_optional(ov),
                                  opt.max_group);
    DiagonalBasis y = build_y_basis(d);
    EigenReport er = eigen_check(ps.qs, d, y);
    if (!er.ok) fail(Errc::Internal, "eigenvector check failed: " + er.failure);
    MuTable mu = mu_table(d);
    DiagonalReport rep = verify_diagonal(ps.qs, d, y, mu);
    std::cout << "file: " << file << "\n" << report_diagonalize(ps.qs, d, y, mu, rep);
    return rep.ok ? kExitOk : kExitPropertyFailure;
}

int cmd_relations(const std::string& file, const std::string& basis, bool calculus,
                  const Options& opt) {
    ParsedSolution ps = load_solution(file);
    if (basis == "x") {
        for (const auto& line : relations_x(ps.qs).lines) std::cout << line << "\n";
        if (calculus) {
            // Self-check of the exterior model before printing its relations.
            ExteriorModel model(ps.qs);
            if (!model.d_squared_zero(opt.max_degree) || !model.graded_leibniz(opt.max_degree))
                fail(Errc::Internal, "exterior model self-check failed");
            for (const auto& line : calculus_relations_x(ps.qs).lines) std::cout << line << "\n";
        }
        return kExitOk;
    }
    if (basis != "y") fail(Errc::SyntaxError, "--basis must be x or y");
    OrbitDecomposition orb = orbits(ps.qs);
    BasisOverride ov = resolve_basis_override(ps, orb);
    CompleteDatum d = build_datum(ps.qs, ov.empty() ? std::nullopt : std::make_optional(ov),
                                  opt.max_group);
    MuTable mu = mu_table(d);
    for (const auto& line : relations_y(ps.qs, d, mu).lines) std::cout << line << "\n";
    if (calculus)
        for (const auto& line : calculus_relations_y(ps.qs, d, mu).lines)
            std::cout << line << "\n";
    return kExitOk;
}

int cmd_cotwist(const std::string& file) {
    ParsedSolution ps = load_solution(file);
    RcotwistReport rep = rcotwist_report(ps.qs);
    std::cout << "file: " << file << "\n" << report_cotwist(ps.qs, rep);
    return kExitOk;
}

int cmd_enumerate(int order, bool dedup, const std::string& csv_path, const Options& opt) {
    ClassifyRow row = classify(order, dedup, 6, opt.max_group);
    std::string text = classify_csv_header() + "\n" + classify_csv_row(row) + "\n";
    std::cout << text;
    if (!csv_path.empty()) {
        std::ofstream out(csv_path);
        if (!out) fail(Errc::SyntaxError, "cannot write " + csv_path);
        out << text;
    }
    return kExitOk;
}

int cmd_graph(const std::string& file, const std::string& out_path) {
    ParsedSolution ps = load_solution(file);
    OrbitDecomposition orb = orbits(ps.qs);
    std::string dot = export_dot(ps.qs, orb);
    if (out_path.empty() || out_path == "-") {
        std::cout << dot;
    } else {
        std::ofstream out(out_path);
        if (!out) fail(Errc::SyntaxError, "cannot write " + out_path);
        out << dot;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite set-theoretic Yang-Baxter solutions: validation, invariants, "
                 "exact diagonalization"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--max-group", opt.max_group, "cap on permutation group closures");
    app.add_option("--max-degree", opt.max_degree, "degree bound for algebra self-checks");

    std::string file, basis_file, basis_kind = "x", csv_path, out_path;
    bool calculus = false, dedup = false;
    int order = 0;

    auto* validate = app.add_subcommand("validate", "axiom report; exit 0 iff symmetric set");
    validate->add_option("FILE", file)->required();

    auto* analyze = app.add_subcommand("analyze", "orbits, group order, abelianness, mpl chain");
    analyze->add_option("FILE", file)->required();

    auto* datum = app.add_subcommand("datum", "complete datum report (multipermutation level 2)");
    datum->add_option("FILE", file)->required();

    auto* diagonalize = app.add_subcommand("diagonalize", "diagonal basis and mu table, or "
                                                          "check a user-supplied basis");
    diagonalize->add_option("FILE", file)->required();
    diagonalize->add_option("--check-basis", basis_file, "basis file to test");

    auto* relations = app.add_subcommand("relations", "defining relations of the quantum algebra");
    relations->add_option("FILE", file)->required();
    relations->add_option("--basis", basis_kind, "x or y")->required();
    relations->add_flag("--calculus", calculus, "include differential calculus relations");

    auto* cotwist = app.add_subcommand("cotwist", "f-map factorization and YBE equivalences");
    cotwist->add_option("FILE", file)->required();

    auto* enumerate = app.add_subcommand("enumerate", "classify all square-free symmetric sets "
                                                      "of a given order");
    enumerate->add_option("--order", order, "set size")->required();
    enumerate->add_flag("--dedup", dedup, "also count isomorphism classes");
    enumerate->add_option("--csv", csv_path, "write the table to a file");

    auto* graph = app.add_subcommand("graph", "DOT export of the left actions");
    graph->add_option("FILE", file)->required();
    graph->add_option("-o", out_path, "output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (validate->parsed()) return cmd_validate(file);
        if (analyze->parsed()) return cmd_analyze(file, opt);
        if (datum->parsed()) return cmd_datum(file, opt);
        if (diagonalize->parsed()) return cmd_diagonalize(file, basis_file, opt);
        if (relations->parsed()) return cmd_relations(file, basis_kind, calculus, opt);
        if (cotwist->parsed()) return cmd_cotwist(file);
        if (enumerate->parsed()) return cmd_enumerate(order, dedup, csv_path, opt);
        if (graph->parsed()) return cmd_graph(file, out_path);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return is_input_error(e.code) ? kExitInputError : kExitPropertyFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
