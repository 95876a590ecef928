// tiealg — batch front end for exact computations in the tied braid algebra.
//
// Subcommands: nf, dim, check, repr, diagram, certify.  All output goes to
// stdout unless --out names a file; every command is deterministic, so
// identical invocations produce byte-identical bytes.  Exit codes: 0 success,
// 2 malformed input, 3 refused request (budget or unsupported size),
// 4 violated internal invariant.

#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "tiealg/certify.hpp"
#include "tiealg/diagram.hpp"
#include "tiealg/element.hpp"
#include "tiealg/errors.hpp"
#include "tiealg/identities.hpp"
#include "tiealg/induced.hpp"
#include "tiealg/rewrite.hpp"
#include "tiealg/span_basis.hpp"
#include "tiealg/wreath.hpp"

namespace {

using nlohmann::ordered_json;

void emit(const std::string& out_path, const std::string& payload) {
    if (out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw tiealg::InputError("cannot open output file: " + out_path);
    file << payload;
}

void require_strands(int n) {
    if (n < 2) throw tiealg::InputError("strand count must be at least 2");
}

std::string run_nf(int n, const std::string& element_text) {
    require_strands(n);
    const tiealg::Element reduced = tiealg::normal_form(tiealg::Element::parse(n, element_text));
    return reduced.to_string() + "\n";
}

std::string run_dim(int n) {
    require_strands(n);
    const tiealg::DimensionReport report = tiealg::dimension(n);
    return std::to_string(report.dimension) + (report.exact ? " exact" : " lower-bound") + "\n";
}

std::string run_check(int n, const std::string& suite) {
    require_strands(n);
    std::vector<tiealg::IdentityCase> cases;
    if (suite == "relations")
        cases = tiealg::defining_relation_cases(n);
    else if (suite == "derived")
        cases = tiealg::derived_identity_cases(n);
    else if (suite == "skein")
        cases = tiealg::skein_cases(n);
    else if (suite == "all")
        cases = tiealg::full_corpus(n);
    else
        throw tiealg::InputError("unknown suite '" + suite +
                                 "' (expected relations, derived, skein, or all)");

    std::string report;
    std::vector<std::string> failures;
    for (const auto& item : cases) {
        const tiealg::Element lhs = tiealg::Element::parse(item.n, item.lhs);
        const tiealg::Element rhs = tiealg::Element::parse(item.n, item.rhs);
        if (tiealg::check_identity(lhs, rhs)) {
            report += "ok " + item.name + "\n";
        } else {
            report += "FAIL " + item.name + "\n";
            failures.push_back(item.name);
        }
    }
    report += "checked " + std::to_string(cases.size()) + " identities (" + suite + ", " +
              std::to_string(n) + " strands): ";
    if (failures.empty()) {
        report += "all hold\n";
        return report;
    }
    report += std::to_string(failures.size()) + " failed\n";
    std::cout << report;
    throw tiealg::RelationViolation("identity '" + failures.front() +
                                    "' reduced to a nonzero element");
}

ordered_json matrix_json(const tiealg::RationalMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        ordered_json row = ordered_json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

ordered_json rep_json(const tiealg::TiedAlgebraRep& rep) {
    ordered_json out;
    out["label"] = rep.label;
    out["strands"] = rep.strands;
    out["dim"] = rep.dim;
    ordered_json crossings = ordered_json::array();
    ordered_json ties = ordered_json::array();
    for (int i = 1; i < rep.strands; ++i) {
        crossings.push_back(matrix_json(rep.crossing_matrix(i)));
        ties.push_back(matrix_json(rep.tie_matrix(i)));
    }
    out["T"] = std::move(crossings);
    out["E"] = std::move(ties);
    return out;
}

// Splits the tail of a "bip:" selector into its two partition strings; each
// slot is either "phi" or a bracketed partition, joined by a single comma.
std::pair<std::string, std::string> split_bipartition(const std::string& tail) {
    std::size_t cut = std::string::npos;
    if (tail.rfind("phi,", 0) == 0) {
        cut = 3;
    } else if (!tail.empty() && tail.front() == '[') {
        const std::size_t close = tail.find(']');
        if (close != std::string::npos && close + 1 < tail.size() && tail[close + 1] == ',')
            cut = close + 1;
    }
    if (cut == std::string::npos)
        throw tiealg::SyntaxError("bipartition selector must look like bip:[2],[1]", 0);
    return {tail.substr(0, cut), tail.substr(cut + 1)};
}

std::string run_repr(int n, const std::string& which) {
    std::vector<tiealg::TiedAlgebraRep> reps;
    int inferred = 0;

    if (which == "list") {
        inferred = 3;
        for (auto& rep : tiealg::irreps_three_strand()) reps.push_back(std::move(rep));
    } else if (which.rfind("bip:", 0) == 0) {
        const auto [first_text, second_text] = split_bipartition(which.substr(4));
        const tiealg::Partition first = tiealg::Partition::parse(first_text);
        const tiealg::Partition second = tiealg::Partition::parse(second_text);
        inferred = first.size() + second.size();
        reps.push_back(to_tied_rep(tiealg::InducedModule(first, second)));
    } else if (which.rfind("plusminus:", 0) == 0) {
        const tiealg::Partition half = tiealg::Partition::parse(which.substr(10));
        if (half.is_empty())
            throw tiealg::InputError("plusminus needs a nonempty partition");
        inferred = 2 * half.size();
        auto [plus, minus] = tiealg::plus_minus_split(half);
        reps.push_back(std::move(plus));
        reps.push_back(std::move(minus));
    } else if (which.rfind("phi0:", 0) == 0) {
        const tiealg::Partition shape = tiealg::Partition::parse(which.substr(5));
        inferred = shape.size();
        reps.push_back(tiealg::ties_to_zero_rep(shape));
    } else if (which.rfind("phi1:", 0) == 0) {
        const tiealg::Partition shape = tiealg::Partition::parse(which.substr(5));
        inferred = shape.size();
        reps.push_back(tiealg::ties_to_identity_rep(shape));
    } else {
        throw tiealg::InputError("unknown selector '" + which +
                                 "' (expected list, bip:..., plusminus:..., phi0:..., phi1:...)");
    }

    require_strands(inferred);
    if (n != 0 && n != inferred)
        throw tiealg::InputError("selector '" + which + "' lives on " + std::to_string(inferred) +
                                 " strands, but --n " + std::to_string(n) + " was given");

    ordered_json out;
    out["schema"] = "tiealg/1";
    out["command"] = "repr";
    out["strands"] = inferred;
    ordered_json list = ordered_json::array();
    for (const auto& rep : reps) list.push_back(rep_json(rep));
    out["representations"] = std::move(list);
    return out.dump(2) + "\n";
}

std::string run_diagram(int n, const std::string& element_text, const std::string& format) {
    require_strands(n);
    const tiealg::Element element = tiealg::Element::parse(n, element_text);
    if (!element.is_single_word())
        throw tiealg::InputError("diagrams render single words only; got " +
                                 std::to_string(element.term_count()) + " terms");
    const auto diagram = tiealg::TiedBraidDiagram::from_word(n, element.single_word());
    if (format == "ascii") return diagram.render_ascii();
    if (format == "svg") return diagram.render_svg();
    throw tiealg::InputError("unknown format '" + format + "' (expected ascii or svg)");
}

std::string run_certify() {
    const tiealg::SemisimplicityCertificate cert = tiealg::semisimplicity_certificate();
    ordered_json out;
    out["schema"] = "tiealg/1";
    out["command"] = "certify";
    out["strands"] = 3;
    ordered_json words = ordered_json::array();
    for (const auto& w : cert.words) words.push_back(w.to_string());
    out["span_words"] = std::move(words);
    out["joint_rank"] = cert.joint_rank;
    out["quotient_rank"] = cert.quotient_rank;
    out["signed_rank"] = cert.signed_rank;
    out["pivot_columns"] = cert.pivot_columns;
    ordered_json witness;
    witness["element"] = cert.kernel_witness.to_string();
    witness["normal_form"] = tiealg::normal_form(cert.kernel_witness).to_string();
    witness["signed_image_is_zero"] = tiealg::specialization_image(cert.kernel_witness, 3).is_zero();
    witness["quotient_image_is_zero"] =
        tiealg::sym_specialization_image(cert.kernel_witness, 3, false).empty();
    out["kernel_witness"] = std::move(witness);
    return out.dump(2) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations in the tied braid algebra"};
    app.require_subcommand(1);

    int n = 0;
    std::string out_path;
    std::string element_text;
    std::string suite = "all";
    std::string which;
    std::string format = "ascii";

    CLI::App* nf = app.add_subcommand("nf", "reduce an element to its normal form");
    nf->add_option("--n", n, "strand count")->required();
    nf->add_option("element", element_text, "element to reduce")->required();
    nf->add_option("--out", out_path, "write output to this file");

    CLI::App* dim = app.add_subcommand("dim", "dimension of the algebra at the classical point");
    dim->add_option("--n", n, "strand count")->required();
    dim->add_option("--out", out_path, "write output to this file");

    CLI::App* check = app.add_subcommand("check", "verify an identity suite");
    check->add_option("--n", n, "strand count")->required();
    check->add_option("--suite", suite, "relations, derived, skein, or all");
    check->add_option("--out", out_path, "write output to this file");

    CLI::App* repr = app.add_subcommand("repr", "matrices of the classical-point representations");
    repr->add_option("--n", n, "strand count (checked against the selector)");
    repr->add_option("--which", which, "list, bip:A,B, plusminus:A, phi0:A, or phi1:A")
        ->required();
    repr->add_option("--out", out_path, "write output to this file");

    CLI::App* diagram = app.add_subcommand("diagram", "render a word as a tied braid diagram");
    diagram->add_option("--n", n, "strand count")->required();
    diagram->add_option("element", element_text, "single word to draw")->required();
    diagram->add_option("--format", format, "ascii or svg");
    diagram->add_option("--out", out_path, "write output to this file");

    CLI::App* certify = app.add_subcommand("certify", "three-strand linear-independence certificate");
    certify->add_option("--out", out_path, "write output to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& help) {
        return app.exit(help);
    } catch (const CLI::ParseError& parse_error) {
        app.exit(parse_error);
        return 2;
    }

    try {
        std::string payload;
        if (nf->parsed())
            payload = run_nf(n, element_text);
        else if (dim->parsed())
            payload = run_dim(n);
        else if (check->parsed())
            payload = run_check(n, suite);
        else if (repr->parsed())
            payload = run_repr(n, which);
        else if (diagram->parsed())
            payload = run_diagram(n, element_text, format);
        else if (certify->parsed())
            payload = run_certify();
        emit(out_path, payload);
        return 0;
    } catch (const tiealg::InputError& error) {
        std::cerr << "input error: " << error.what() << "\n";
        return 2;
    } catch (const tiealg::LimitError& error) {
        std::cerr << "limit error: " << error.what() << "\n";
        return 3;
    } catch (const tiealg::Error& error) {
        std::cerr << "internal error: " << error.what() << "\n";
        return 4;
    } catch (const std::exception& error) {
        std::cerr << "unexpected error: " << error.what() << "\n";
        return 4;
    }
}
