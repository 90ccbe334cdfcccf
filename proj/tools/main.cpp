#include "liefam/contraction.hpp"
#include "liefam/family.hpp"
#include "liefam/json_io.hpp"
#include "liefam/so_catalog.hpp"
#include "liefam/verify.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace liefam;
using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open input file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw SchemaError("JSON parse error in " + path + ": " + e.what());
    }
    return j;
}

LieAlgebra load_algebra(const std::string& input) {
    if (input.find(':') != std::string::npos && input.find('.') == std::string::npos)
        return build_reference(input);
    return lie_algebra_from_json(load_json(input));
}

void emit(const json& j, const std::string& out_path) {
    std::string text = dump_canonical(j);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw SchemaError("cannot open output file: " + out_path);
        out << text;
    }
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
    return out;
}

std::vector<Rational> parse_rational_list(const std::string& s) {
    std::vector<Rational> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(rational_from_string(tok));
    return out;
}

// --k accepts 1-based indices or basis names.
std::vector<Vec> parse_k_basis(const LieAlgebra& g, const std::string& spec) {
    std::vector<Vec> basis;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        int index = -1;
        try {
            index = std::stoi(tok) - 1;
        } catch (const std::exception&) {
            for (int i = 0; i < g.dim(); ++i)
                if (g.basis_names()[static_cast<std::size_t>(i)] == tok) index = i;
        }
        if (index < 0 || index >= g.dim()) throw SchemaError("unknown basis element in --k: " + tok);
        basis.push_back(g.basis_vector(index));
    }
    return basis;
}

SymmetricPair pair_from_inputs(const std::string& input, const std::string& so_spec) {
    if (!so_spec.empty()) {
        auto v = parse_int_list(so_spec);
        if (v.size() != 3) throw SchemaError("--so expects p,d,q");
        return build_theta_pair(SOParams{v[0], v[1], v[2]});
    }
    if (input.empty()) throw SchemaError("need --input involution JSON or --so p,d,q");
    return split(involution_from_json(load_json(input)));
}

int run(int argc, char** argv) {
    CLI::App app{"Exact Inonu-Wigner contractions, dual real forms and their deformation families"};
    app.require_subcommand(1);

    std::string input, out_path, k_spec, exponents_spec, so_spec, alpha_spec = "-4,-1,0,1,4", alphas_spec;
    bool as_json = false;

    auto* cmd_validate = app.add_subcommand("validate", "Check antisymmetry and Jacobi of a structure-constant table");
    cmd_validate->add_option("--input", input, "lie-algebra/v1 file or catalog name")->required();
    cmd_validate->add_flag("--json", as_json);

    auto* cmd_fingerprint = app.add_subcommand("fingerprint", "Isomorphism-invariant fingerprint of an algebra");
    cmd_fingerprint->add_option("--input", input)->required();
    cmd_fingerprint->add_flag("--json", as_json);
    cmd_fingerprint->add_option("--out", out_path);

    auto* cmd_contract = app.add_subcommand("contract", "Simple IW contraction over a subalgebra");
    cmd_contract->add_option("--input", input)->required();
    cmd_contract->add_option("--k", k_spec, "subalgebra basis: names or 1-based indices")->required();
    cmd_contract->add_option("--out", out_path);

    auto* cmd_gcontract = app.add_subcommand("gcontract", "Generalized IW contraction by diagonal exponents");
    cmd_gcontract->add_option("--input", input)->required();
    cmd_gcontract->add_option("--exponents", exponents_spec, "one integer per basis vector")->required();
    cmd_gcontract->add_option("--out", out_path);

    auto* cmd_dualize = app.add_subcommand("dualize", "Dual real form of a symmetric pair");
    cmd_dualize->add_option("--input", input, "involution/v1 file");
    cmd_dualize->add_option("--so", so_spec, "catalog pair p,d,q");
    cmd_dualize->add_option("--out", out_path);

    auto* cmd_family = app.add_subcommand("family", "Deformation family of a symmetric pair");
    cmd_family->add_option("--input", input, "involution/v1 file");
    cmd_family->add_option("--so", so_spec, "catalog pair p,d,q");
    cmd_family->add_option("--out", out_path);

    std::string alpha_one = "0";
    auto* cmd_fiber = app.add_subcommand("fiber", "Evaluate a family at a rational parameter");
    cmd_fiber->add_option("--input", input, "family/v1 file")->required();
    cmd_fiber->add_option("--alpha", alpha_one)->required();
    cmd_fiber->add_option("--out", out_path);

    int p = 0, d = 0, q = 0;
    auto* cmd_verify = app.add_subcommand("verify", "Fiber trichotomy of the catalog pair (p,d,q)");
    cmd_verify->add_option("p", p)->required();
    cmd_verify->add_option("d", d)->required();
    cmd_verify->add_option("q", q)->required();
    cmd_verify->add_option("--alphas", alphas_spec, "comma-separated rational parameters");
    cmd_verify->add_flag("--json", as_json);
    cmd_verify->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitPass : kExitUsage;
    }

    if (cmd_validate->parsed()) {
        LieAlgebra g = load_algebra(input);
        ValidationReport rep = g.validate();
        if (as_json) {
            emit(validation_report_to_json(rep), out_path);
        } else if (rep.ok) {
            std::cout << "pass\n";
        } else {
            for (const auto& issue : rep.issues)
                std::cout << "violation at (" << issue.i << "," << issue.j << "," << issue.k << "): "
                          << issue.detail << "\n";
        }
        return rep.ok ? kExitPass : kExitVerificationFailure;
    }
    if (cmd_fingerprint->parsed()) {
        Fingerprint fp = load_algebra(input).fingerprint();
        if (as_json)
            emit(fingerprint_to_json(fp), out_path);
        else
            std::cout << fp.str() << "\n";
        return kExitPass;
    }
    if (cmd_contract->parsed()) {
        LieAlgebra g = load_algebra(input);
        Decomposition dcomp = decomposition_with_canonical_complement(g, parse_k_basis(g, k_spec));
        emit(lie_algebra_to_json(iw_contract(dcomp)), out_path);
        return kExitPass;
    }
    if (cmd_gcontract->parsed()) {
        LieAlgebra g = load_algebra(input);
        ExponentAssignment e{parse_int_list(exponents_spec)};
        auto res = generalized_iw_contract(g, e);
        if (res.failure) {
            std::cerr << res.failure->str() << "\n";
            return kExitVerificationFailure;
        }
        emit(lie_algebra_to_json(*res.algebra), out_path);
        return kExitPass;
    }
    if (cmd_dualize->parsed()) {
        emit(lie_algebra_to_json(dual_form(pair_from_inputs(input, so_spec)).algebra), out_path);
        return kExitPass;
    }
    if (cmd_family->parsed()) {
        emit(family_to_json(contraction_family(pair_from_inputs(input, so_spec)).family), out_path);
        return kExitPass;
    }
    if (cmd_fiber->parsed()) {
        Family fam = family_from_json(load_json(input));
        emit(lie_algebra_to_json(fiber(fam, GQ(rational_from_string(alpha_one)))), out_path);
        return kExitPass;
    }
    if (cmd_verify->parsed()) {
        auto alphas = parse_rational_list(alphas_spec.empty() ? alpha_spec : alphas_spec);
        VerifyReport rep = verify_trichotomy(SOParams{p, d, q}, alphas);
        if (as_json)
            emit(rep.to_json(), out_path);
        else
            std::cout << rep.str();
        return rep.pass ? kExitPass : kExitVerificationFailure;
    }
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const SchemaError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
