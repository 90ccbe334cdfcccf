#include "liefam/json_io.hpp"

namespace liefam {

using nlohmann::json;

namespace {

const json& require(const json& j, const char* key, const char* schema) {
    if (!j.contains(key)) throw SchemaError(std::string(schema) + ": missing field '" + key + "'");
    return j.at(key);
}

int require_int(const json& j, const char* key, const char* schema) {
    const json& v = require(j, key, schema);
    if (!v.is_number_integer()) throw SchemaError(std::string(schema) + ": field '" + key + "' must be an integer");
    return v.get<int>();
}

std::string require_string(const json& j, const char* key, const char* schema) {
    const json& v = require(j, key, schema);
    if (!v.is_string()) throw SchemaError(std::string(schema) + ": field '" + key + "' must be a string");
    return v.get<std::string>();
}

std::vector<std::string> read_basis(const json& j, int dim, const char* schema) {
    const json& b = require(j, "basis", schema);
    if (!b.is_array() || static_cast<int>(b.size()) != dim)
        throw SchemaError(std::string(schema) + ": 'basis' must be an array of length dim");
    std::vector<std::string> names;
    for (const auto& x : b) {
        if (!x.is_string()) throw SchemaError(std::string(schema) + ": basis names must be strings");
        names.push_back(x.get<std::string>());
    }
    return names;
}

GQ parse_scalar(const std::string& s, const char* schema) {
    try {
        return GQ::parse(s);
    } catch (const std::exception& e) {
        throw SchemaError(std::string(schema) + ": bad scalar '" + s + "': " + e.what());
    }
}

}  // namespace

json lie_algebra_to_json(const LieAlgebra& g) {
    json sc = json::array();
    for (int i = 0; i < g.dim(); ++i)
        for (int j = i + 1; j < g.dim(); ++j)
            for (int k = 0; k < g.dim(); ++k) {
                GQ c = g.constant(i, j, k);
                if (c.is_zero()) continue;
                sc.push_back({{"i", i + 1}, {"j", j + 1}, {"k", k + 1}, {"c", c.str()}});
            }
    return {{"schema", "lie-algebra/v1"},
            {"dim", g.dim()},
            {"field", field_name(g.field())},
            {"basis", g.basis_names()},
            {"sc", std::move(sc)}};
}

LieAlgebra lie_algebra_from_json(const json& j) {
    constexpr const char* schema = "lie-algebra/v1";
    int dim = require_int(j, "dim", schema);
    if (dim < 0) throw SchemaError("lie-algebra/v1: dim must be non-negative");
    std::string field_str = require_string(j, "field", schema);
    Field field;
    if (field_str == "real")
        field = Field::Real;
    else if (field_str == "complex")
        field = Field::Complex;
    else
        throw SchemaError("lie-algebra/v1: field must be 'real' or 'complex'");
    LieAlgebra g(dim, field, read_basis(j, dim, schema));
    const json& sc = require(j, "sc", schema);
    if (!sc.is_array()) throw SchemaError("lie-algebra/v1: 'sc' must be an array");
    for (const auto& entry : sc) {
        int i = require_int(entry, "i", schema), jj = require_int(entry, "j", schema),
            k = require_int(entry, "k", schema);
        if (i < 1 || i > dim || jj < 1 || jj > dim || k < 1 || k > dim)
            throw SchemaError("lie-algebra/v1: sc index out of range");
        g.set_raw_constant(i - 1, jj - 1, k - 1, parse_scalar(require_string(entry, "c", schema), schema));
    }
    return g;
}

json involution_to_json(const Involution& inv) {
    json rows = json::array();
    for (int r = 0; r < inv.matrix.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < inv.matrix.cols(); ++c) row.push_back(inv.matrix.at(r, c).str());
        rows.push_back(std::move(row));
    }
    return {{"schema", "involution/v1"}, {"algebra", lie_algebra_to_json(inv.algebra)}, {"matrix", std::move(rows)}};
}

Involution involution_from_json(const json& j) {
    constexpr const char* schema = "involution/v1";
    LieAlgebra g = lie_algebra_from_json(require(j, "algebra", schema));
    const json& rows = require(j, "matrix", schema);
    if (!rows.is_array() || static_cast<int>(rows.size()) != g.dim())
        throw SchemaError("involution/v1: 'matrix' must be a dim x dim array");
    Mat m(g.dim(), g.dim());
    for (int r = 0; r < g.dim(); ++r) {
        const json& row = rows.at(static_cast<std::size_t>(r));
        if (!row.is_array() || static_cast<int>(row.size()) != g.dim())
            throw SchemaError("involution/v1: 'matrix' must be a dim x dim array");
        for (int c = 0; c < g.dim(); ++c) {
            const json& cell = row.at(static_cast<std::size_t>(c));
            if (!cell.is_string()) throw SchemaError("involution/v1: matrix entries must be scalar strings");
            m.at(r, c) = parse_scalar(cell.get<std::string>(), schema);
        }
    }
    return {std::move(g), std::move(m)};
}

json family_to_json(const Family& fam) {
    json sc = json::array();
    for (int i = 0; i < fam.rank(); ++i)
        for (int j = i + 1; j < fam.rank(); ++j)
            for (int k = 0; k < fam.rank(); ++k) {
                Polynomial c = fam.constant(i, j, k);
                if (c.is_zero()) continue;
                json coeffs = json::array();
                for (const auto& a : c.coeffs()) coeffs.push_back(a.str());
                sc.push_back({{"i", i + 1}, {"j", j + 1}, {"k", k + 1}, {"c", std::move(coeffs)}});
            }
    return {{"schema", "family/v1"},
            {"rank", fam.rank()},
            {"real", fam.real()},
            {"basis", fam.basis_names()},
            {"sc", std::move(sc)},
            {"involution", fam.has_involution() ? json("coefficient-conjugation") : json(nullptr)}};
}

Family family_from_json(const json& j) {
    constexpr const char* schema = "family/v1";
    int rank = require_int(j, "rank", schema);
    if (rank < 0) throw SchemaError("family/v1: rank must be non-negative");
    bool real = j.value("real", false);
    Family fam(rank, real, read_basis(j, rank, schema));
    if (j.contains("involution") && !j.at("involution").is_null()) {
        if (j.at("involution") != json("coefficient-conjugation"))
            throw SchemaError("family/v1: unsupported involution kind");
        fam.set_involution(true);
    }
    const json& sc = require(j, "sc", schema);
    if (!sc.is_array()) throw SchemaError("family/v1: 'sc' must be an array");
    for (const auto& entry : sc) {
        int i = require_int(entry, "i", schema), jj = require_int(entry, "j", schema),
            k = require_int(entry, "k", schema);
        if (i < 1 || i > rank || jj < 1 || jj > rank || k < 1 || k > rank)
            throw SchemaError("family/v1: sc index out of range");
        const json& coeffs = require(entry, "c", schema);
        if (!coeffs.is_array()) throw SchemaError("family/v1: 'c' must be an array of scalar strings");
        std::vector<GQ> c;
        for (const auto& a : coeffs) {
            if (!a.is_string()) throw SchemaError("family/v1: polynomial coefficients must be strings");
            c.push_back(parse_scalar(a.get<std::string>(), schema));
        }
        fam.set_raw_constant(i - 1, jj - 1, k - 1, Polynomial(std::move(c)));
    }
    return fam;
}

json fingerprint_to_json(const Fingerprint& fp) {
    json j = {{"dim", fp.dim},
              {"field", field_name(fp.field)},
              {"center_dim", fp.center_dim},
              {"derived_dims", fp.derived_dims},
              {"lcs_dims", fp.lcs_dims},
              {"killing_rank", fp.killing_rank},
              {"radical_dim", fp.radical_dim}};
    if (fp.killing_signature)
        j["killing_signature"] = {fp.killing_signature->first, fp.killing_signature->second};
    else
        j["killing_signature"] = nullptr;
    return j;
}

json validation_report_to_json(const ValidationReport& rep) {
    json issues = json::array();
    for (const auto& issue : rep.issues) {
        const char* kind = issue.kind == ValidationIssue::Kind::Antisymmetry ? "antisymmetry"
                           : issue.kind == ValidationIssue::Kind::Jacobi     ? "jacobi"
                                                                             : "field";
        issues.push_back({{"kind", kind}, {"i", issue.i}, {"j", issue.j}, {"k", issue.k}, {"l", issue.l},
                          {"detail", issue.detail}});
    }
    return {{"ok", rep.ok}, {"issues", std::move(issues)}};
}

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

}  // namespace liefam
