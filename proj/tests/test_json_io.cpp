#include "doctest.h"

#include "liefam/json_io.hpp"
#include "liefam/so_catalog.hpp"

using namespace liefam;
using nlohmann::json;

TEST_CASE("lie algebra json round trip") {
    for (const LieAlgebra& g : {build_so(2, 1).algebra, build_iso(3), build_heisenberg(3), build_abelian(2)}) {
        json j = lie_algebra_to_json(g);
        LieAlgebra back = lie_algebra_from_json(j);
        CHECK(back.structurally_equal(g));
        CHECK(back.basis_names() == g.basis_names());
        CHECK(back.field() == g.field());
    }
    auto [gc, sigma] = complexify(build_so(2, 1).algebra);
    (void)sigma;
    CHECK(lie_algebra_from_json(lie_algebra_to_json(gc)).field() == Field::Complex);
}

TEST_CASE("lie algebra writer emits sorted 1-based i<j entries") {
    json j = lie_algebra_to_json(build_so(2, 1).algebra);
    CHECK(j.at("schema") == "lie-algebra/v1");
    int last_i = 0, last_j = 0, last_k = 0;
    for (const auto& e : j.at("sc")) {
        int i = e.at("i"), jj = e.at("j"), k = e.at("k");
        CHECK(i < jj);
        CHECK(i >= 1);
        CHECK(std::make_tuple(i, jj, k) > std::make_tuple(last_i, last_j, last_k));
        last_i = i, last_j = jj, last_k = k;
        CHECK(e.at("c").is_string());
    }
}

TEST_CASE("lie algebra reader keeps bad tables for diagnosis") {
    json j = {{"schema", "lie-algebra/v1"},
              {"dim", 2},
              {"field", "real"},
              {"basis", {"x", "y"}},
              {"sc", json::array({{{"i", 1}, {"j", 2}, {"k", 1}, {"c", "1"}},
                                  {{"i", 2}, {"j", 1}, {"k", 1}, {"c", "1"}}})}};
    LieAlgebra g = lie_algebra_from_json(j);
    auto rep = g.validate();
    CHECK_FALSE(rep.ok);
    CHECK(rep.issues[0].kind == ValidationIssue::Kind::Antisymmetry);
}

TEST_CASE("schema errors carry the offending field") {
    json missing = {{"schema", "lie-algebra/v1"}, {"field", "real"}, {"basis", json::array()}, {"sc", json::array()}};
    CHECK_THROWS_WITH_AS(lie_algebra_from_json(missing), "lie-algebra/v1: missing field 'dim'", SchemaError);

    json bad_field = {{"schema", "lie-algebra/v1"}, {"dim", 1}, {"field", "quaternionic"},
                      {"basis", {"x"}}, {"sc", json::array()}};
    CHECK_THROWS_AS(lie_algebra_from_json(bad_field), SchemaError);

    json out_of_range = {{"schema", "lie-algebra/v1"}, {"dim", 1}, {"field", "real"}, {"basis", {"x"}},
                         {"sc", json::array({{{"i", 1}, {"j", 5}, {"k", 1}, {"c", "1"}}})}};
    CHECK_THROWS_AS(lie_algebra_from_json(out_of_range), SchemaError);

    json bad_scalar = {{"schema", "lie-algebra/v1"}, {"dim", 2}, {"field", "real"}, {"basis", {"x", "y"}},
                       {"sc", json::array({{{"i", 1}, {"j", 2}, {"k", 1}, {"c", "1//2"}}})}};
    CHECK_THROWS_AS(lie_algebra_from_json(bad_scalar), SchemaError);
}

TEST_CASE("involution json round trip") {
    Involution theta = build_theta({2, 1, 0});
    json j = involution_to_json(theta);
    CHECK(j.at("schema") == "involution/v1");
    Involution back = involution_from_json(j);
    back.check();
    CHECK(back.matrix == theta.matrix);
    CHECK(back.algebra.structurally_equal(theta.algebra));

    j["matrix"][0][0] = 7;  // entries must be scalar strings
    CHECK_THROWS_AS(involution_from_json(j), SchemaError);
}

TEST_CASE("family json round trip") {
    ContractionFamily cf = contraction_family(build_theta_pair({2, 1, 0}));
    json j = family_to_json(cf.family);
    CHECK(j.at("schema") == "family/v1");
    CHECK(j.at("involution").is_null());
    Family back = family_from_json(j);
    CHECK(back.structurally_equal(cf.family));
    CHECK(back.basis_names() == cf.family.basis_names());

    Family marked = cf.family;
    marked.set_involution(true);
    json j2 = family_to_json(marked);
    CHECK(j2.at("involution") == "coefficient-conjugation");
    CHECK(family_from_json(j2).has_involution());

    j2["involution"] = "other";
    CHECK_THROWS_AS(family_from_json(j2), SchemaError);
}

TEST_CASE("fingerprint and validation report serialization") {
    json fp = fingerprint_to_json(build_iso(2).fingerprint());
    CHECK(fp.at("dim") == 3);
    CHECK(fp.at("radical_dim") == 3);
    CHECK(fp.at("derived_dims") == json({3, 2, 0}));
    CHECK(fp.at("lcs_dims") == json({3, 2, 2}));
    REQUIRE(fp.at("killing_signature").is_array());
    CHECK(fp.at("killing_signature") == json({0, 1}));

    auto [gc, sigma] = complexify(build_iso(2));
    (void)sigma;
    CHECK(fingerprint_to_json(gc.fingerprint()).at("killing_signature").is_null());

    LieAlgebra bad(2, Field::Real);
    bad.set_raw_constant(0, 1, 0, GQ(1));
    bad.set_raw_constant(1, 0, 0, GQ(1));
    json rep = validation_report_to_json(bad.validate());
    CHECK(rep.at("ok") == false);
    CHECK(rep.at("issues").size() >= 1);
}

TEST_CASE("canonical dump is deterministic") {
    LieAlgebra g = build_so(2, 2).algebra;
    std::string a = dump_canonical(lie_algebra_to_json(g));
    std::string b = dump_canonical(lie_algebra_to_json(build_so(2, 2).algebra));
    CHECK(a == b);
    CHECK(a.back() == '\n');
}
