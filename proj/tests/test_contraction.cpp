#include "doctest.h"

#include "liefam/contraction.hpp"
#include "liefam/so_catalog.hpp"

using namespace liefam;

namespace {

LieAlgebra cross_product_so3() {
    LieAlgebra g(3, Field::Real);
    g.set_constant(0, 1, 2, GQ(1));
    g.set_constant(1, 2, 0, GQ(1));
    g.set_constant(2, 0, 1, GQ(1));
    return g;
}

Decomposition so3_over_so2() {
    LieAlgebra g = cross_product_so3();
    return {g, {g.basis_vector(2)}, {g.basis_vector(0), g.basis_vector(1)}};
}

Vec combo(const LieAlgebra& g, int a, int b, const GQ& sb) {
    Vec v = g.basis_vector(a);
    v[static_cast<std::size_t>(b)] = sb;
    return v;
}

// The two so(3) ideals of so(4) in the L12,L13,L14,L23,L24,L34 basis.
std::vector<Vec> so4_ideal(const LieAlgebra& so4, int sign) {
    GQ s(sign);
    return {combo(so4, 0, 5, s), combo(so4, 1, 4, -s), combo(so4, 2, 3, s)};
}

std::vector<Vec> so4_block_so3(const LieAlgebra& so4) {
    return {so4.basis_vector(0), so4.basis_vector(1), so4.basis_vector(3)};  // L12, L13, L23
}

// Identification of iw_contract(d) with the canonical quotient model:
// k vectors to themselves (in k coordinates), p vectors to their classes.
Mat quotient_identification(const Decomposition& d) {
    const int n = d.algebra.dim();
    const int r = static_cast<int>(d.k_basis.size());
    Span k(d.k_basis, n);
    std::vector<bool> pivot(static_cast<std::size_t>(n), false);
    for (int p : k.pivots()) pivot[static_cast<std::size_t>(p)] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < n; ++c)
        if (!pivot[static_cast<std::size_t>(c)]) free_cols.push_back(c);
    Mat m(n, n);
    for (int a = 0; a < r; ++a) m.at(a, a) = GQ(1);
    for (std::size_t c = 0; c < d.p_basis.size(); ++c) {
        Vec red = k.reduce(d.p_basis[c]);
        for (std::size_t t = 0; t < free_cols.size(); ++t)
            m.at(static_cast<int>(r + t), static_cast<int>(r + c)) = red[static_cast<std::size_t>(free_cols[t])];
    }
    return m;
}

}  // namespace

TEST_CASE("iw_contract of so(3) over so(2) is iso(2)") {
    LieAlgebra c = iw_contract(so3_over_so2());
    CHECK(c.validate().ok);
    // Adapted basis (e3 | e1, e2): [e3,e1]=e2', [e3,e2]=-e1', [e1,e2]=0.
    CHECK(c.constant(0, 1, 2) == GQ(1));
    CHECK(c.constant(0, 2, 1) == GQ(-1));
    for (int k = 0; k < 3; ++k) CHECK(c.constant(1, 2, k).is_zero());
    CHECK(c.fingerprint() == build_iso(2).fingerprint());
    CHECK(c.basis_names()[0] == "k:e3");
    CHECK(c.basis_names()[1] == "p:e1");
}

TEST_CASE("iw_contract rejects bad decompositions") {
    LieAlgebra g = cross_product_so3();
    // e1 alone spans a subalgebra, but a dependent basis must be refused.
    Decomposition dependent{g, {g.basis_vector(0), g.basis_vector(0)}, {g.basis_vector(1)}};
    CHECK_THROWS(iw_contract(dependent));
    // span(e1, e2) is not a subalgebra of so(3).
    Decomposition notsub{g, {g.basis_vector(0), g.basis_vector(1)}, {g.basis_vector(2)}};
    CHECK_THROWS(iw_contract(notsub));
}

TEST_CASE("so(4) contractions: diagonal so(3) vs ideal decomposition") {
    LieAlgebra so4 = build_so(4, 0).algebra;
    auto k1 = so4_ideal(so4, 1), k2 = so4_ideal(so4, -1);
    Span k1s(k1, 6), k2s(k2, 6);
    REQUIRE(so4.is_ideal(k1s));
    REQUIRE(so4.is_ideal(k2s));

    Decomposition diag{so4, so4_block_so3(so4), {so4.basis_vector(2), so4.basis_vector(4), so4.basis_vector(5)}};
    LieAlgebra iso3_like = iw_contract(diag);
    CHECK(iso3_like.validate().ok);
    CHECK(iso3_like.fingerprint() == build_iso(3).fingerprint());
    CHECK(iso3_like.fingerprint() != build_so_plus_abelian(3, 3).fingerprint());

    Decomposition ideals{so4, k1, k2};
    LieAlgebra sum_like = iw_contract(ideals);
    CHECK(sum_like.validate().ok);
    CHECK(sum_like.fingerprint() == build_so_plus_abelian(3, 3).fingerprint());
    CHECK(sum_like.fingerprint() != build_iso(3).fingerprint());
}

TEST_CASE("generalized contraction: exponent law and limits") {
    LieAlgebra g = cross_product_so3();
    auto unchanged = generalized_iw_contract(g, {{0, 0, 0}});
    REQUIRE(unchanged.algebra);
    CHECK(unchanged.algebra->structurally_equal(g));

    // (0,1,1) adapted to the so(2) decomposition reproduces iw_contract.
    Mat perm = Mat::from_columns({g.basis_vector(2), g.basis_vector(0), g.basis_vector(1)});
    LieAlgebra reordered = g.transported(perm);
    auto contracted = generalized_iw_contract(reordered, {{0, 1, 1}});
    REQUIRE(contracted.algebra);
    CHECK(contracted.algebra->structurally_equal(iw_contract(so3_over_so2())));

    // Scaling only e3 has no limit: [e1,e2]=e3 picks up eps^(-1).
    auto failed = generalized_iw_contract(g, {{0, 0, 1}});
    REQUIRE(failed.failure);
    REQUIRE(failed.failure->entries.size() == 1);
    CHECK(failed.failure->entries[0] == std::tuple<int, int, int, int>{1, 2, 3, -1});
    CHECK_FALSE(failed.algebra);
}

TEST_CASE("epsilon sweep cross-check of the exponent law") {
    for (const LieAlgebra& g : {cross_product_so3(), build_so(2, 1).algebra, build_iso(2)}) {
        std::vector<int> exps;
        for (int t = 0; t < g.dim(); ++t) exps.push_back(t % 3);
        ExponentAssignment e{exps};
        for (const Rational& eps : {Rational(1, 2), Rational(1, 4), Rational(1, 8)}) {
            LieAlgebra moved = g.transported(diagonal_transport(e, GQ(eps)));
            for (int i = 0; i < g.dim(); ++i)
                for (int j = i + 1; j < g.dim(); ++j)
                    for (int k = 0; k < g.dim(); ++k) {
                        int power = exps[static_cast<std::size_t>(i)] + exps[static_cast<std::size_t>(j)] -
                                    exps[static_cast<std::size_t>(k)];
                        GQ factor(1);
                        for (int t = 0; t < std::abs(power); ++t) factor *= GQ(eps);
                        if (power < 0) factor = GQ(1) / factor;
                        CHECK(moved.constant(i, j, k) == g.constant(i, j, k) * factor);
                    }
        }
    }
}

TEST_CASE("semidirect quotient: degenerate and so(3) cases") {
    LieAlgebra g = cross_product_so3();
    std::vector<Vec> whole = {g.basis_vector(0), g.basis_vector(1), g.basis_vector(2)};
    CHECK(semidirect_quotient(g, whole).structurally_equal(g));
    CHECK(semidirect_quotient(g, {}).structurally_equal(build_abelian(3)));

    LieAlgebra q = semidirect_quotient(g, {g.basis_vector(2)});
    CHECK(q.structurally_equal(iw_contract(so3_over_so2())));
}

TEST_CASE("complement choice does not change the contraction") {
    LieAlgebra g = cross_product_so3();
    Decomposition standard = so3_over_so2();
    // A skew complement of span(e3).
    Decomposition skew{g, {g.basis_vector(2)}, {combo(g, 0, 2, GQ(3)), combo(g, 1, 2, GQ(-2))}};
    LieAlgebra quotient_model = semidirect_quotient(g, {g.basis_vector(2)});
    for (const Decomposition& d : {standard, skew}) {
        LieAlgebra c = iw_contract(d);
        Mat ident = quotient_identification(d);
        REQUIRE(ident.inverse());
        CHECK(quotient_model.transported(ident).structurally_equal(c));
    }
}

TEST_CASE("equivalence witness: identity cases pass") {
    LieAlgebra g = cross_product_so3();
    auto rep = check_equivalence_witness(g, {g.basis_vector(2)}, {g.basis_vector(2)}, Mat::identity(3));
    CHECK(rep.pass);
    REQUIRE(rep.induced);
    CHECK(rep.induced->inverse().has_value());

    LieAlgebra h = build_heisenberg(3);
    std::vector<Vec> center_basis = h.center().basis();
    auto rep2 = check_equivalence_witness(h, center_basis, center_basis, Mat::identity(h.dim()));
    CHECK(rep2.pass);

    CHECK_FALSE(check_equivalence_witness(g, {g.basis_vector(2)}, {g.basis_vector(2)}, Mat(3, 3)).pass);
}

TEST_CASE("equivalence witness fails for the so(4) pair of subalgebras") {
    LieAlgebra so4 = build_so(4, 0).algebra;
    auto k = so4_block_so3(so4);
    auto k1 = so4_ideal(so4, 1);
    // nu: project the block so(3) onto the ideal k1, identity on L14, L24, L34.
    GQ half(Rational(1, 2));
    std::vector<Vec> cols(6);
    auto scale = [&](Vec v) {
        for (auto& c : v) c *= half;
        return v;
    };
    cols[0] = scale(k1[0]);
    cols[1] = scale(k1[1]);
    cols[3] = scale(k1[2]);
    cols[2] = so4.basis_vector(2);
    cols[4] = so4.basis_vector(4);
    cols[5] = so4.basis_vector(5);
    Mat nu = Mat::from_columns(cols);
    REQUIRE(nu.inverse());

    auto rep = check_equivalence_witness(so4, k, k1, nu);
    CHECK_FALSE(rep.pass);  // iso(3) and so(3)+R^3 are not isomorphic
    CHECK_FALSE(rep.failure.empty());
    // Cross-check by fingerprints of the two semidirect quotients.
    CHECK(semidirect_quotient(so4, k).fingerprint() != semidirect_quotient(so4, k1).fingerprint());
}

TEST_CASE("t0 analysis") {
    CHECK(t0_analysis(so3_over_so2()).pass());

    LieAlgebra g = cross_product_so3();
    Decomposition trivial{g, {g.basis_vector(0), g.basis_vector(1), g.basis_vector(2)}, {}};
    CHECK(t0_analysis(trivial).pass());

    LieAlgebra so4 = build_so(4, 0).algebra;
    Decomposition ideals{so4, so4_ideal(so4, 1), so4_ideal(so4, -1)};
    T0Report rep = t0_analysis(ideals);
    CHECK(rep.pass());
    // The abelian ideal here carries the trivial action: the contraction is a
    // direct sum, so every k x p bracket vanishes.
    LieAlgebra c = iw_contract(ideals);
    for (int i = 0; i < 3; ++i)
        for (int j = 3; j < 6; ++j)
            for (int k = 0; k < 6; ++k) CHECK(c.constant(i, j, k).is_zero());
}
