#include "doctest.h"

#include "liefam/family.hpp"

using namespace liefam;

namespace {

const std::vector<SOParams> kCatalog = {
    {2, 1, 0}, {1, 1, 1}, {2, 1, 1}, {2, 2, 0}, {1, 2, 0},
};

// Cyclic z-deformation of so(3) on (L12 | L13, L23).
ContractionFamily so3_family() { return contraction_family(build_theta_pair({2, 1, 0})); }

const LieAlgebra& certificate_target(const ContractionFamily& cf, const FiberCertificate& cert) {
    switch (cert.target) {
        case FiberCertificate::Target::Original: return cf.g_adapted;
        case FiberCertificate::Target::Dual: return cf.dual_adapted;
        default: return cf.contraction;
    }
}

}  // namespace

TEST_CASE("family canonicalization and equality") {
    Family f(3, true);
    f.set_constant(1, 0, 2, Polynomial::z());
    CHECK(f.constant(0, 1, 2) == Polynomial::z() * Polynomial({GQ(-1)}));
    CHECK(f.constant(1, 0, 2) == Polynomial::z());
    CHECK(f.sc().size() == 1);

    Family g(3, true);
    g.set_constant(0, 1, 2, Polynomial({GQ(0), GQ(-1)}));
    CHECK(f.structurally_equal(g));
    g.set_constant(0, 2, 1, Polynomial({GQ(1)}));
    CHECK_FALSE(f.structurally_equal(g));
}

TEST_CASE("check_family accepts the deformation families") {
    for (const SOParams& c : kCatalog) {
        ContractionFamily cf = contraction_family(build_theta_pair(c));
        CHECK(check_family(cf.family).ok);
        CHECK(cf.family.real());
    }
}

TEST_CASE("cyclic three-dimensional tables satisfy the ring Jacobi identity") {
    // With constants only of cross type, every Jacobi term brackets a vector
    // with itself, so any polynomial rescaling of a cyclic table passes.
    Family one_z(3, true);
    one_z.set_constant(0, 1, 2, Polynomial::z());
    one_z.set_constant(1, 2, 0, Polynomial({GQ(1)}));
    one_z.set_constant(2, 0, 1, Polynomial({GQ(1)}));
    CHECK(check_family(one_z).ok);

    Family two_z(3, true);
    two_z.set_constant(0, 1, 2, Polynomial::z());
    two_z.set_constant(1, 2, 0, Polynomial::z());
    two_z.set_constant(2, 0, 1, Polynomial({GQ(1)}));
    CHECK(check_family(two_z).ok);
    CHECK(fiber(two_z, GQ(5)).validate().ok);
}

TEST_CASE("check_family reports polynomial residues") {
    Family anti(2, true);
    anti.set_raw_constant(0, 1, 0, Polynomial::z());
    anti.set_raw_constant(1, 0, 0, Polynomial::z());
    auto rep = check_family(anti);
    REQUIRE_FALSE(rep.ok);
    CHECK(rep.issues[0].kind == FamilyIssue::Kind::Antisymmetry);

    // [e1,e2] = z e1, [e1,e3] = e3: Jacobi residue z e3 at the triple (1,2,3).
    Family nojac(3, true);
    nojac.set_constant(0, 1, 0, Polynomial::z());
    nojac.set_constant(0, 2, 2, Polynomial({GQ(1)}));
    auto rep2 = check_family(nojac);
    REQUIRE_FALSE(rep2.ok);
    CHECK(rep2.issues[0].kind == FamilyIssue::Kind::Jacobi);
    CHECK(rep2.issues[0].residue == Polynomial::z());

    Family complex_coeff(2, true);
    complex_coeff.set_constant(0, 1, 0, Polynomial({GQ::i()}));
    auto rep3 = check_family(complex_coeff);
    REQUIRE_FALSE(rep3.ok);
    CHECK(rep3.issues[0].kind == FamilyIssue::Kind::RealCoefficients);
}

TEST_CASE("fibers of the deformation family hit all three members") {
    for (const SOParams& c : kCatalog) {
        ContractionFamily cf = contraction_family(build_theta_pair(c));
        CHECK(fiber(cf.family, GQ(1)).structurally_equal(cf.g_adapted));
        CHECK(fiber(cf.family, GQ(-1)).structurally_equal(cf.dual_adapted));
        CHECK(fiber(cf.family, GQ(0)).structurally_equal(cf.contraction));
        CHECK(fiber(cf.family, GQ(Rational(7, 3))).validate().ok);
    }
    CHECK_THROWS(fiber(so3_family().family, GQ::i()));
}

TEST_CASE("fiber certificates at squares, minus squares, and zero") {
    for (const SOParams& c : kCatalog) {
        ContractionFamily cf = contraction_family(build_theta_pair(c));
        struct Case {
            Rational alpha;
            FiberCertificate::Target target;
        };
        for (const Case& tc : {Case{Rational(4), FiberCertificate::Target::Original},
                               Case{Rational(1, 4), FiberCertificate::Target::Original},
                               Case{Rational(-1), FiberCertificate::Target::Dual},
                               Case{Rational(-9, 4), FiberCertificate::Target::Dual},
                               Case{Rational(0), FiberCertificate::Target::Contraction}}) {
            auto cert = fiber_isomorphism_certificate(cf, tc.alpha);
            REQUIRE(cert.has_value());
            CHECK(cert->target == tc.target);
            LieAlgebra pulled = certificate_target(cf, *cert).transported(cert->map);
            CHECK(pulled.structurally_equal(fiber(cf.family, GQ(tc.alpha))));
        }
        CHECK_FALSE(fiber_isomorphism_certificate(cf, Rational(2)));
        CHECK_FALSE(fiber_isomorphism_certificate(cf, Rational(-1, 3)));
    }
}

TEST_CASE("conjugation commutes with fibers") {
    ContractionFamily cf = so3_family();
    Family complexified = cf.family;
    // Mix in a complex coefficient to make the check non-trivial.
    Family f(3, false);
    for (const auto& [key, c] : complexified.sc()) f.set_raw_constant(key.i, key.j, key.k, c * Polynomial({GQ::i()}));
    Family fc = conjugate_family(f);
    for (const GQ& alpha : {GQ(2), GQ(Rational(-1, 2)), GQ(0)}) {
        LieAlgebra a = fiber(fc, alpha);
        LieAlgebra b = fiber(f, alpha);
        for (const auto& [key, c] : b.sc()) CHECK(a.constant(key.i, key.j, key.k) == c.conj());
    }
}

TEST_CASE("real points of a coefficient-conjugation family") {
    ContractionFamily cf = so3_family();
    Family f(3, false);
    for (const auto& [key, c] : cf.family.sc()) f.set_raw_constant(key.i, key.j, key.k, c);
    CHECK_THROWS_AS(real_points(f), std::invalid_argument);  // involution marker missing
    f.set_involution(true);
    Family r = real_points(f);
    CHECK(r.real());
    CHECK(r.structurally_equal(cf.family));

    Family bad(2, false);
    bad.set_constant(0, 1, 0, Polynomial({GQ::i()}));
    bad.set_involution(true);
    CHECK_THROWS_AS(real_points(bad), std::domain_error);
}

TEST_CASE("block matrix realization matches the abstract fibers") {
    for (const SOParams& c : kCatalog)
        for (const Rational& alpha : {Rational(-1), Rational(0), Rational(1), Rational(4)})
            CHECK(matrix_realization_check(c, alpha));
}
