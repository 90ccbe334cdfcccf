#include "doctest.h"

#include "liefam/scalars.hpp"

#include <random>

using namespace liefam;

namespace {

std::mt19937 rng(12345);

Rational random_small_fraction() {
    std::uniform_int_distribution<int> num(-20, 20);
    std::uniform_int_distribution<int> den(1, 20);
    return Rational(num(rng), den(rng));
}

GQ random_gaussian() { return GQ(random_small_fraction(), random_small_fraction()); }

Polynomial random_poly(int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::vector<GQ> c;
    int d = deg(rng);
    for (int j = 0; j <= d; ++j) c.push_back(random_gaussian());
    return Polynomial(std::move(c));
}

}  // namespace

TEST_CASE("rational arithmetic is exact on random small fractions") {
    for (int t = 0; t < 1000; ++t) {
        Rational a = random_small_fraction(), c = random_small_fraction();
        Rational sum = a + c;
        // Cross-multiplication identity for a/b + c/d.
        CHECK(numerator(sum) * denominator(a) * denominator(c) ==
              (numerator(a) * denominator(c) + numerator(c) * denominator(a)) * denominator(sum));
        CHECK(denominator(sum) > 0);
        CHECK(gcd(abs(numerator(sum)), denominator(sum)) == 1);
    }
}

TEST_CASE("rational string round trip") {
    CHECK(rational_to_string(Rational(-1, 2)) == "-1/2");
    CHECK(rational_from_string("-1/2") == Rational(-1, 2));
    CHECK(rational_from_string("7") == 7);
    CHECK_THROWS(rational_from_string("1/0"));
}

TEST_CASE("rational square root detection") {
    Rational root;
    CHECK(rational_square_root(Rational(4), &root));
    CHECK(root == 2);
    CHECK(rational_square_root(Rational(1, 4), &root));
    CHECK(root == Rational(1, 2));
    CHECK_FALSE(rational_square_root(Rational(1, 3), nullptr));
    CHECK_FALSE(rational_square_root(Rational(-4), nullptr));
    CHECK(rational_square_root(Rational(0), &root));
    CHECK(root == 0);
}

TEST_CASE("gaussian rational field operations") {
    GQ i = GQ::i();
    CHECK(i * i == GQ(-1));
    GQ x(Rational(2, 3), Rational(-1, 2));
    CHECK(x / x == GQ(1));
    CHECK(x * (GQ(1) / x) == GQ(1));
    CHECK(x.conj().conj() == x);
    for (int t = 0; t < 200; ++t) {
        GQ a = random_gaussian(), b = random_gaussian();
        CHECK((a * b).conj() == a.conj() * b.conj());
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
    CHECK_THROWS(x / GQ(0));
}

TEST_CASE("gaussian rational parsing and printing") {
    CHECK(GQ::parse("-1/2+3i") == GQ(Rational(-1, 2), Rational(3)));
    CHECK(GQ::parse("3i") == GQ(Rational(0), Rational(3)));
    CHECK(GQ::parse("-i") == GQ(Rational(0), Rational(-1)));
    CHECK(GQ::parse("i") == GQ::i());
    CHECK(GQ::parse("2-3/4i") == GQ(Rational(2), Rational(-3, 4)));
    CHECK(GQ::parse("5/7") == GQ(Rational(5, 7)));
    for (int t = 0; t < 200; ++t) {
        GQ a = random_gaussian();
        CHECK(GQ::parse(a.str()) == a);
    }
    CHECK_THROWS(GQ::parse(""));
    CHECK_THROWS(GQ::parse("2+3"));
}

TEST_CASE("poly_conj on the stated cases") {
    CHECK(Polynomial().conj() == Polynomial());
    Polynomial f({GQ(0), GQ(Rational(1), Rational(1))});  // (1+i) z
    CHECK(f.conj() == Polynomial({GQ(0), GQ(Rational(1), Rational(-1))}));
    Polynomial g({GQ(3), GQ(0), GQ(Rational(0), Rational(2))});  // 3 + 2i z^2
    CHECK(g.conj() == Polynomial({GQ(3), GQ(0), GQ(Rational(0), Rational(-2))}));
    CHECK(g.conj().degree() == g.degree());
}

TEST_CASE("poly_eval on the stated cases") {
    CHECK(Polynomial::z().eval(GQ(-1)) == GQ(-1));
    Polynomial z2({GQ(0), GQ(0), GQ(1)});
    CHECK(z2.eval(GQ(Rational(1, 2))) == GQ(Rational(1, 4)));
    Polynomial f({GQ(2), GQ(Rational(1), Rational(1))});  // 2 + (1+i) z
    CHECK(f.eval(GQ::i()) == GQ(Rational(1), Rational(1)));  // 2 + (1+i) i = 1 + i
}

TEST_CASE("conjugation is a ring involution") {
    for (int t = 0; t < 100; ++t) {
        Polynomial f = random_poly(3), g = random_poly(3);
        CHECK((f * g).conj() == f.conj() * g.conj());
        CHECK(f.conj().conj() == f);
    }
}

TEST_CASE("conjugation commutes with evaluation at real points") {
    for (int t = 0; t < 100; ++t) {
        Polynomial f = random_poly(3);
        GQ alpha(random_small_fraction());
        CHECK(f.conj().eval(alpha) == f.eval(alpha).conj());
    }
}

TEST_CASE("polynomial normalization and degree") {
    CHECK(Polynomial({GQ(0), GQ(0)}).is_zero());
    CHECK(Polynomial({GQ(1), GQ(2), GQ(0)}).degree() == 1);
    CHECK(Polynomial().degree() == -1);
    CHECK((Polynomial::z() * Polynomial::z()).degree() == 2);
    CHECK((Polynomial::z() - Polynomial::z()).is_zero());
}
