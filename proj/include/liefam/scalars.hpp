#ifndef LIEFAM_SCALARS_HPP
#define LIEFAM_SCALARS_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace liefam {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational number, always reduced, denominator > 0.
using Rational = boost::multiprecision::cpp_rational;

std::string rational_to_string(const Rational& r);
Rational rational_from_string(const std::string& s);

/// True if r = b^2 for some rational b; on success *root is the non-negative b.
bool rational_square_root(const Rational& r, Rational* root);

/// Element of Q(i). All Lie-algebra scalars in this project live here;
/// real algebras simply keep im = 0.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(Rational re) : re_(std::move(re)) {}
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}
    GaussianRational(int n) : re_(n) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GaussianRational conj() const { return {re_, -im_}; }
    /// re^2 + im^2 (the norm form of Q(i)).
    Rational norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational operator+(const GaussianRational& o) const { return {re_ + o.re_, im_ + o.im_}; }
    GaussianRational operator-(const GaussianRational& o) const { return {re_ - o.re_, im_ - o.im_}; }
    GaussianRational operator*(const GaussianRational& o) const {
        return {re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_};
    }
    GaussianRational operator/(const GaussianRational& o) const;
    GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
    GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }

    bool operator==(const GaussianRational& o) const { return re_ == o.re_ && im_ == o.im_; }
    bool operator!=(const GaussianRational& o) const { return !(*this == o); }
    /// Lexicographic order; used only to keep containers deterministic.
    bool operator<(const GaussianRational& o) const {
        if (re_ != o.re_) return re_ < o.re_;
        return im_ < o.im_;
    }

    /// Canonical string form: "a/b", "c/di" or "a/b+c/di" (see JSON schemas).
    std::string str() const;
    static GaussianRational parse(const std::string& s);

private:
    Rational re_{0};
    Rational im_{0};
};

using GQ = GaussianRational;

/// Dense univariate polynomial over Q(i), coefficient j = coefficient of z^j.
/// Trailing (highest stored) coefficient is nonzero; the zero polynomial is empty.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(GQ constant);
    explicit Polynomial(std::vector<GQ> coeffs);

    static Polynomial z();

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<GQ>& coeffs() const { return coeffs_; }
    GQ coeff(int j) const;

    bool has_real_coeffs() const;

    Polynomial conj() const;
    GQ eval(const GQ& alpha) const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const GQ& c) const;

    bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    std::string str() const;

private:
    void normalize();
    std::vector<GQ> coeffs_;
};

}  // namespace liefam

#endif
