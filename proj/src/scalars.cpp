#include "liefam/scalars.hpp"

#include <cctype>
#include <stdexcept>

namespace liefam {

std::string rational_to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

Rational rational_from_string(const std::string& input) {
    // cpp_int rejects a leading '+'.
    std::string s = (!input.empty() && input[0] == '+') ? input.substr(1) : input;
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Integer(s));
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in rational: " + s);
    return Rational(num, den);
}

bool rational_square_root(const Rational& r, Rational* root) {
    if (r < 0) return false;
    Integer num = numerator(r), den = denominator(r);
    Integer sn = sqrt(num), sd = sqrt(den);
    if (sn * sn != num || sd * sd != den) return false;
    if (root) *root = Rational(sn, sd);
    return true;
}

GaussianRational GaussianRational::operator/(const GaussianRational& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero Gaussian rational");
    Rational n = o.norm();
    GaussianRational c = *this * o.conj();
    return {c.re_ / n, c.im_ / n};
}

namespace {

// One signed term of the "a/b+c/di" form; pure-imaginary terms end with 'i'.
struct Term {
    Rational value;
    bool imaginary;
};

Term parse_term(std::string t) {
    if (t.empty()) throw std::invalid_argument("empty scalar term");
    Term out{Rational(0), false};
    if (t.back() == 'i') {
        out.imaginary = true;
        t.pop_back();
        if (t.empty() || t == "+")
            t = "1";
        else if (t == "-")
            t = "-1";
    }
    out.value = rational_from_string(t);
    return out;
}

}  // namespace

GaussianRational GaussianRational::parse(const std::string& input) {
    std::string s;
    for (char c : input)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty scalar string");

    // Split at the last top-level +/- (not in position 0, not after '/').
    std::size_t split = std::string::npos;
    for (std::size_t k = 1; k < s.size(); ++k) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != '/') split = k;
    }
    GaussianRational out;
    if (split == std::string::npos) {
        Term t = parse_term(s);
        if (t.imaginary)
            out.im_ = t.value;
        else
            out.re_ = t.value;
        return out;
    }
    Term a = parse_term(s.substr(0, split));
    Term b = parse_term(s.substr(split));
    if (a.imaginary == b.imaginary)
        throw std::invalid_argument("malformed Gaussian rational: " + input);
    out.re_ = a.imaginary ? b.value : a.value;
    out.im_ = a.imaginary ? a.value : b.value;
    return out;
}

std::string GaussianRational::str() const {
    if (im_ == 0) return rational_to_string(re_);
    std::string imag = rational_to_string(im_) + "i";
    if (re_ == 0) return imag;
    if (im_ > 0) return rational_to_string(re_) + "+" + imag;
    return rational_to_string(re_) + imag;  // the '-' is already in imag
}

Polynomial::Polynomial(GQ constant) {
    coeffs_.push_back(std::move(constant));
    normalize();
}

Polynomial::Polynomial(std::vector<GQ> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Polynomial Polynomial::z() { return Polynomial(std::vector<GQ>{GQ(0), GQ(1)}); }

GQ Polynomial::coeff(int j) const {
    if (j < 0 || j >= static_cast<int>(coeffs_.size())) return GQ(0);
    return coeffs_[static_cast<std::size_t>(j)];
}

bool Polynomial::has_real_coeffs() const {
    for (const auto& c : coeffs_)
        if (!c.is_real()) return false;
    return true;
}

void Polynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::conj() const {
    std::vector<GQ> c;
    c.reserve(coeffs_.size());
    for (const auto& a : coeffs_) c.push_back(a.conj());
    return Polynomial(std::move(c));
}

GQ Polynomial::eval(const GQ& alpha) const {
    GQ acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * alpha + *it;
    return acc;
}

Polynomial Polynomial::operator-() const {
    std::vector<GQ> c;
    c.reserve(coeffs_.size());
    for (const auto& a : coeffs_) c.push_back(-a);
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<GQ> c(std::max(coeffs_.size(), o.coeffs_.size()), GQ(0));
    for (std::size_t j = 0; j < coeffs_.size(); ++j) c[j] += coeffs_[j];
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[j] += o.coeffs_[j];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return Polynomial();
    std::vector<GQ> c(coeffs_.size() + o.coeffs_.size() - 1, GQ(0));
    for (std::size_t a = 0; a < coeffs_.size(); ++a)
        for (std::size_t b = 0; b < o.coeffs_.size(); ++b) c[a + b] += coeffs_[a] * o.coeffs_[b];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator*(const GQ& s) const {
    std::vector<GQ> c;
    c.reserve(coeffs_.size());
    for (const auto& a : coeffs_) c.push_back(a * s);
    return Polynomial(std::move(c));
}

std::string Polynomial::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + coeffs_[j].str() + ")";
        if (j == 1)
            out += "*z";
        else if (j > 1)
            out += "*z^" + std::to_string(j);
    }
    return out;
}

}  // namespace liefam
