#include "liefam/lie_algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace liefam {

std::string field_name(Field f) { return f == Field::Real ? "real" : "complex"; }

LieAlgebra::LieAlgebra(int dim, Field field) : dim_(dim), field_(field) {
    basis_names_.reserve(static_cast<std::size_t>(dim));
    for (int i = 1; i <= dim; ++i) basis_names_.push_back("e" + std::to_string(i));
}

LieAlgebra::LieAlgebra(int dim, Field field, std::vector<std::string> basis_names)
    : dim_(dim), field_(field), basis_names_(std::move(basis_names)) {
    if (static_cast<int>(basis_names_.size()) != dim)
        throw std::invalid_argument("basis name count does not match dimension");
}

void LieAlgebra::set_basis_names(std::vector<std::string> names) {
    if (static_cast<int>(names.size()) != dim_)
        throw std::invalid_argument("basis name count does not match dimension");
    basis_names_ = std::move(names);
}

void LieAlgebra::set_constant(int i, int j, int k, const GQ& c) {
    if (i == j) {
        if (!c.is_zero()) throw std::invalid_argument("C_ii^k must vanish");
        return;
    }
    SCKey key = i < j ? SCKey{i, j, k} : SCKey{j, i, k};
    GQ val = i < j ? c : -c;
    if (val.is_zero())
        sc_.erase(key);
    else
        sc_[key] = val;
}

void LieAlgebra::set_bracket(int i, int j, const Vec& v) {
    if (static_cast<int>(v.size()) != dim_) throw std::invalid_argument("bracket vector length mismatch");
    for (int k = 0; k < dim_; ++k) set_constant(i, j, k, v[static_cast<std::size_t>(k)]);
}

void LieAlgebra::set_raw_constant(int i, int j, int k, const GQ& c) {
    if (c.is_zero())
        sc_.erase(SCKey{i, j, k});
    else
        sc_[SCKey{i, j, k}] = c;
}

GQ LieAlgebra::constant(int i, int j, int k) const {
    auto it = sc_.find(SCKey{i, j, k});
    if (it != sc_.end()) return it->second;
    it = sc_.find(SCKey{j, i, k});
    if (it != sc_.end()) return -it->second;
    return GQ(0);
}

Vec LieAlgebra::basis_vector(int i) const {
    Vec v(static_cast<std::size_t>(dim_), GQ(0));
    v[static_cast<std::size_t>(i)] = GQ(1);
    return v;
}

Vec LieAlgebra::basis_bracket(int i, int j) const {
    Vec v(static_cast<std::size_t>(dim_), GQ(0));
    for (int k = 0; k < dim_; ++k) v[static_cast<std::size_t>(k)] = constant(i, j, k);
    return v;
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
    if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_)
        throw std::invalid_argument("bracket operand dimension mismatch");
    Vec out(static_cast<std::size_t>(dim_), GQ(0));
    for (const auto& [key, c] : sc_) {
        GQ coeff = x[static_cast<std::size_t>(key.i)] * y[static_cast<std::size_t>(key.j)] -
                   x[static_cast<std::size_t>(key.j)] * y[static_cast<std::size_t>(key.i)];
        if (!coeff.is_zero()) out[static_cast<std::size_t>(key.k)] += c * coeff;
    }
    return out;
}

Mat LieAlgebra::ad(const Vec& x) const {
    Mat m(dim_, dim_);
    for (int j = 0; j < dim_; ++j) {
        Vec col = bracket(x, basis_vector(j));
        for (int k = 0; k < dim_; ++k) m.at(k, j) = col[static_cast<std::size_t>(k)];
    }
    return m;
}

ValidationReport LieAlgebra::validate() const {
    ValidationReport report;
    auto fail = [&](ValidationIssue issue) {
        report.ok = false;
        report.issues.push_back(std::move(issue));
    };

    if (field_ == Field::Real) {
        for (const auto& [key, c] : sc_)
            if (!c.is_real()) {
                fail({ValidationIssue::Kind::FieldMismatch, key.i + 1, key.j + 1, key.k + 1, -1,
                      "non-real constant " + c.str() + " in a real algebra"});
            }
    }

    // Antisymmetry over stored entries, including i = j and i > j duplicates.
    for (const auto& [key, c] : sc_) {
        if (key.i == key.j) {
            fail({ValidationIssue::Kind::Antisymmetry, key.i + 1, key.j + 1, key.k + 1, -1,
                  "C_ii^k = " + c.str() + " must vanish"});
            continue;
        }
        auto mirror = sc_.find(SCKey{key.j, key.i, key.k});
        if (mirror != sc_.end() && key.i < key.j && !(mirror->second + c).is_zero()) {
            fail({ValidationIssue::Kind::Antisymmetry, key.i + 1, key.j + 1, key.k + 1, -1,
                  "C_ij^k = " + c.str() + " but C_ji^k = " + mirror->second.str()});
        }
    }
    if (!report.ok) return report;  // Jacobi assumes a consistent table

    for (int i = 0; i < dim_; ++i)
        for (int j = i + 1; j < dim_; ++j)
            for (int k = j + 1; k < dim_; ++k) {
                Vec r = bracket(basis_bracket(i, j), basis_vector(k));
                Vec s = bracket(basis_bracket(j, k), basis_vector(i));
                Vec t = bracket(basis_bracket(k, i), basis_vector(j));
                for (int l = 0; l < dim_; ++l) {
                    GQ residue = r[static_cast<std::size_t>(l)] + s[static_cast<std::size_t>(l)] +
                                 t[static_cast<std::size_t>(l)];
                    if (!residue.is_zero()) {
                        fail({ValidationIssue::Kind::Jacobi, i + 1, j + 1, k + 1, l + 1,
                              "Jacobi residue " + residue.str()});
                        return report;  // first violated triple is enough
                    }
                }
            }
    return report;
}

bool LieAlgebra::structurally_equal(const LieAlgebra& o) const {
    if (dim_ != o.dim_ || field_ != o.field_) return false;
    // Compare canonicalized tables entry by entry.
    for (int i = 0; i < dim_; ++i)
        for (int j = i + 1; j < dim_; ++j)
            for (int k = 0; k < dim_; ++k)
                if (constant(i, j, k) != o.constant(i, j, k)) return false;
    return true;
}

LieAlgebra LieAlgebra::transported(const Mat& t) const {
    auto inv = t.inverse();
    if (!inv) throw std::invalid_argument("transport map is singular");
    LieAlgebra out(dim_, field_, basis_names_);
    for (int i = 0; i < dim_; ++i)
        for (int j = i + 1; j < dim_; ++j) {
            Vec v = bracket(t.col(i), t.col(j));
            out.set_bracket(i, j, *inv * v);
        }
    return out;
}

Mat LieAlgebra::killing_form() const {
    std::vector<Mat> ads;
    ads.reserve(static_cast<std::size_t>(dim_));
    for (int i = 0; i < dim_; ++i) ads.push_back(ad(basis_vector(i)));
    Mat k(dim_, dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = i; j < dim_; ++j) {
            GQ tr(0);
            for (int a = 0; a < dim_; ++a)
                for (int b = 0; b < dim_; ++b) tr += ads[static_cast<std::size_t>(i)].at(a, b) * ads[static_cast<std::size_t>(j)].at(b, a);
            k.at(i, j) = tr;
            k.at(j, i) = tr;
        }
    return k;
}

std::pair<int, int> LieAlgebra::killing_signature() const {
    if (field_ != Field::Real) throw std::domain_error("killing_signature requires a real algebra");
    return symmetric_signature(killing_form());
}

Span LieAlgebra::bracket_span(const Span& a, const Span& b) const {
    std::vector<Vec> gens;
    for (const auto& x : a.basis())
        for (const auto& y : b.basis()) {
            Vec v = bracket(x, y);
            bool zero = true;
            for (const auto& c : v)
                if (!c.is_zero()) {
                    zero = false;
                    break;
                }
            if (!zero) gens.push_back(std::move(v));
        }
    return Span(gens, dim_);
}

namespace {
Span full_span(int dim) {
    std::vector<Vec> rows;
    for (int i = 0; i < dim; ++i) {
        Vec v(static_cast<std::size_t>(dim), GQ(0));
        v[static_cast<std::size_t>(i)] = GQ(1);
        rows.push_back(std::move(v));
    }
    return Span(rows, dim);
}
}  // namespace

// Dimensions are listed until they stabilize: the first repeated value is
// included, and a zero term ends the sequence.
std::vector<int> LieAlgebra::derived_series_dims() const {
    Span current = full_span(dim_);
    std::vector<int> dims{current.dim()};
    while (current.dim() > 0) {
        Span next = bracket_span(current, current);
        dims.push_back(next.dim());
        if (next.dim() == current.dim() || next.dim() == 0) break;
        current = next;
    }
    return dims;
}

std::vector<int> LieAlgebra::lower_central_series_dims() const {
    Span whole = full_span(dim_);
    Span current = whole;
    std::vector<int> dims{current.dim()};
    while (current.dim() > 0) {
        Span next = bracket_span(whole, current);
        dims.push_back(next.dim());
        if (next.dim() == current.dim() || next.dim() == 0) break;
        current = next;
    }
    return dims;
}

Span LieAlgebra::derived_algebra() const {
    Span whole = full_span(dim_);
    return bracket_span(whole, whole);
}

Span LieAlgebra::center() const {
    // x central iff ad(e_i) x = 0 for all i: stack the ad matrices.
    Mat stacked(dim_ * dim_, dim_);
    for (int i = 0; i < dim_; ++i) {
        Mat m = ad(basis_vector(i));
        for (int r = 0; r < dim_; ++r)
            for (int c = 0; c < dim_; ++c) stacked.at(i * dim_ + r, c) = m.at(r, c);
    }
    return Span(stacked.kernel_basis(), dim_);
}

Span LieAlgebra::radical() const {
    // Characteristic-zero criterion: rad(g) = { x : K(x, [g,g]) = 0 }.
    Span derived = derived_algebra();
    Mat k = killing_form();
    Mat constraints(derived.dim(), dim_);
    for (int r = 0; r < derived.dim(); ++r) {
        Vec ky = k * derived.basis()[static_cast<std::size_t>(r)];
        for (int c = 0; c < dim_; ++c) constraints.at(r, c) = ky[static_cast<std::size_t>(c)];
    }
    if (derived.dim() == 0) return full_span(dim_);
    return Span(constraints.kernel_basis(), dim_);
}

bool LieAlgebra::is_subalgebra(const Span& s) const {
    for (const auto& x : s.basis())
        for (const auto& y : s.basis())
            if (!s.contains(bracket(x, y))) return false;
    return true;
}

bool LieAlgebra::is_ideal(const Span& s) const {
    for (int i = 0; i < dim_; ++i)
        for (const auto& y : s.basis())
            if (!s.contains(bracket(basis_vector(i), y))) return false;
    return true;
}

bool LieAlgebra::is_abelian_span(const Span& s) const {
    for (const auto& x : s.basis())
        for (const auto& y : s.basis())
            for (const auto& c : bracket(x, y))
                if (!c.is_zero()) return false;
    return true;
}

Fingerprint LieAlgebra::fingerprint() const {
    Fingerprint fp;
    fp.dim = dim_;
    fp.field = field_;
    fp.center_dim = center().dim();
    fp.derived_dims = derived_series_dims();
    fp.lcs_dims = lower_central_series_dims();
    fp.killing_rank = killing_form().rank();
    if (field_ == Field::Real) fp.killing_signature = killing_signature();
    fp.radical_dim = radical().dim();
    return fp;
}

LieAlgebra LieAlgebra::direct_sum(const LieAlgebra& other) const {
    if (field_ != other.field_) throw std::invalid_argument("direct sum needs matching scalar fields");
    std::vector<std::string> names = basis_names_;
    names.insert(names.end(), other.basis_names_.begin(), other.basis_names_.end());
    LieAlgebra out(dim_ + other.dim_, field_, std::move(names));
    for (const auto& [key, c] : sc_) out.set_raw_constant(key.i, key.j, key.k, c);
    for (const auto& [key, c] : other.sc_) out.set_raw_constant(key.i + dim_, key.j + dim_, key.k + dim_, c);
    return out;
}

std::string Fingerprint::str() const {
    std::ostringstream os;
    auto seq = [&](const std::vector<int>& v) {
        os << "(";
        for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
        os << ")";
    };
    os << "dim=" << dim << " field=" << field_name(field) << " center=" << center_dim << " derived=";
    seq(derived_dims);
    os << " lcs=";
    seq(lcs_dims);
    os << " killing_rank=" << killing_rank;
    if (killing_signature) os << " signature=(" << killing_signature->first << "," << killing_signature->second << ")";
    os << " radical=" << radical_dim;
    return os.str();
}

}  // namespace liefam
