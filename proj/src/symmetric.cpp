#include "liefam/symmetric.hpp"

#include <stdexcept>

namespace liefam {

void Involution::check() const {
    const int n = algebra.dim();
    if (matrix.rows() != n || matrix.cols() != n) throw std::invalid_argument("involution matrix shape mismatch");
    if (algebra.field() != Field::Real) throw std::invalid_argument("involutions are defined on real algebras here");
    if (!(matrix * matrix == Mat::identity(n))) throw std::invalid_argument("matrix is not involutive");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Vec lhs = matrix * algebra.basis_bracket(i, j);
            Vec rhs = algebra.bracket(matrix.col(i), matrix.col(j));
            if (lhs != rhs) throw std::invalid_argument("matrix is not a bracket automorphism");
        }
}

SymmetricPair split(const Involution& theta) {
    theta.check();
    const int n = theta.algebra.dim();
    Mat plus = theta.matrix - Mat::identity(n);   // kernel = +1 eigenspace
    Mat minus = theta.matrix + Mat::identity(n);  // kernel = -1 eigenspace
    SymmetricPair sp{theta.algebra, theta.matrix, plus.kernel_basis(), minus.kernel_basis()};
    if (static_cast<int>(sp.k_basis.size() + sp.p_basis.size()) != n)
        throw std::logic_error("eigenspaces do not fill the algebra");
    // Z_2 grading, checked exactly.
    Span k(sp.k_basis, n), p(sp.p_basis, n);
    auto graded = [&](const std::vector<Vec>& a, const std::vector<Vec>& b, const Span& target) {
        for (const auto& x : a)
            for (const auto& y : b)
                if (!target.contains(theta.algebra.bracket(x, y))) return false;
        return true;
    };
    if (!graded(sp.k_basis, sp.k_basis, k) || !graded(sp.k_basis, sp.p_basis, p) ||
        !graded(sp.p_basis, sp.p_basis, k))
        throw std::logic_error("grading violated by an involutive automorphism");
    return sp;
}

Vec RealStructure::apply(const Vec& x) const {
    Vec c(x.size());
    for (std::size_t t = 0; t < x.size(); ++t) c[t] = x[t].conj();
    return conj_map * c;
}

void RealStructure::check() const {
    const int n = complex_algebra.dim();
    // sigma^2 = id for x -> M conj(x) means M conj(M) = id.
    if (!(conj_map * conj_map.conj() == Mat::identity(n)))
        throw std::invalid_argument("real structure is not involutive");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Vec lhs = apply(complex_algebra.basis_bracket(i, j));
            Vec rhs = complex_algebra.bracket(apply(complex_algebra.basis_vector(i)),
                                              apply(complex_algebra.basis_vector(j)));
            if (lhs != rhs) throw std::invalid_argument("real structure does not preserve the bracket");
        }
}

std::pair<LieAlgebra, RealStructure> complexify(const LieAlgebra& g) {
    if (g.field() != Field::Real) throw std::invalid_argument("complexify expects a real algebra");
    LieAlgebra gc(g.dim(), Field::Complex, g.basis_names());
    for (const auto& [key, c] : g.sc()) gc.set_raw_constant(key.i, key.j, key.k, c);
    RealStructure sigma{gc, Mat::identity(g.dim())};
    return {std::move(gc), std::move(sigma)};
}

DualForm dual_form(const SymmetricPair& sp) {
    const int n = sp.algebra.dim();
    const int r = static_cast<int>(sp.k_basis.size());
    Decomposition d = sp.decomposition();
    d.check();
    LieAlgebra adapted = sp.algebra.transported(d.adapted_map());

    std::vector<std::string> names;
    int pos = 0;
    for (const auto& kv : sp.k_basis) {
        (void)kv;
        names.push_back(d.adapted_names()[static_cast<std::size_t>(pos)].substr(2));
        ++pos;
    }
    for (; pos < n; ++pos) names.push_back("i*" + d.adapted_names()[static_cast<std::size_t>(pos)].substr(2));

    LieAlgebra dual(n, Field::Real, names);
    for (const auto& [key, c] : adapted.sc()) {
        bool pp_to_k = key.i >= r && key.j >= r && key.k < r;
        dual.set_raw_constant(key.i, key.j, key.k, pp_to_k ? -c : c);
    }

    std::vector<GQ> diag;
    for (int t = 0; t < n; ++t) diag.push_back(t < r ? GQ(1) : GQ(-1));
    SymmetricPair dual_pair{dual, Mat::diagonal(diag), {}, {}};
    for (int t = 0; t < r; ++t) dual_pair.k_basis.push_back(dual.basis_vector(t));
    for (int t = r; t < n; ++t) dual_pair.p_basis.push_back(dual.basis_vector(t));

    adapted.set_basis_names(d.adapted_names());
    return {std::move(dual), std::move(dual_pair), std::move(adapted)};
}

LieAlgebra dual_form_via_fixed_points(const SymmetricPair& sp) {
    const int n = sp.algebra.dim();
    const int r = static_cast<int>(sp.k_basis.size());
    auto [gc, sigma] = complexify(sp.algebra);
    (void)sigma;
    // sigma*-fixed vectors: a + ib with theta a = a, theta b = -b, so a basis
    // is {k_a} u {i p_b}. Express complex brackets back in that basis; the
    // coordinates must come out real.
    std::vector<Vec> basis;
    for (const auto& v : sp.k_basis) basis.push_back(v);
    for (const auto& v : sp.p_basis) {
        Vec iv(v.size());
        for (std::size_t t = 0; t < v.size(); ++t) iv[t] = v[t] * GQ::i();
        basis.push_back(std::move(iv));
    }
    Mat w = Mat::from_columns(basis);
    Mat w_inv = *w.inverse();
    LieAlgebra out(n, Field::Real);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Vec coords = w_inv * gc.bracket(basis[static_cast<std::size_t>(i)], basis[static_cast<std::size_t>(j)]);
            for (const auto& c : coords)
                if (!c.is_real()) throw std::logic_error("sigma*-fixed points are not bracket-closed over R");
            out.set_bracket(i, j, coords);
        }
    (void)r;
    return out;
}

bool double_dual_check(const SymmetricPair& sp) {
    DualForm first = dual_form(sp);
    DualForm second = dual_form(first.pair);
    return second.algebra.structurally_equal(first.g_adapted);
}

LieAlgebra dual_contraction(const SymmetricPair& sp) {
    DualForm dual = dual_form(sp);
    return iw_contract(dual.pair.decomposition());
}

}  // namespace liefam
