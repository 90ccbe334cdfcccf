#include "liefam/contraction.hpp"

#include <sstream>
#include <stdexcept>

namespace liefam {

namespace {

bool is_zero_vec(const Vec& v) {
    for (const auto& c : v)
        if (!c.is_zero()) return false;
    return true;
}

// Name for an adapted basis vector: the original name when the vector is
// +-(standard basis vector), a positional fallback otherwise.
std::string vector_name(const LieAlgebra& g, const Vec& v, int position) {
    int hit = -1;
    bool neg = false;
    for (int i = 0; i < g.dim(); ++i) {
        const GQ& c = v[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        if (hit >= 0 || (c != GQ(1) && c != GQ(-1))) return "v" + std::to_string(position + 1);
        hit = i;
        neg = (c == GQ(-1));
    }
    if (hit < 0) return "v" + std::to_string(position + 1);
    return (neg ? "-" : "") + g.basis_names()[static_cast<std::size_t>(hit)];
}

}  // namespace

void Decomposition::check() const {
    const int n = algebra.dim();
    if (static_cast<int>(k_basis.size() + p_basis.size()) != n)
        throw std::invalid_argument("decomposition does not have full dimension");
    Mat a = adapted_map();
    if (!a.inverse()) throw std::invalid_argument("k and p vectors do not form a basis");
    Span k(k_basis, n);
    if (k.dim() != static_cast<int>(k_basis.size()))
        throw std::invalid_argument("k vectors are linearly dependent");
    if (!algebra.is_subalgebra(k)) throw std::invalid_argument("k is not a subalgebra");
}

Mat Decomposition::adapted_map() const {
    std::vector<Vec> cols = k_basis;
    cols.insert(cols.end(), p_basis.begin(), p_basis.end());
    return Mat::from_columns(cols);
}

std::vector<std::string> Decomposition::adapted_names() const {
    std::vector<std::string> names;
    int pos = 0;
    for (const auto& v : k_basis) names.push_back("k:" + vector_name(algebra, v, pos++));
    for (const auto& v : p_basis) names.push_back("p:" + vector_name(algebra, v, pos++));
    return names;
}

Decomposition decomposition_with_canonical_complement(const LieAlgebra& g, const std::vector<Vec>& k_basis) {
    Span k(k_basis, g.dim());
    if (k.dim() != static_cast<int>(k_basis.size()))
        throw std::invalid_argument("k vectors are linearly dependent");
    std::vector<bool> pivot(static_cast<std::size_t>(g.dim()), false);
    for (int p : k.pivots()) pivot[static_cast<std::size_t>(p)] = true;
    Decomposition d{g, k_basis, {}};
    for (int c = 0; c < g.dim(); ++c)
        if (!pivot[static_cast<std::size_t>(c)]) d.p_basis.push_back(g.basis_vector(c));
    return d;
}

LieAlgebra iw_contract(const Decomposition& d) {
    d.check();
    const int n = d.algebra.dim();
    const int r = static_cast<int>(d.k_basis.size());
    LieAlgebra adapted = d.algebra.transported(d.adapted_map());
    LieAlgebra out(n, d.algebra.field(), d.adapted_names());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (i >= r) continue;  // p x p brackets vanish in the limit
            Vec v = adapted.basis_bracket(i, j);
            if (j >= r) {
                // k x p: only the p-component survives.
                for (int k = 0; k < r; ++k) v[static_cast<std::size_t>(k)] = GQ(0);
            }
            out.set_bracket(i, j, v);
        }
    return out;
}

GeneralizedContractionResult generalized_iw_contract(const LieAlgebra& g, const ExponentAssignment& e) {
    if (static_cast<int>(e.exponents.size()) != g.dim())
        throw std::invalid_argument("exponent count does not match dimension");
    GeneralizedContractionResult res;
    LimitFailure fail;
    LieAlgebra out(g.dim(), g.field(), g.basis_names());
    for (const auto& [key, c] : g.sc()) {
        int power = e.exponents[static_cast<std::size_t>(key.i)] + e.exponents[static_cast<std::size_t>(key.j)] -
                    e.exponents[static_cast<std::size_t>(key.k)];
        if (power < 0)
            fail.entries.emplace_back(key.i + 1, key.j + 1, key.k + 1, power);
        else if (power == 0)
            out.set_raw_constant(key.i, key.j, key.k, c);
        // power > 0: constant tends to zero
    }
    if (!fail.entries.empty())
        res.failure = std::move(fail);
    else
        res.algebra = std::move(out);
    return res;
}

Mat diagonal_transport(const ExponentAssignment& e, const GQ& eps) {
    std::vector<GQ> d;
    d.reserve(e.exponents.size());
    for (int n : e.exponents) {
        GQ v(1);
        for (int t = 0; t < (n >= 0 ? n : -n); ++t) v *= eps;
        if (n < 0) v = GQ(1) / v;
        d.push_back(v);
    }
    return Mat::diagonal(d);
}

std::string LimitFailure::str() const {
    std::ostringstream os;
    os << "no limit:";
    for (const auto& [i, j, k, p] : entries) os << " C_" << i << j << "^" << k << " exponent " << p << ";";
    return os.str();
}

LieAlgebra semidirect_quotient(const LieAlgebra& g, const std::vector<Vec>& k_basis) {
    const int n = g.dim();
    const int r = static_cast<int>(k_basis.size());
    Span k(k_basis, n);
    if (k.dim() != r) throw std::invalid_argument("k vectors are linearly dependent");
    if (!g.is_subalgebra(k)) throw std::invalid_argument("k is not a subalgebra");

    std::vector<bool> pivot(static_cast<std::size_t>(n), false);
    for (int p : k.pivots()) pivot[static_cast<std::size_t>(p)] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < n; ++c)
        if (!pivot[static_cast<std::size_t>(c)]) free_cols.push_back(c);

    Mat k_mat = Mat::from_columns(k_basis.empty() ? std::vector<Vec>{} : k_basis);
    auto k_coords = [&](const Vec& v) {
        if (r == 0) return Vec{};
        auto x = k_mat.solve(v);
        if (!x) throw std::logic_error("vector not in k despite subalgebra check");
        return *x;
    };
    auto quotient_coords = [&](const Vec& v) {
        Vec red = k.reduce(v);
        Vec q;
        q.reserve(free_cols.size());
        for (int c : free_cols) q.push_back(red[static_cast<std::size_t>(c)]);
        return q;
    };

    std::vector<std::string> names;
    for (int a = 0; a < r; ++a) names.push_back("k:" + vector_name(g, k_basis[static_cast<std::size_t>(a)], a));
    for (int c : free_cols) names.push_back("q:" + g.basis_names()[static_cast<std::size_t>(c)]);

    LieAlgebra out(n, g.field(), names);
    for (int a = 0; a < r; ++a) {
        for (int b = a + 1; b < r; ++b) {
            Vec v = g.bracket(k_basis[static_cast<std::size_t>(a)], k_basis[static_cast<std::size_t>(b)]);
            Vec coords = k_coords(v);
            Vec full(static_cast<std::size_t>(n), GQ(0));
            for (int t = 0; t < r; ++t) full[static_cast<std::size_t>(t)] = coords[static_cast<std::size_t>(t)];
            out.set_bracket(a, b, full);
        }
        for (std::size_t qc = 0; qc < free_cols.size(); ++qc) {
            Vec v = g.bracket(k_basis[static_cast<std::size_t>(a)], g.basis_vector(free_cols[qc]));
            Vec q = quotient_coords(v);
            Vec full(static_cast<std::size_t>(n), GQ(0));
            for (std::size_t t = 0; t < q.size(); ++t) full[r + t] = q[t];
            out.set_bracket(a, static_cast<int>(r + qc), full);
        }
    }
    return out;
}

WitnessReport check_equivalence_witness(const LieAlgebra& g, const std::vector<Vec>& k_basis,
                                        const std::vector<Vec>& kp_basis, const Mat& nu) {
    WitnessReport rep;
    const int n = g.dim();
    if (!nu.inverse()) {
        rep.failure = "nu is singular";
        return rep;
    }
    Span k(k_basis, n), kp(kp_basis, n);
    if (k.dim() != static_cast<int>(k_basis.size()) || kp.dim() != static_cast<int>(kp_basis.size())) {
        rep.failure = "subalgebra bases are linearly dependent";
        return rep;
    }
    if (!g.is_subalgebra(k) || !g.is_subalgebra(kp)) {
        rep.failure = "k or k' is not a subalgebra";
        return rep;
    }
    if (k.dim() != kp.dim()) {
        rep.failure = "k and k' have different dimensions";
        return rep;
    }
    // (a) nu maps k onto k' and restricts to a Lie homomorphism.
    for (std::size_t a = 0; a < k_basis.size(); ++a)
        if (!kp.contains(nu * k_basis[a])) {
            rep.failure = "nu(k) not contained in k' (basis vector " + std::to_string(a + 1) + ")";
            return rep;
        }
    for (std::size_t a = 0; a < k_basis.size(); ++a)
        for (std::size_t b = a + 1; b < k_basis.size(); ++b) {
            Vec lhs = nu * g.bracket(k_basis[a], k_basis[b]);
            Vec rhs = g.bracket(nu * k_basis[a], nu * k_basis[b]);
            for (std::size_t t = 0; t < lhs.size(); ++t)
                if (lhs[t] != rhs[t]) {
                    rep.failure = "nu|_k is not a Lie homomorphism at k-basis pair (" + std::to_string(a + 1) +
                                  "," + std::to_string(b + 1) + ")";
                    return rep;
                }
        }
    // (b) defect nu([X,Y]) - [nu X, nu Y] lies in k' for X in k, Y in g.
    for (std::size_t a = 0; a < k_basis.size(); ++a)
        for (int y = 0; y < n; ++y) {
            Vec lhs = nu * g.bracket(k_basis[a], g.basis_vector(y));
            Vec rhs = g.bracket(nu * k_basis[a], nu * g.basis_vector(y));
            Vec defect(lhs.size());
            for (std::size_t t = 0; t < lhs.size(); ++t) defect[t] = lhs[t] - rhs[t];
            if (!kp.contains(defect)) {
                rep.failure = "defect not in k' at k-basis " + std::to_string(a + 1) + ", ambient basis " +
                              g.basis_names()[static_cast<std::size_t>(y)];
                return rep;
            }
        }
    // Construct the induced map between the two canonical semidirect quotients
    // and verify it is a Lie isomorphism.
    LieAlgebra q = semidirect_quotient(g, k_basis);
    LieAlgebra qp = semidirect_quotient(g, kp_basis);
    const int r = static_cast<int>(k_basis.size());
    std::vector<bool> pivot(static_cast<std::size_t>(n), false);
    for (int p : kp.pivots()) pivot[static_cast<std::size_t>(p)] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < n; ++c)
        if (!pivot[static_cast<std::size_t>(c)]) free_cols.push_back(c);
    Mat kp_mat = Mat::from_columns(kp_basis);
    std::vector<bool> src_pivot(static_cast<std::size_t>(n), false);
    for (int p : k.pivots()) src_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<int> src_free;
    for (int c = 0; c < n; ++c)
        if (!src_pivot[static_cast<std::size_t>(c)]) src_free.push_back(c);

    Mat induced(n, n);
    for (int a = 0; a < r; ++a) {
        auto coords = kp_mat.solve(nu * k_basis[static_cast<std::size_t>(a)]);
        if (!coords) throw std::logic_error("nu(k) escaped k' after containment check");
        for (int t = 0; t < r; ++t) induced.at(t, a) = (*coords)[static_cast<std::size_t>(t)];
    }
    for (std::size_t c = 0; c < src_free.size(); ++c) {
        Vec red = kp.reduce(nu * g.basis_vector(src_free[c]));
        for (std::size_t t = 0; t < free_cols.size(); ++t)
            induced.at(static_cast<int>(r + t), static_cast<int>(r + c)) =
                red[static_cast<std::size_t>(free_cols[t])];
    }
    if (!induced.inverse()) {
        rep.failure = "induced map between semidirect quotients is singular";
        return rep;
    }
    if (!qp.transported(induced).structurally_equal(q)) {
        rep.failure = "induced map is not a Lie isomorphism between the semidirect quotients";
        return rep;
    }
    rep.pass = true;
    rep.induced = induced;
    return rep;
}

T0Report t0_analysis(const Decomposition& d) {
    d.check();
    T0Report rep;
    const int n = d.algebra.dim();
    const int r = static_cast<int>(d.k_basis.size());
    LieAlgebra contracted = iw_contract(d);
    // In the adapted basis, im(T0) is the first block and ker(T0) the second.
    std::vector<Vec> k_adapted, p_adapted;
    for (int i = 0; i < r; ++i) k_adapted.push_back(contracted.basis_vector(i));
    for (int i = r; i < n; ++i) p_adapted.push_back(contracted.basis_vector(i));
    Span k_span_g(d.k_basis, n);
    Span k_span(k_adapted, n), p_span(p_adapted, n);
    rep.im_subalgebra_of_g = d.algebra.is_subalgebra(k_span_g);
    rep.im_subalgebra_of_contraction = contracted.is_subalgebra(k_span);
    rep.ker_abelian_ideal = contracted.is_ideal(p_span) && contracted.is_abelian_span(p_span);
    // Semidirect splitting: k block constants of the contraction match g's
    // k-table, and the whole space is the direct sum of the two spans.
    bool k_matches = true;
    LieAlgebra adapted = d.algebra.transported(d.adapted_map());
    for (int i = 0; i < r && k_matches; ++i)
        for (int j = i + 1; j < r && k_matches; ++j)
            for (int k = 0; k < n; ++k)
                if (contracted.constant(i, j, k) != adapted.constant(i, j, k)) {
                    k_matches = false;
                    break;
                }
    rep.splits = k_matches && (k_span.dim() + p_span.dim() == n);
    return rep;
}

}  // namespace liefam
