#include "liefam/so_catalog.hpp"

#include <stdexcept>

namespace liefam {

void SOParams::check() const {
    if (p < 0 || q < 0 || d <= 0) throw std::invalid_argument("need p,q >= 0 and d > 0");
    if (p + d + q < 2) throw std::invalid_argument("need p + d + q >= 2");
}

namespace {

std::vector<std::pair<int, int>> lex_pairs(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
    return pairs;
}

// Coefficients of a matrix in the L_ab basis: entry (a,b) for a < b.
// Throws if the matrix is not in the span (exact reconstruction check).
Vec expand_in_so_basis(const Mat& m, const std::vector<Mat>& basis, const std::vector<std::pair<int, int>>& pairs) {
    Vec coords;
    coords.reserve(pairs.size());
    for (const auto& [a, b] : pairs) coords.push_back(m.at(a, b));
    Mat rebuilt(m.rows(), m.cols());
    for (std::size_t t = 0; t < pairs.size(); ++t)
        if (!coords[t].is_zero()) rebuilt = rebuilt + basis[t] * coords[t];
    if (!(rebuilt == m)) throw std::logic_error("matrix is not in the so(p,q) span");
    return coords;
}

}  // namespace

SORealization build_so(int p, int q) {
    if (p < 0 || q < 0 || p + q < 2) throw std::invalid_argument("build_so needs p + q >= 2");
    const int n = p + q;
    auto pairs = lex_pairs(n);
    auto sign = [&](int a) { return a < p ? GQ(1) : GQ(-1); };

    std::vector<Mat> basis;
    std::vector<std::string> names;
    for (const auto& [a, b] : pairs) {
        Mat m(n, n);
        m.at(a, b) = GQ(1);
        m.at(b, a) = -(sign(a) * sign(b));
        basis.push_back(std::move(m));
        names.push_back("L" + std::to_string(a + 1) + "_" + std::to_string(b + 1));
    }

    LieAlgebra g(static_cast<int>(pairs.size()), Field::Real, names);
    for (std::size_t i = 0; i < pairs.size(); ++i)
        for (std::size_t j = i + 1; j < pairs.size(); ++j) {
            Mat comm = basis[i] * basis[j] - basis[j] * basis[i];
            g.set_bracket(static_cast<int>(i), static_cast<int>(j), expand_in_so_basis(comm, basis, pairs));
        }
    return {std::move(g), std::move(basis), p, q};
}

Involution build_theta(const SOParams& params) {
    params.check();
    SORealization so = build_so(params.p + params.d, params.q);
    const int n = params.p + params.d + params.q;
    auto s = [&](int a) { return (a >= params.p && a < params.p + params.d) ? GQ(-1) : GQ(1); };
    // Ad(diag) scales L_ab by s_a s_b.
    std::vector<GQ> diag;
    for (const auto& [a, b] : lex_pairs(n)) diag.push_back(s(a) * s(b));
    return {so.algebra, Mat::diagonal(diag)};
}

SymmetricPair build_theta_pair(const SOParams& params) { return split(build_theta(params)); }

JhalfResult dual_iso_via_Jhalf(const SOParams& params) {
    params.check();
    SORealization source = build_so(params.p + params.d, params.q);
    SORealization target = build_so(params.p, params.d + params.q);
    SymmetricPair sp = build_theta_pair(params);
    DualForm dual = dual_form(sp);
    const int n = params.p + params.d + params.q;
    const int dim = source.algebra.dim();
    auto pairs = lex_pairs(n);

    std::vector<GQ> h, h_inv;
    for (int a = 0; a < n; ++a) {
        bool middle = a >= params.p && a < params.p + params.d;
        h.push_back(middle ? GQ::i() : GQ(1));
        h_inv.push_back(middle ? -GQ::i() : GQ(1));
    }
    Mat H = Mat::diagonal(h), Hinv = Mat::diagonal(h_inv);

    auto realize = [&](const Vec& coords, bool times_i) {
        Mat m(n, n);
        for (int t = 0; t < dim; ++t)
            if (!coords[static_cast<std::size_t>(t)].is_zero())
                m = m + source.matrices[static_cast<std::size_t>(t)] * coords[static_cast<std::size_t>(t)];
        if (times_i) m = m * GQ::i();
        return H * m * Hinv;
    };

    Mat map(dim, dim);
    int col = 0;
    auto add_column = [&](const Vec& coords, bool times_i) {
        Mat image = realize(coords, times_i);
        if (!image.is_real()) throw std::logic_error("Ad(J^{1/2}) image is not real");
        Vec t = expand_in_so_basis(image, target.matrices, pairs);
        for (int r = 0; r < dim; ++r) map.at(r, col) = t[static_cast<std::size_t>(r)];
        ++col;
    };
    for (const auto& v : sp.k_basis) add_column(v, false);
    for (const auto& v : sp.p_basis) add_column(v, true);

    bool certified = map.inverse().has_value() &&
                     target.algebra.transported(map).structurally_equal(dual.algebra);
    return {std::move(map), certified, dual.algebra, target.algebra};
}

Mat p_conjugation(const Mat& x) {
    if (x.rows() != x.cols() || x.rows() % 2 != 0) throw std::invalid_argument("need an even square matrix");
    const int m = x.rows() / 2;
    Mat p(2 * m, 2 * m);
    for (int t = 0; t < m; ++t) {
        p.at(t, t) = GQ(1);
        p.at(t, m + t) = GQ(1);
        p.at(m + t, t) = GQ::i();
        p.at(m + t, m + t) = -GQ::i();
    }
    return p * x * *p.inverse();
}

LieAlgebra build_abelian(int n) {
    if (n < 0) throw std::invalid_argument("negative dimension");
    return LieAlgebra(n, Field::Real);
}

LieAlgebra build_heisenberg(int dim) {
    if (dim < 3 || dim % 2 == 0) throw std::invalid_argument("heisenberg dimension must be odd and >= 3");
    LieAlgebra g(dim, Field::Real);
    for (int t = 0; t + 1 < dim - 1; t += 2) {
        Vec v(static_cast<std::size_t>(dim), GQ(0));
        v[static_cast<std::size_t>(dim - 1)] = GQ(1);
        g.set_bracket(t, t + 1, v);
    }
    return g;
}

LieAlgebra build_iso(int n) {
    if (n < 2) throw std::invalid_argument("iso(n) needs n >= 2");
    SORealization so = build_so(n, 0);
    const int rot = so.algebra.dim();
    const int dim = rot + n;
    std::vector<std::string> names = so.algebra.basis_names();
    for (int a = 1; a <= n; ++a) names.push_back("t" + std::to_string(a));
    LieAlgebra g(dim, Field::Real, names);
    for (const auto& [key, c] : so.algebra.sc()) g.set_raw_constant(key.i, key.j, key.k, c);
    // [L, t_c] = (L e_c) in the translation block.
    for (int t = 0; t < rot; ++t)
        for (int c = 0; c < n; ++c) {
            Vec v(static_cast<std::size_t>(dim), GQ(0));
            for (int a = 0; a < n; ++a) v[static_cast<std::size_t>(rot + a)] = so.matrices[static_cast<std::size_t>(t)].at(a, c);
            g.set_bracket(t, rot + c, v);
        }
    return g;
}

LieAlgebra build_so_plus_abelian(int n, int m) { return build_so(n, 0).algebra.direct_sum(build_abelian(m)); }

LieAlgebra build_reference(const std::string& name) {
    auto colon = name.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("unknown catalog name: " + name);
    std::string kind = name.substr(0, colon);
    std::vector<int> args;
    std::string rest = name.substr(colon + 1);
    std::size_t start = 0;
    while (start <= rest.size()) {
        auto comma = rest.find(',', start);
        std::string tok = rest.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (tok.empty()) throw std::invalid_argument("malformed catalog name: " + name);
        args.push_back(std::stoi(tok));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (kind == "so" && args.size() == 2) return build_so(args[0], args[1]).algebra;
    if (kind == "theta" && args.size() == 3) return build_theta(SOParams{args[0], args[1], args[2]}).algebra;
    if (kind == "iso" && args.size() == 1) return build_iso(args[0]);
    if (kind == "heisenberg" && args.size() == 1) return build_heisenberg(args[0]);
    if (kind == "abelian" && args.size() == 1) return build_abelian(args[0]);
    throw std::invalid_argument("unknown catalog name: " + name);
}

}  // namespace liefam
