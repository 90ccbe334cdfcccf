#include "liefam/family.hpp"

#include <sstream>
#include <stdexcept>

namespace liefam {

Family::Family(int rank, bool real) : rank_(rank), real_(real) {
    for (int i = 1; i <= rank; ++i) basis_names_.push_back("e" + std::to_string(i));
}

Family::Family(int rank, bool real, std::vector<std::string> basis_names)
    : rank_(rank), real_(real), basis_names_(std::move(basis_names)) {
    if (static_cast<int>(basis_names_.size()) != rank)
        throw std::invalid_argument("basis name count does not match rank");
}

void Family::set_constant(int i, int j, int k, const Polynomial& c) {
    if (i == j) {
        if (!c.is_zero()) throw std::invalid_argument("C_ii^k must vanish");
        return;
    }
    SCKey key = i < j ? SCKey{i, j, k} : SCKey{j, i, k};
    Polynomial val = i < j ? c : -c;
    if (val.is_zero())
        sc_.erase(key);
    else
        sc_[key] = val;
}

void Family::set_raw_constant(int i, int j, int k, const Polynomial& c) {
    if (c.is_zero())
        sc_.erase(SCKey{i, j, k});
    else
        sc_[SCKey{i, j, k}] = c;
}

Polynomial Family::constant(int i, int j, int k) const {
    auto it = sc_.find(SCKey{i, j, k});
    if (it != sc_.end()) return it->second;
    it = sc_.find(SCKey{j, i, k});
    if (it != sc_.end()) return -it->second;
    return Polynomial();
}

std::vector<Polynomial> Family::basis_bracket(int i, int j) const {
    std::vector<Polynomial> v(static_cast<std::size_t>(rank_));
    for (int k = 0; k < rank_; ++k) v[static_cast<std::size_t>(k)] = constant(i, j, k);
    return v;
}

bool Family::structurally_equal(const Family& o) const {
    if (rank_ != o.rank_ || real_ != o.real_) return false;
    for (int i = 0; i < rank_; ++i)
        for (int j = i + 1; j < rank_; ++j)
            for (int k = 0; k < rank_; ++k)
                if (constant(i, j, k) != o.constant(i, j, k)) return false;
    return true;
}

std::string FamilyIssue::str() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Antisymmetry:
            os << "antisymmetry violated at (" << i << "," << j << "," << k << ")";
            break;
        case Kind::Jacobi:
            os << "Jacobi residue at (" << i << "," << j << "," << k << ") component " << l << ": "
               << residue.str();
            break;
        case Kind::RealCoefficients:
            os << "non-real coefficient in C_" << i << j << "^" << k << ": " << residue.str();
            break;
    }
    return os.str();
}

FamilyReport check_family(const Family& fam) {
    FamilyReport rep;
    const int n = fam.rank();
    for (const auto& [key, c] : fam.sc()) {
        if (fam.real() && !c.has_real_coeffs()) {
            rep.ok = false;
            rep.issues.push_back({FamilyIssue::Kind::RealCoefficients, key.i + 1, key.j + 1, key.k + 1, -1, c});
        }
        if (key.i == key.j && !c.is_zero()) {
            rep.ok = false;
            rep.issues.push_back({FamilyIssue::Kind::Antisymmetry, key.i + 1, key.j + 1, key.k + 1, -1, c});
        }
        if (key.i > key.j) {
            Polynomial mirror = fam.sc().count(SCKey{key.j, key.i, key.k})
                                    ? fam.sc().at(SCKey{key.j, key.i, key.k})
                                    : Polynomial();
            if (!(mirror + c).is_zero()) {
                rep.ok = false;
                rep.issues.push_back({FamilyIssue::Kind::Antisymmetry, key.i + 1, key.j + 1, key.k + 1, -1, c});
            }
        }
    }
    if (!rep.ok) return rep;

    // Ring-level Jacobi: residues are polynomials in z.
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    Polynomial residue;
                    for (int m = 0; m < n; ++m) {
                        residue = residue + fam.constant(i, j, m) * fam.constant(m, k, l) +
                                  fam.constant(j, k, m) * fam.constant(m, i, l) +
                                  fam.constant(k, i, m) * fam.constant(m, j, l);
                    }
                    if (!residue.is_zero()) {
                        rep.ok = false;
                        rep.issues.push_back({FamilyIssue::Kind::Jacobi, i + 1, j + 1, k + 1, l + 1, residue});
                        return rep;  // first nonzero residue polynomial
                    }
                }
    return rep;
}

LieAlgebra fiber(const Family& fam, const GQ& alpha) {
    if (fam.real() && !alpha.is_real()) throw std::invalid_argument("real family evaluated at non-real alpha");
    LieAlgebra g(fam.rank(), fam.real() ? Field::Real : Field::Complex, fam.basis_names());
    for (const auto& [key, c] : fam.sc()) g.set_raw_constant(key.i, key.j, key.k, c.eval(alpha));
    return g;
}

Family conjugate_family(const Family& fam) {
    Family out(fam.rank(), fam.real(), fam.basis_names());
    out.set_involution(fam.has_involution());
    for (const auto& [key, c] : fam.sc()) out.set_raw_constant(key.i, key.j, key.k, c.conj());
    return out;
}

Family real_points(const Family& fam) {
    if (!fam.has_involution())
        throw std::invalid_argument("real_points needs the coefficient-conjugation involution");
    for (const auto& [key, c] : fam.sc())
        if (!c.has_real_coeffs())
            throw std::domain_error("structure constants are not real on the sigma-fixed basis: C_" +
                                    std::to_string(key.i + 1) + std::to_string(key.j + 1) + "^" +
                                    std::to_string(key.k + 1) + " = " + c.str());
    Family out(fam.rank(), true, fam.basis_names());
    for (const auto& [key, c] : fam.sc()) out.set_raw_constant(key.i, key.j, key.k, c);
    return out;
}

ContractionFamily contraction_family(const SymmetricPair& sp) {
    DualForm dual = dual_form(sp);
    const int n = sp.algebra.dim();
    const int r = static_cast<int>(sp.k_basis.size());

    ContractionFamily cf;
    cf.k_dim = r;
    cf.p_dim = n - r;
    cf.g_adapted = dual.g_adapted;
    cf.dual_adapted = dual.algebra;
    cf.contraction = iw_contract(sp.decomposition());

    Family fam(n, true, dual.g_adapted.basis_names());
    for (const auto& [key, c] : dual.g_adapted.sc()) {
        bool pp_to_k = key.i >= r && key.j >= r && key.k < r;
        Polynomial value = pp_to_k ? Polynomial(c) * Polynomial::z() : Polynomial(c);
        fam.set_raw_constant(key.i, key.j, key.k, value);
    }
    cf.family = std::move(fam);
    return cf;
}

std::optional<FiberCertificate> fiber_isomorphism_certificate(const ContractionFamily& cf, const Rational& alpha) {
    const int n = cf.family.rank();
    if (alpha == 0) {
        Mat id = Mat::identity(n);
        if (!cf.contraction.structurally_equal(fiber(cf.family, GQ(alpha))))
            throw std::logic_error("fiber at 0 does not match the contraction");
        return FiberCertificate{FiberCertificate::Target::Contraction, id};
    }
    Rational beta;
    bool positive = alpha > 0;
    if (!rational_square_root(positive ? alpha : -alpha, &beta)) return std::nullopt;
    std::vector<GQ> diag;
    for (int t = 0; t < n; ++t) diag.push_back(t < cf.k_dim ? GQ(1) : GQ(beta));
    Mat map = Mat::diagonal(diag);
    const LieAlgebra& target = positive ? cf.g_adapted : cf.dual_adapted;
    if (!target.transported(map).structurally_equal(fiber(cf.family, GQ(alpha))))
        throw std::logic_error("scaling certificate failed exact table transport");
    return FiberCertificate{positive ? FiberCertificate::Target::Original : FiberCertificate::Target::Dual, map};
}

bool matrix_realization_check(const SOParams& params, const Rational& alpha) {
    params.check();
    SORealization so = build_so(params.p + params.d, params.q);
    SymmetricPair sp = build_theta_pair(params);
    ContractionFamily cf = contraction_family(sp);
    const int n = params.p + params.d + params.q;
    const int dim = so.algebra.dim();

    auto realize = [&](const Vec& coords) {
        Mat m(n, n);
        for (int t = 0; t < dim; ++t)
            if (!coords[static_cast<std::size_t>(t)].is_zero())
                m = m + so.matrices[static_cast<std::size_t>(t)] * coords[static_cast<std::size_t>(t)];
        return m;
    };

    // Block matrices [[X,0],[0,X]] for k vectors, [[0,X],[alpha X,0]] for p.
    std::vector<Mat> blocks;
    auto embed = [&](const Mat& x, bool is_p) {
        Mat b(2 * n, 2 * n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
                if (!is_p) {
                    b.at(r, c) = x.at(r, c);
                    b.at(n + r, n + c) = x.at(r, c);
                } else {
                    b.at(r, n + c) = x.at(r, c);
                    b.at(n + r, c) = x.at(r, c) * GQ(alpha);
                }
            }
        return b;
    };
    for (const auto& v : sp.k_basis) blocks.push_back(embed(realize(v), false));
    for (const auto& v : sp.p_basis) blocks.push_back(embed(realize(v), true));

    // Structure constants in the block basis, by exact linear solve on
    // vectorized matrices.
    Mat b(4 * n * n, dim);
    for (int t = 0; t < dim; ++t)
        for (int r = 0; r < 2 * n; ++r)
            for (int c = 0; c < 2 * n; ++c) b.at(r * 2 * n + c, t) = blocks[static_cast<std::size_t>(t)].at(r, c);
    LieAlgebra block_alg(dim, Field::Real);
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j) {
            Mat comm = blocks[static_cast<std::size_t>(i)] * blocks[static_cast<std::size_t>(j)] -
                       blocks[static_cast<std::size_t>(j)] * blocks[static_cast<std::size_t>(i)];
            Vec rhs(static_cast<std::size_t>(4 * n * n));
            for (int r = 0; r < 2 * n; ++r)
                for (int c = 0; c < 2 * n; ++c) rhs[static_cast<std::size_t>(r * 2 * n + c)] = comm.at(r, c);
            auto coords = b.solve(rhs);
            if (!coords) return false;  // commutator escaped the span
            block_alg.set_bracket(i, j, *coords);
        }
    return block_alg.structurally_equal(fiber(cf.family, GQ(alpha)));
}

}  // namespace liefam
