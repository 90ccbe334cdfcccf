#ifndef LIEFAM_SYMMETRIC_HPP
#define LIEFAM_SYMMETRIC_HPP

#include "liefam/contraction.hpp"
#include "liefam/lie_algebra.hpp"

#include <string>
#include <vector>

namespace liefam {

/// Involutive automorphism of a real Lie algebra, as an exact matrix.
struct Involution {
    LieAlgebra algebra;
    Mat matrix;

    /// Throws unless matrix^2 = id and theta is a bracket automorphism.
    void check() const;
};

struct SymmetricPair {
    LieAlgebra algebra;
    Mat theta;
    std::vector<Vec> k_basis;  // +1 eigenspace (the symmetric subalgebra)
    std::vector<Vec> p_basis;  // -1 eigenspace

    Decomposition decomposition() const { return {algebra, k_basis, p_basis}; }
};

/// Exact +-1 eigenspace split; verifies the Z_2 grading.
SymmetricPair split(const Involution& theta);

/// Conjugate-linear involution x -> M * conj(x) on a complex algebra.
struct RealStructure {
    LieAlgebra complex_algebra;
    Mat conj_map;

    Vec apply(const Vec& x) const;
    void check() const;
};

/// Same constants over Q(i), with coefficient conjugation as real structure.
std::pair<LieAlgebra, RealStructure> complexify(const LieAlgebra& g);

struct DualForm {
    LieAlgebra algebra;        // g* on the basis {k_a} u {i p_b}
    SymmetricPair pair;        // induced pair: theta = diag(+1 on k, -1 on p)
    LieAlgebra g_adapted;      // g in the same adapted basis, for comparisons
};

/// Dual real form g^theta (+) i g^{-theta}: adapted table of g with the
/// p x p -> k constants negated.
DualForm dual_form(const SymmetricPair& sp);

/// Independent construction of g* as the sigma*-fixed points inside the
/// complexification (test oracle for dual_form).
LieAlgebra dual_form_via_fixed_points(const SymmetricPair& sp);

bool double_dual_check(const SymmetricPair& sp);

/// IW contraction of the dual pair; structurally equals iw_contract of the
/// original pair.
LieAlgebra dual_contraction(const SymmetricPair& sp);

}  // namespace liefam

#endif
