#ifndef LIEFAM_CONTRACTION_HPP
#define LIEFAM_CONTRACTION_HPP

#include "liefam/lie_algebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace liefam {

/// g = k (+) p with k a subalgebra and p a vector-space complement.
struct Decomposition {
    LieAlgebra algebra;
    std::vector<Vec> k_basis;
    std::vector<Vec> p_basis;

    /// Throws unless k + p is a basis and k is closed under the bracket.
    void check() const;
    /// Adapted change of basis (k columns first, then p columns).
    Mat adapted_map() const;
    std::vector<std::string> adapted_names() const;
};

/// p-complement chosen canonically: standard basis vectors off the pivot
/// columns of the row-reduced k.
Decomposition decomposition_with_canonical_complement(const LieAlgebra& g, const std::vector<Vec>& k_basis);

/// Simple Inonu-Wigner contraction: k x k brackets kept, k x p projected to p,
/// p x p zeroed; returned in the adapted basis.
LieAlgebra iw_contract(const Decomposition& d);

struct ExponentAssignment {
    std::vector<int> exponents;
};

struct LimitFailure {
    // (i,j,k) 1-based with the negative exponent n_i + n_j - n_k.
    std::vector<std::tuple<int, int, int, int>> entries;
    std::string str() const;
};

struct GeneralizedContractionResult {
    std::optional<LieAlgebra> algebra;
    std::optional<LimitFailure> failure;
};

/// Diagonal contraction by T_eps e_j = eps^(n_j) e_j: constant C_ij^k picks up
/// eps^(n_i + n_j - n_k); the limit exists iff every exponent is >= 0.
GeneralizedContractionResult generalized_iw_contract(const LieAlgebra& g, const ExponentAssignment& e);

/// Diagonal transport matrix at a concrete eps (used to cross-check the
/// exponent law against transported()).
Mat diagonal_transport(const ExponentAssignment& e, const GQ& eps);

/// Canonical model k |x (g/k) with abelian quotient and adjoint action.
LieAlgebra semidirect_quotient(const LieAlgebra& g, const std::vector<Vec>& k_basis);

struct WitnessReport {
    bool pass = false;
    std::string failure;           // empty on pass
    std::optional<Mat> induced;    // the validated map between the two semidirect quotients
};

/// Sufficient-condition checker for equivalence of subalgebras:
/// nu|_k : k -> k' a Lie isomorphism and nu([X,Y]) - [nu X, nu Y] in k'
/// for X in k, Y in g. On pass, builds the induced isomorphism between
/// semidirect_quotient(g,k) and semidirect_quotient(g,k') and verifies it.
WitnessReport check_equivalence_witness(const LieAlgebra& g, const std::vector<Vec>& k_basis,
                                        const std::vector<Vec>& kp_basis, const Mat& nu);

struct T0Report {
    bool im_subalgebra_of_g = false;
    bool im_subalgebra_of_contraction = false;
    bool ker_abelian_ideal = false;
    bool splits = false;
    bool pass() const { return im_subalgebra_of_g && im_subalgebra_of_contraction && ker_abelian_ideal && splits; }
};

/// Structural facts about the limit projection T_0 of a simple contraction.
T0Report t0_analysis(const Decomposition& d);

}  // namespace liefam

#endif
