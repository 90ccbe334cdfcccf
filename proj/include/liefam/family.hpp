#ifndef LIEFAM_FAMILY_HPP
#define LIEFAM_FAMILY_HPP

#include "liefam/so_catalog.hpp"
#include "liefam/symmetric.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace liefam {

/// Free finite-rank module over the polynomial ring in z with polynomial
/// structure constants. `real` marks an R[z]-family; a complex family may
/// carry coefficient conjugation as its anti-holomorphic involution.
class Family {
public:
    Family() = default;
    Family(int rank, bool real);
    Family(int rank, bool real, std::vector<std::string> basis_names);

    int rank() const { return rank_; }
    bool real() const { return real_; }
    bool has_involution() const { return involution_; }
    void set_involution(bool on) { involution_ = on; }
    const std::vector<std::string>& basis_names() const { return basis_names_; }
    const std::map<SCKey, Polynomial>& sc() const { return sc_; }

    void set_constant(int i, int j, int k, const Polynomial& c);
    void set_raw_constant(int i, int j, int k, const Polynomial& c);
    Polynomial constant(int i, int j, int k) const;
    std::vector<Polynomial> basis_bracket(int i, int j) const;

    bool structurally_equal(const Family& o) const;

private:
    int rank_ = 0;
    bool real_ = false;
    bool involution_ = false;
    std::vector<std::string> basis_names_;
    std::map<SCKey, Polynomial> sc_;
};

struct FamilyIssue {
    enum class Kind { Antisymmetry, Jacobi, RealCoefficients } kind;
    int i, j, k, l;
    Polynomial residue;
    std::string str() const;
};

struct FamilyReport {
    bool ok = true;
    std::vector<FamilyIssue> issues;
};

/// Polynomial antisymmetry and ring-level Jacobi (residues are full
/// polynomials, never sample evaluations).
FamilyReport check_family(const Family& fam);

/// Evaluate all structure polynomials at alpha. Real families need real alpha.
LieAlgebra fiber(const Family& fam, const GQ& alpha);

/// Coefficient-wise conjugation of every structure polynomial.
Family conjugate_family(const Family& fam);

/// Fixed points of coefficient conjugation; requires the involution marker
/// and real structure polynomials (the basis itself is fixed).
Family real_points(const Family& fam);

/// The deformation family of a symmetric pair on the adapted basis {k} u {p}:
/// k x k and k x p constants of g, p x p constants multiplied by z.
struct ContractionFamily {
    Family family;
    int k_dim = 0;
    int p_dim = 0;
    LieAlgebra g_adapted;     // fiber at 1
    LieAlgebra dual_adapted;  // fiber at -1
    LieAlgebra contraction;   // fiber at 0
};

ContractionFamily contraction_family(const SymmetricPair& sp);

struct FiberCertificate {
    enum class Target { Original, Dual, Contraction };
    Target target;
    Mat map;  // certified Lie isomorphism fiber(alpha) -> target
};

/// Explicit isomorphism certificate for fibers at alpha = +-beta^2 (rational
/// beta) or alpha = 0; nullopt when alpha is not of that form.
std::optional<FiberCertificate> fiber_isomorphism_certificate(const ContractionFamily& cf, const Rational& alpha);

/// Independent oracle: the 2n x 2n block-matrix realization of the family
/// for catalog pairs, evaluated at alpha and compared structurally with
/// fiber(contraction_family(sp), alpha).
bool matrix_realization_check(const SOParams& params, const Rational& alpha);

}  // namespace liefam

#endif
