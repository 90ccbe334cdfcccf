#ifndef LIEFAM_SO_CATALOG_HPP
#define LIEFAM_SO_CATALOG_HPP

#include "liefam/symmetric.hpp"

#include <string>
#include <vector>

namespace liefam {

struct SOParams {
    int p = 0, d = 0, q = 0;  // d > 0, p + d + q >= 2
    void check() const;
};

/// so(p,q) on the basis L_ab = E_ab - J_aa J_bb E_ba, (a,b) lexicographic,
/// a < b, with J = diag(1_p, -1_q). Carries the defining representation.
struct SORealization {
    LieAlgebra algebra;
    std::vector<Mat> matrices;  // defining (p+q) x (p+q) matrix per basis vector
    int p = 0, q = 0;
};

SORealization build_so(int p, int q);

/// theta_{p,d,q} = Ad(J_{p,d,q}) on so(p+d,q); diagonal on the L_ab basis.
Involution build_theta(const SOParams& params);
SymmetricPair build_theta_pair(const SOParams& params);

struct JhalfResult {
    Mat map;          // dual_form(so(p+d,q), theta) -> so(p, d+q), column j = image
    bool certified;   // exact table transport verified
    LieAlgebra dual;  // the dual algebra (source of the map)
    LieAlgebra target;
};

/// Ad(J^{1/2}) isomorphism from the dual form onto so(p, d+q), certified
/// by exact structure-constant transport.
JhalfResult dual_iso_via_Jhalf(const SOParams& params);

/// Conjugation bringing an S-twisted real structure to entrywise
/// conjugation: X -> P X P^{-1} with P = [[I, I], [iI, -iI]].
Mat p_conjugation(const Mat& x);

LieAlgebra build_abelian(int n);
LieAlgebra build_heisenberg(int dim);          // dim = 2k+1
LieAlgebra build_iso(int n);                   // so(n) |x R^n
LieAlgebra build_so_plus_abelian(int n, int m);  // so(n) (+) R^m

/// Catalog lookup by CLI name: "so:p,q", "theta:p,d,q" (returns the
/// underlying algebra), "iso:n", "heisenberg:m", "abelian:n".
LieAlgebra build_reference(const std::string& name);

}  // namespace liefam

#endif
