#ifndef LIEFAM_LIE_ALGEBRA_HPP
#define LIEFAM_LIE_ALGEBRA_HPP

#include "liefam/matrix.hpp"
#include "liefam/scalars.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace liefam {

enum class Field { Real, Complex };

std::string field_name(Field f);

using Vec = std::vector<GQ>;

/// Key (i,j,k) for C_ij^k, 0-based.
struct SCKey {
    int i, j, k;
    auto operator<=>(const SCKey&) const = default;
};

struct ValidationIssue {
    enum class Kind { Antisymmetry, Jacobi, FieldMismatch } kind;
    int i, j, k, l;   // offending indices (1-based in messages; l = -1 when unused)
    std::string detail;
};

struct ValidationReport {
    bool ok = true;
    std::vector<ValidationIssue> issues;
};

struct Fingerprint {
    int dim = 0;
    Field field = Field::Real;
    int center_dim = 0;
    std::vector<int> derived_dims;
    std::vector<int> lcs_dims;
    int killing_rank = 0;
    std::optional<std::pair<int, int>> killing_signature;  // real field only
    int radical_dim = 0;

    bool operator==(const Fingerprint&) const = default;
    std::string str() const;
};

/// Finite-dimensional Lie algebra by named basis and sparse structure
/// constants over Q (field Real) or Q(i) (field Complex).
///
/// Constructors in this repo always emit the canonical i<j form; tables
/// loaded from the outside may be arbitrary and are checked by validate().
class LieAlgebra {
public:
    LieAlgebra() = default;
    LieAlgebra(int dim, Field field);
    LieAlgebra(int dim, Field field, std::vector<std::string> basis_names);

    int dim() const { return dim_; }
    Field field() const { return field_; }
    const std::vector<std::string>& basis_names() const { return basis_names_; }
    void set_basis_names(std::vector<std::string> names);
    const std::map<SCKey, GQ>& sc() const { return sc_; }

    /// Stores C_ij^k (and the implied C_ji^k = -C_ij^k) in canonical form.
    void set_constant(int i, int j, int k, const GQ& c);
    /// Sets [e_i, e_j] = v.
    void set_bracket(int i, int j, const Vec& v);
    /// Raw entry as stored (used by validate on untrusted tables).
    void set_raw_constant(int i, int j, int k, const GQ& c);

    GQ constant(int i, int j, int k) const;
    Vec basis_vector(int i) const;
    Vec basis_bracket(int i, int j) const;

    Vec bracket(const Vec& x, const Vec& y) const;
    Mat ad(const Vec& x) const;

    ValidationReport validate() const;

    /// Same dim, field and canonical constants; basis names ignored.
    bool structurally_equal(const LieAlgebra& o) const;

    LieAlgebra transported(const Mat& t) const;  // bracket [x,y]_T = T^{-1}[Tx,Ty]
    Mat killing_form() const;
    std::pair<int, int> killing_signature() const;  // real field only

    std::vector<int> derived_series_dims() const;
    std::vector<int> lower_central_series_dims() const;
    Span derived_algebra() const;
    Span center() const;
    Span radical() const;  // Killing-orthogonal complement of [g,g]
    Fingerprint fingerprint() const;

    /// Span of all brackets [a, b], a in A, b in B.
    Span bracket_span(const Span& a, const Span& b) const;
    bool is_subalgebra(const Span& s) const;
    bool is_ideal(const Span& s) const;
    bool is_abelian_span(const Span& s) const;

    LieAlgebra direct_sum(const LieAlgebra& other) const;

private:
    int dim_ = 0;
    Field field_ = Field::Real;
    std::vector<std::string> basis_names_;
    std::map<SCKey, GQ> sc_;
};

}  // namespace liefam

#endif
