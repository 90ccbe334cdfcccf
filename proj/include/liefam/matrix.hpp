#ifndef LIEFAM_MATRIX_HPP
#define LIEFAM_MATRIX_HPP

#include "liefam/scalars.hpp"

#include <optional>
#include <vector>

namespace liefam {

/// Dense matrix over Q(i), row-major. All elimination is exact.
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, GQ(0)) {}

    static Mat identity(int n);
    static Mat diagonal(const std::vector<GQ>& d);
    static Mat from_columns(const std::vector<std::vector<GQ>>& cols);
    static Mat from_rows(const std::vector<std::vector<GQ>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    GQ& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const GQ& at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    std::vector<GQ> row(int r) const;
    std::vector<GQ> col(int c) const;

    Mat transpose() const;
    Mat conj() const;
    Mat operator*(const Mat& o) const;
    std::vector<GQ> operator*(const std::vector<GQ>& v) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator*(const GQ& s) const;
    bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }

    bool is_zero() const;
    bool is_symmetric() const;
    bool is_real() const;

    /// In-place reduced row echelon form; returns pivot column indices.
    std::vector<int> rref();
    int rank() const;
    std::optional<Mat> inverse() const;
    /// Basis of the right null space, as column vectors.
    std::vector<std::vector<GQ>> kernel_basis() const;
    /// One solution of A x = b, if any.
    std::optional<std::vector<GQ>> solve(const std::vector<GQ>& b) const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<GQ> data_;
};

/// Signature (n_plus, n_minus) of a symmetric rational matrix, by exact
/// symmetric Gaussian congruence (hyperbolic 2x2 handling when the whole
/// remaining diagonal vanishes). Throws if the matrix is not real symmetric.
std::pair<int, int> symmetric_signature(const Mat& a);

/// Row-reduced span of a list of vectors; canonical subspace representation.
class Span {
public:
    Span() = default;
    explicit Span(const std::vector<std::vector<GQ>>& vectors, int ambient_dim);

    int dim() const { return static_cast<int>(basis_.size()); }
    int ambient_dim() const { return ambient_; }
    const std::vector<std::vector<GQ>>& basis() const { return basis_; }

    bool contains(const std::vector<GQ>& v) const;
    bool contains(const Span& other) const;
    bool operator==(const Span& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }

    /// Residue of v modulo this span: pivot coordinates eliminated.
    std::vector<GQ> reduce(const std::vector<GQ>& v) const;
    const std::vector<int>& pivots() const { return pivots_; }

private:
    int ambient_ = 0;
    std::vector<std::vector<GQ>> basis_;  // rref rows
    std::vector<int> pivots_;
};

}  // namespace liefam

#endif
