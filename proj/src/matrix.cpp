#include "liefam/matrix.hpp"

#include <stdexcept>

namespace liefam {

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = GQ(1);
    return m;
}

Mat Mat::diagonal(const std::vector<GQ>& d) {
    Mat m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (int i = 0; i < m.rows(); ++i) m.at(i, i) = d[static_cast<std::size_t>(i)];
    return m;
}

Mat Mat::from_columns(const std::vector<std::vector<GQ>>& cols) {
    if (cols.empty()) return Mat();
    Mat m(static_cast<int>(cols[0].size()), static_cast<int>(cols.size()));
    for (int c = 0; c < m.cols(); ++c) {
        if (static_cast<int>(cols[static_cast<std::size_t>(c)].size()) != m.rows())
            throw std::invalid_argument("ragged column list");
        for (int r = 0; r < m.rows(); ++r) m.at(r, c) = cols[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
    }
    return m;
}

Mat Mat::from_rows(const std::vector<std::vector<GQ>>& rows) {
    if (rows.empty()) return Mat();
    Mat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int r = 0; r < m.rows(); ++r) {
        if (static_cast<int>(rows[static_cast<std::size_t>(r)].size()) != m.cols())
            throw std::invalid_argument("ragged row list");
        for (int c = 0; c < m.cols(); ++c) m.at(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    }
    return m;
}

std::vector<GQ> Mat::row(int r) const {
    std::vector<GQ> v(static_cast<std::size_t>(cols_));
    for (int c = 0; c < cols_; ++c) v[static_cast<std::size_t>(c)] = at(r, c);
    return v;
}

std::vector<GQ> Mat::col(int c) const {
    std::vector<GQ> v(static_cast<std::size_t>(rows_));
    for (int r = 0; r < rows_; ++r) v[static_cast<std::size_t>(r)] = at(r, c);
    return v;
}

Mat Mat::transpose() const {
    Mat m(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
    return m;
}

Mat Mat::conj() const {
    Mat m(rows_, cols_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) m.at(r, c) = at(r, c).conj();
    return m;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch in product");
    Mat m(rows_, o.cols_);
    for (int r = 0; r < rows_; ++r)
        for (int k = 0; k < cols_; ++k) {
            const GQ& a = at(r, k);
            if (a.is_zero()) continue;
            for (int c = 0; c < o.cols_; ++c) m.at(r, c) += a * o.at(k, c);
        }
    return m;
}

std::vector<GQ> Mat::operator*(const std::vector<GQ>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("matrix-vector shape mismatch");
    std::vector<GQ> out(static_cast<std::size_t>(rows_), GQ(0));
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            if (!at(r, c).is_zero()) out[static_cast<std::size_t>(r)] += at(r, c) * v[static_cast<std::size_t>(c)];
    return out;
}

Mat Mat::operator+(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    Mat m(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = data_[k] + o.data_[k];
    return m;
}

Mat Mat::operator-(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    Mat m(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = data_[k] - o.data_[k];
    return m;
}

Mat Mat::operator*(const GQ& s) const {
    Mat m(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = data_[k] * s;
    return m;
}

bool Mat::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

bool Mat::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int r = 0; r < rows_; ++r)
        for (int c = r + 1; c < cols_; ++c)
            if (at(r, c) != at(c, r)) return false;
    return true;
}

bool Mat::is_real() const {
    for (const auto& x : data_)
        if (!x.is_real()) return false;
    return true;
}

std::vector<int> Mat::rref() {
    std::vector<int> pivots;
    int lead = 0;
    for (int c = 0; c < cols_ && lead < rows_; ++c) {
        int p = -1;
        for (int r = lead; r < rows_; ++r)
            if (!at(r, c).is_zero()) {
                p = r;
                break;
            }
        if (p < 0) continue;
        for (int k = 0; k < cols_; ++k) std::swap(at(p, k), at(lead, k));
        GQ inv = GQ(1) / at(lead, c);
        for (int k = 0; k < cols_; ++k) at(lead, k) *= inv;
        for (int r = 0; r < rows_; ++r) {
            if (r == lead || at(r, c).is_zero()) continue;
            GQ f = at(r, c);
            for (int k = 0; k < cols_; ++k) at(r, k) -= f * at(lead, k);
        }
        pivots.push_back(c);
        ++lead;
    }
    return pivots;
}

int Mat::rank() const {
    Mat m = *this;
    return static_cast<int>(m.rref().size());
}

std::optional<Mat> Mat::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    Mat aug(rows_, 2 * cols_);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
        aug.at(r, cols_ + r) = GQ(1);
    }
    auto pivots = aug.rref();
    if (static_cast<int>(pivots.size()) != rows_ || pivots.back() >= cols_) return std::nullopt;
    Mat inv(rows_, cols_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) inv.at(r, c) = aug.at(r, cols_ + c);
    return inv;
}

std::vector<std::vector<GQ>> Mat::kernel_basis() const {
    Mat m = *this;
    auto pivots = m.rref();
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols_), false);
    for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<std::vector<GQ>> basis;
    for (int free = 0; free < cols_; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        std::vector<GQ> v(static_cast<std::size_t>(cols_), GQ(0));
        v[static_cast<std::size_t>(free)] = GQ(1);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[static_cast<std::size_t>(pivots[r])] = -m.at(static_cast<int>(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<GQ>> Mat::solve(const std::vector<GQ>& b) const {
    if (static_cast<int>(b.size()) != rows_) throw std::invalid_argument("solve: rhs length mismatch");
    Mat aug(rows_, cols_ + 1);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
        aug.at(r, cols_) = b[static_cast<std::size_t>(r)];
    }
    auto pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;  // inconsistent
    std::vector<GQ> x(static_cast<std::size_t>(cols_), GQ(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[static_cast<std::size_t>(pivots[r])] = aug.at(static_cast<int>(r), cols_);
    return x;
}

std::pair<int, int> symmetric_signature(const Mat& a) {
    if (!a.is_symmetric() || !a.is_real())
        throw std::invalid_argument("signature requires a real symmetric matrix");
    int n = a.rows();
    Mat m = a;
    std::vector<bool> done(static_cast<std::size_t>(n), false);
    int n_plus = 0, n_minus = 0;
    for (;;) {
        int p = -1;
        for (int i = 0; i < n; ++i)
            if (!done[static_cast<std::size_t>(i)] && !m.at(i, i).is_zero()) {
                p = i;
                break;
            }
        if (p < 0) {
            // Remaining diagonal is zero; look for an off-diagonal hyperbolic pair.
            int hi = -1, hj = -1;
            for (int i = 0; i < n && hi < 0; ++i) {
                if (done[static_cast<std::size_t>(i)]) continue;
                for (int j = i + 1; j < n; ++j) {
                    if (done[static_cast<std::size_t>(j)]) continue;
                    if (!m.at(i, j).is_zero()) {
                        hi = i;
                        hj = j;
                        break;
                    }
                }
            }
            if (hi < 0) break;  // remaining block is zero
            // Congruence e_hi <- e_hi + e_hj puts 2*m(hi,hj) on the diagonal.
            for (int k = 0; k < n; ++k) m.at(hi, k) += m.at(hj, k);
            for (int k = 0; k < n; ++k) m.at(k, hi) += m.at(k, hj);
            continue;
        }
        if (m.at(p, p).re() > 0)
            ++n_plus;
        else
            ++n_minus;
        GQ d = m.at(p, p);
        for (int i = 0; i < n; ++i) {
            if (i == p || done[static_cast<std::size_t>(i)] || m.at(i, p).is_zero()) continue;
            GQ f = m.at(i, p) / d;
            for (int k = 0; k < n; ++k) m.at(i, k) -= f * m.at(p, k);
            for (int k = 0; k < n; ++k) m.at(k, i) -= f * m.at(k, p);
        }
        done[static_cast<std::size_t>(p)] = true;
    }
    return {n_plus, n_minus};
}

Span::Span(const std::vector<std::vector<GQ>>& vectors, int ambient_dim) : ambient_(ambient_dim) {
    if (vectors.empty()) return;
    Mat m = Mat::from_rows(vectors);
    if (m.cols() != ambient_dim) throw std::invalid_argument("span: ambient dimension mismatch");
    pivots_ = m.rref();
    for (std::size_t r = 0; r < pivots_.size(); ++r) basis_.push_back(m.row(static_cast<int>(r)));
}

std::vector<GQ> Span::reduce(const std::vector<GQ>& v) const {
    if (static_cast<int>(v.size()) != ambient_) throw std::invalid_argument("span: vector length mismatch");
    std::vector<GQ> r = v;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
        const GQ& c = r[static_cast<std::size_t>(pivots_[k])];
        if (c.is_zero()) continue;
        GQ f = c;  // pivot entries are 1 in rref
        for (int j = 0; j < ambient_; ++j) r[static_cast<std::size_t>(j)] -= f * basis_[k][static_cast<std::size_t>(j)];
    }
    return r;
}

bool Span::contains(const std::vector<GQ>& v) const {
    for (const auto& x : reduce(v))
        if (!x.is_zero()) return false;
    return true;
}

bool Span::contains(const Span& other) const {
    for (const auto& v : other.basis_)
        if (!contains(v)) return false;
    return true;
}

}  // namespace liefam
