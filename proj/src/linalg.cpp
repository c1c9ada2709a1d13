#include "albert/linalg.hpp"

#include <cassert>
#include <stdexcept>

namespace albert {

Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec_add: size mismatch");
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec_sub: size mismatch");
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec vec_scale(const Scalar& c, const Vec& a) {
    Vec r = a;
    for (auto& x : r) x = c * x;
    return r;
}

bool vec_is_zero(const Vec& a) {
    for (const auto& x : a)
        if (!x.is_zero()) return false;
    return true;
}

Mat::Mat(std::size_t rows, std::size_t cols, const Scalar& fill)
    : rows_(rows), cols_(cols), field_(fill.field()), data_(rows * cols, fill) {}

Mat Mat::zero(std::size_t rows, std::size_t cols, const FieldSpec& k) {
    return Mat(rows, cols, Scalar(k, 0));
}

Mat Mat::identity(std::size_t n, const FieldSpec& k) {
    Mat m = zero(n, n, k);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = one(k);
    return m;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("Mat::operator*: shape mismatch");
    Mat r = zero(rows_, o.cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

Mat Mat::operator+(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat::operator+: shape mismatch");
    Mat r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat::operator-: shape mismatch");
    Mat r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
    return r;
}

Vec Mat::apply(const Vec& v) const {
    if (v.size() != cols_) throw std::invalid_argument("Mat::apply: size mismatch");
    Vec r(rows_, Scalar(field_, 0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) r[i] += at(i, j) * v[j];
    return r;
}

Mat Mat::transpose() const {
    Mat r = zero(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Mat Mat::scaled(const Scalar& c) const {
    Mat r = *this;
    for (auto& x : r.data_) x = c * x;
    return r;
}

bool Mat::operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

std::vector<std::size_t> row_reduce(Mat& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && m.at(sel, col).is_zero()) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(row, j));
        Scalar inv = m.at(row, col).inverse();
        for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) = inv * m.at(row, j);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            Scalar f = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m.at(i, j) = m.at(i, j) - f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(Mat m) { return row_reduce(m).size(); }

Scalar determinant(Mat m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: square matrices only");
    Scalar det = one(m.field());
    std::size_t n = m.rows();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && m.at(sel, col).is_zero()) ++sel;
        if (sel == n) return zero(m.field());
        if (sel != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(sel, j), m.at(col, j));
            det = -det;
        }
        det = det * m.at(col, col);
        Scalar inv = m.at(col, col).inverse();
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m.at(i, col).is_zero()) continue;
            Scalar f = m.at(i, col) * inv;
            for (std::size_t j = col; j < n; ++j)
                m.at(i, j) = m.at(i, j) - f * m.at(col, j);
        }
    }
    return det;
}

std::optional<Mat> inverse(const Mat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: square matrices only");
    std::size_t n = m.rows();
    Mat aug = Mat::zero(n, 2 * n, m.field());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = one(m.field());
    }
    auto pivots = row_reduce(aug);
    if (pivots.size() != n || pivots.back() != n - 1) {
        // rank-deficient on the left block
        if (pivots.size() != n) return std::nullopt;
    }
    for (std::size_t i = 0; i < n; ++i)
        if (pivots[i] != i) return std::nullopt;
    Mat inv = Mat::zero(n, n, m.field());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

std::vector<Vec> kernel_basis(const Mat& m) {
    Mat r = m;
    auto pivots = row_reduce(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        Vec v(m.cols(), zero(m.field()));
        v[free_col] = one(m.field());
        for (std::size_t pr = 0; pr < pivots.size(); ++pr)
            v[pivots[pr]] = -r.at(pr, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> solve(const Mat& m, const Vec& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: size mismatch");
    Mat aug = Mat::zero(m.rows(), m.cols() + 1, m.field());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    auto pivots = row_reduce(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt; // 0 = 1 row
    Vec x(m.cols(), zero(m.field()));
    for (std::size_t pr = 0; pr < pivots.size(); ++pr)
        x[pivots[pr]] = aug.at(pr, m.cols());
    return x;
}

bool in_span(const std::vector<Vec>& basis, const Vec& v) {
    if (basis.empty()) return vec_is_zero(v);
    Mat m = Mat::zero(v.size(), basis.size(), v[0].field());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        if (basis[j].size() != v.size()) throw std::invalid_argument("in_span: size mismatch");
        for (std::size_t i = 0; i < v.size(); ++i) m.at(i, j) = basis[j][i];
    }
    return solve(m, v).has_value();
}

// ---------- Mat3 ----------

Mat3::Mat3(const FieldSpec& k) : a(9, Scalar(k, 0)) {}

Mat3 Mat3::identity(const FieldSpec& k) {
    Mat3 m(k);
    m.at(0, 0) = m.at(1, 1) = m.at(2, 2) = one(k);
    return m;
}

Mat3 Mat3::from_rows(const std::vector<Scalar>& rowmajor9) {
    if (rowmajor9.size() != 9) throw std::invalid_argument("Mat3::from_rows: need 9 entries");
    Mat3 m(rowmajor9[0].field());
    m.a = rowmajor9;
    return m;
}

Mat3 Mat3::diag(const Scalar& x, const Scalar& y, const Scalar& z) {
    Mat3 m(x.field());
    m.at(0, 0) = x;
    m.at(1, 1) = y;
    m.at(2, 2) = z;
    return m;
}

Mat3 Mat3::operator+(const Mat3& o) const {
    Mat3 r = *this;
    for (std::size_t i = 0; i < 9; ++i) r.a[i] = a[i] + o.a[i];
    return r;
}

Mat3 Mat3::operator-(const Mat3& o) const {
    Mat3 r = *this;
    for (std::size_t i = 0; i < 9; ++i) r.a[i] = a[i] - o.a[i];
    return r;
}

Mat3 Mat3::operator-() const {
    Mat3 r = *this;
    for (std::size_t i = 0; i < 9; ++i) r.a[i] = -a[i];
    return r;
}

Mat3 Mat3::operator*(const Mat3& o) const {
    Mat3 r(field());
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) {
            const Scalar& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < 3; ++j) r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

Mat3 Mat3::scaled(const Scalar& c) const {
    Mat3 r = *this;
    for (auto& x : r.a) x = c * x;
    return r;
}

Mat3 Mat3::transpose() const {
    Mat3 r(field());
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r.at(i, j) = at(j, i);
    return r;
}

bool Mat3::operator==(const Mat3& o) const { return a == o.a; }

Scalar Mat3::trace() const { return at(0, 0) + at(1, 1) + at(2, 2); }

Scalar Mat3::det() const {
    return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
           at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
           at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
}

Scalar Mat3::sr() const {
    Scalar t = trace();
    Scalar t2 = (*this * *this).trace();
    return (t * t - t2) / Scalar(field(), 2);
}

Mat3 Mat3::adjoint() const {
    Mat3 sq = *this * *this;
    Mat3 r = sq - scaled(trace());
    Scalar s = sr();
    for (int i = 0; i < 3; ++i) r.at(i, i) += s;
    return r;
}

Mat3 Mat3::inverse() const {
    Scalar d = det();
    if (d.is_zero()) throw std::domain_error("Mat3::inverse: singular matrix");
    return adjoint().scaled(d.inverse());
}

bool Mat3::is_zero() const {
    for (const auto& x : a)
        if (!x.is_zero()) return false;
    return true;
}

} // namespace albert
