#pragma once

// Exact dense linear algebra over a pluggable field Scalar: echelon form,
// rank, kernel, inverse, determinant, and the 3x3 matrices used by the first
// Tits construction. All computations are exact (fraction or residue
// arithmetic); no pivoting heuristics are needed beyond nonzero choice.

#include <cstddef>
#include <optional>
#include <vector>

#include "albert/field.hpp"

namespace albert {

using Vec = std::vector<Scalar>;

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Scalar& c, const Vec& a);
bool vec_is_zero(const Vec& a);

class Mat {
public:
    Mat(std::size_t rows, std::size_t cols, const Scalar& fill);
    static Mat zero(std::size_t rows, std::size_t cols, const FieldSpec& k);
    static Mat identity(std::size_t n, const FieldSpec& k);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldSpec& field() const { return field_; }

    Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Vec apply(const Vec& v) const; // matrix * column vector
    Mat transpose() const;
    Mat scaled(const Scalar& c) const;
    bool operator==(const Mat& o) const;

private:
    std::size_t rows_, cols_;
    FieldSpec field_;
    std::vector<Scalar> data_;
};

// In-place reduced row echelon form; returns pivot column indices.
std::vector<std::size_t> row_reduce(Mat& m);
std::size_t rank(Mat m);
Scalar determinant(Mat m);
std::optional<Mat> inverse(const Mat& m);
// Basis of the right kernel {v : m v = 0}, one vector per column, echelonized.
std::vector<Vec> kernel_basis(const Mat& m);
// Solve m x = b; nullopt if inconsistent (least-structure: any solution).
std::optional<Vec> solve(const Mat& m, const Vec& b);

// Span utilities: rows of `basis` are vectors spanning a subspace.
bool in_span(const std::vector<Vec>& basis, const Vec& v);

// ---------- 3x3 matrices (associative layer of the Tits construction) ----------

struct Mat3 {
    // row-major entries
    std::vector<Scalar> a;

    explicit Mat3(const FieldSpec& k);
    static Mat3 zero(const FieldSpec& k) { return Mat3(k); }
    static Mat3 identity(const FieldSpec& k);
    static Mat3 from_rows(const std::vector<Scalar>& rowmajor9);
    static Mat3 diag(const Scalar& x, const Scalar& y, const Scalar& z);

    const FieldSpec& field() const { return a[0].field(); }
    Scalar& at(int r, int c) { return a[static_cast<std::size_t>(3 * r + c)]; }
    const Scalar& at(int r, int c) const { return a[static_cast<std::size_t>(3 * r + c)]; }

    Mat3 operator+(const Mat3& o) const;
    Mat3 operator-(const Mat3& o) const;
    Mat3 operator*(const Mat3& o) const;
    Mat3 operator-() const;
    Mat3 scaled(const Scalar& c) const;
    Mat3 transpose() const;
    bool operator==(const Mat3& o) const;

    Scalar trace() const;
    Scalar det() const;
    // Quadratic trace sr(m) = (tr(m)^2 - tr(m^2)) / 2.
    Scalar sr() const;
    // Adjoint m^# = m^2 - tr(m) m + sr(m) id, so that m m^# = det(m) id.
    Mat3 adjoint() const;
    // Inverse via adjoint; throws on singular input.
    Mat3 inverse() const;
    bool is_zero() const;
};

} // namespace albert
