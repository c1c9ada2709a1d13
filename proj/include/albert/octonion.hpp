#pragma once

// Split octonion algebra over the base field, with conjugation, norm,
// quaternion subalgebras and split-ness tests.
//
// Fixed basis (e, i, j, k, l, il, jl, kl): Cayley-Dickson doubling of the
// split quaternion algebra (zeta, eta) = (1, 1) with doubling parameter
// mu = 1, using the convention (a,b)(c,d) = (ac + mu * conj(d) b, da + b conj(c)).
// All structure constants are +-1 on basis elements; the norm form is
// diag(1, -1, -1, 1, -1, 1, 1, -1), which is isotropic (the algebra is split).

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>

#include "albert/field.hpp"
#include "albert/linalg.hpp"

namespace albert::oct {

// embed_quaternion could not realize the requested subalgebra (cannot happen
// for the implemented construction; kept as the documented failure mode).
struct NoEmbedding : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Algebra {
    FieldSpec field;

    explicit Algebra(const FieldSpec& k);

    // b_s * b_t = sign(s,t) * b_{index(s,t)}
    static int sign(int s, int t);
    static int index(int s, int t);
    // q(b_s) for the diagonal norm form.
    static int norm_sign(int s);
};

class Octonion {
public:
    Octonion(const Algebra& alg, Vec coords); // 8 coordinates in basis order
    static Octonion zero(const Algebra& alg);
    static Octonion unit(const Algebra& alg);              // e
    static Octonion basis(const Algebra& alg, int s);      // b_s
    static Octonion scalar(const Algebra& alg, const Scalar& c); // c * e

    const FieldSpec& field() const { return field_; }
    const Vec& coords() const { return c_; }
    const Scalar& operator[](int s) const { return c_[static_cast<std::size_t>(s)]; }

    Octonion operator+(const Octonion& o) const;
    Octonion operator-(const Octonion& o) const;
    Octonion operator-() const;
    Octonion scaled(const Scalar& x) const;
    bool operator==(const Octonion& o) const { return c_ == o.c_; }
    bool operator!=(const Octonion& o) const { return !(*this == o); }
    bool is_zero() const { return vec_is_zero(c_); }

private:
    FieldSpec field_;
    Vec c_;
};

Octonion oct_mul(const Octonion& x, const Octonion& y);
Octonion conjugate(const Octonion& x);
Scalar oct_norm(const Octonion& x);                      // q(x)
Scalar oct_bilinear(const Octonion& x, const Octonion& y); // q(x+y)-q(x)-q(y)
// Coefficient of e when x is a scalar multiple of e; throws otherwise.
Scalar scalar_part_strict(const Octonion& x);

// A quaternion subalgebra D = span(e, u, v, uv) with u^2 = zeta e,
// v^2 = eta e, uv = -vu, together with a distinguished complement element
// j in D-perp with q(j) != 0 (so C = D + Dj).
struct QuaternionSubalgebra {
    std::array<Octonion, 4> basis;            // e, u, v, uv
    Pfister2 pfister;                         // (zeta, eta): the norm form on D
    std::array<Octonion, 4> complement_basis; // spans D-perp; [0] is j
    Scalar q_j;                               // q(j)

    const Octonion& j() const { return complement_basis[0]; }
    const FieldSpec& field() const { return pfister.field(); }

    // Octonion with D-coordinates (x0, x1, x2, x3) -> x0 e + x1 u + x2 v + x3 uv.
    Octonion element(const std::array<Scalar, 4>& x) const;
    // Inverse of `element`; nullopt when x is not in D.
    std::optional<std::array<Scalar, 4>> express(const Octonion& x) const;
    bool contains(const Octonion& x) const { return express(x).has_value(); }
};

// Construct the subalgebra with the requested Pfister pair inside the split
// octonions. Deterministic: u in span(i,k), v in span(j,il), j from a fixed
// search over D-perp.
QuaternionSubalgebra embed_quaternion(const Algebra& alg, const Scalar& zeta, const Scalar& eta);

bool is_split_quaternion(const QuaternionSubalgebra& D);

// ---------- 3x3 matrices over the octonions ----------

struct OctMat3 {
    std::array<Octonion, 9> m;

    static OctMat3 zeros(const Algebra& alg);
    static OctMat3 identity(const Algebra& alg);
    Octonion& at(int r, int c) { return m[static_cast<std::size_t>(3 * r + c)]; }
    const Octonion& at(int r, int c) const { return m[static_cast<std::size_t>(3 * r + c)]; }

    OctMat3 operator+(const OctMat3& o) const;
    OctMat3 operator-(const OctMat3& o) const;
    OctMat3 operator*(const OctMat3& o) const; // entrywise octonion products
    OctMat3 scaled(const Scalar& c) const;
    OctMat3 transpose() const;      // no conjugation
    OctMat3 conj_entries() const;   // entrywise conjugation
    bool operator==(const OctMat3& o) const { return m == o.m; }
};

// iota_gamma(x) = gamma^{-1} conj(x)^T gamma (an algebra involution on
// matrices with entries in an associative subalgebra).
OctMat3 iota_gamma(const OctMat3& x, const GammaTriple& gamma);

} // namespace albert::oct
