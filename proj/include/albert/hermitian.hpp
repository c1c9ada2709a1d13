#pragma once

// The Hermitian presentation H3(C, gamma) of the split Albert algebra:
// gamma-Hermitian 3x3 matrices over the split octonions C, with the Jordan
// product xy = 1/2 (x.y + y.x), the quadratic norm Q, idempotents and Peirce
// decomposition, and the decomposition H3(D,gamma) + Skew3(D,gamma) j for a
// quaternion subalgebra D with C = D + Dj.

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "albert/field.hpp"
#include "albert/linalg.hpp"
#include "albert/octonion.hpp"

namespace albert::herm {

struct NotPrimitive : std::domain_error {
    using std::domain_error::domain_error;
};
struct MixedAlgebras : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Algebra {
    oct::Algebra octonions;
    GammaTriple gamma;

    Algebra(const oct::Algebra& c, const GammaTriple& g);
    const FieldSpec& field() const { return octonions.field; }
    // Convenience: gamma = (1,1,1).
    static Algebra standard(const FieldSpec& k);
};

// x = h(f1,f2,f3; c1,c2,c3), the gamma-Hermitian matrix
//   [ f1                 c3                 g1^{-1} g3 conj(c2) ]
//   [ g2^{-1} g1 conj(c3) f2                 c1                 ]
//   [ c2                 g3^{-1} g2 conj(c1) f3                 ]
class Element {
public:
    Element(const Algebra& alg, std::array<Scalar, 3> f, std::array<oct::Octonion, 3> c);

    static Element zero(const Algebra& alg);
    static Element identity(const Algebra& alg); // e = h(1,1,1;0,0,0)
    static Element diag(const Algebra& alg, const Scalar& f1, const Scalar& f2, const Scalar& f3);
    // Coordinate basis: index 0..2 -> diagonal f_i, 3+8*(i-1)+s -> c_i = b_s.
    static Element basis(const Algebra& alg, std::size_t i);
    static Element from_coords(const Algebra& alg, const Vec& coords);

    const Algebra& algebra() const { return alg_; }
    const Scalar& f(int i) const { return f_[static_cast<std::size_t>(i - 1)]; }         // i in 1..3
    const oct::Octonion& c(int i) const { return c_[static_cast<std::size_t>(i - 1)]; } // i in 1..3

    Vec coords() const; // 27 coordinates (f1,f2,f3, c1, c2, c3)
    oct::OctMat3 matrix() const; // full gamma-Hermitian matrix

    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element operator-() const;
    Element scaled(const Scalar& x) const;
    bool operator==(const Element& o) const;
    bool operator!=(const Element& o) const { return !(*this == o); }
    bool is_zero() const;

private:
    Algebra alg_;
    std::array<Scalar, 3> f_;
    std::array<oct::Octonion, 3> c_;
};

// Compress a gamma-Hermitian matrix back to h-coordinates; throws
// std::domain_error when the matrix is not gamma-Hermitian with scalar
// diagonal (used as an internal consistency check after every product).
Element compress(const Algebra& alg, const oct::OctMat3& x);

Element jordan_mul(const Element& x, const Element& y); // 1/2 (x.y + y.x)
Scalar quadratic_norm(const Element& x);                // Q
Scalar bilinear_form(const Element& x, const Element& y); // <x,y> = Q(x+y)-Q(x)-Q(y)

// 27x27 Gram matrix of <.,.> on the coordinate basis (exactly nondegenerate).
Mat gram_matrix(const Algebra& alg);
// 27x27 matrix of left multiplication a -> xa.
Mat mul_operator_matrix(const Element& x);

bool is_idempotent(const Element& w);
bool is_primitive_idempotent(const Element& w);

// The seven assertions of the idempotent lemma for w^2 = w, w not in {0, e}.
struct IdempotentReport {
    bool q_is_half_or_one = false;
    bool pairing_with_e = false;      // <w,e> = 2 Q(w)
    bool complement_idempotent = false; // (e-w)^2 = e-w
    bool product_vanishes = false;    // w(e-w) = 0
    bool orthogonal_pair = false;     // <w, e-w> = 0
    bool complement_norm = false;     // Q(e-w) = 3/2 - Q(w)
    bool primitive_iff_half = false;  // is_primitive_idempotent(w) <=> Q(w) = 1/2
    bool all() const {
        return q_is_half_or_one && pairing_with_e && complement_idempotent && product_vanishes &&
               orthogonal_pair && complement_norm && primitive_iff_half;
    }
};
IdempotentReport idempotent_lemma_report(const Element& w);

struct PeirceDecomposition {
    Element w;         // primitive idempotent
    Element e_minus_w; // complementary idempotent
    std::vector<Vec> basis_e0; // {a in e-perp : wa = 0},   dim 9
    std::vector<Vec> basis_e1; // {a in e-perp : wa = a/2}, dim 16
};
// Throws NotPrimitive unless is_primitive_idempotent(w).
PeirceDecomposition peirce_decompose(const Element& w);

// Deterministic primitive idempotents: rank-one elements v conj(v)^T gamma
// with v over a quaternion subalgebra, normalized by the trace.
Element primitive_idempotent_from_vector(const Algebra& alg,
                                         const oct::QuaternionSubalgebra& D,
                                         const std::array<oct::Octonion, 3>& v);

// ---------- The decomposition H3(D,gamma) + Skew3(D,gamma) j ----------

// Y with entries in D and gamma^{-1} Y^T gamma = -Y (no conjugation).
struct SkewElement {
    oct::OctMat3 y;
    static SkewElement make(const oct::QuaternionSubalgebra& D, const GammaTriple& gamma,
                            const oct::OctMat3& y); // validates
    SkewElement operator+(const SkewElement& o) const { return SkewElement{y + o.y}; }
    SkewElement operator-(const SkewElement& o) const { return SkewElement{y - o.y}; }
    bool operator==(const SkewElement& o) const { return y == o.y; }
};

bool entries_in(const oct::OctMat3& x, const oct::QuaternionSubalgebra& D);
bool is_gamma_hermitian_over(const oct::OctMat3& x, const oct::QuaternionSubalgebra& D,
                             const GammaTriple& gamma);
bool is_gamma_skew_over(const oct::OctMat3& y, const oct::QuaternionSubalgebra& D,
                        const GammaTriple& gamma);

// Basis of H3(D,gamma) as ambient Elements (dim 15) and of Skew3(D,gamma)
// as SkewElements (dim 12).
std::vector<Element> hermitian_d_basis(const Algebra& alg, const oct::QuaternionSubalgebra& D);
std::vector<SkewElement> skew_basis(const Algebra& alg, const oct::QuaternionSubalgebra& D);

// X•V = 1/2 (V . conj(X) + (V^T . X^T)^T): realizes X (V j) = (X•V) j.
SkewElement bullet_product(const Element& x, const SkewElement& v,
                           const oct::QuaternionSubalgebra& D);
// Y*V = (q(j)/2) (gamma^{-1} (iota(V) Y + iota(Y) V)^T gamma):
// realizes (Y j)(V j) = Y*V.
Element star_product(const SkewElement& yy, const SkewElement& v, const Algebra& alg,
                     const oct::QuaternionSubalgebra& D);

// The ambient element X + Y j.
Element embed_decomposition(const Element& x, const SkewElement& yy,
                            const oct::QuaternionSubalgebra& D);
// Inverse of embed_decomposition: split a into (X, Y) along C = D + D j.
std::pair<Element, SkewElement> project_decomposition(const Element& a,
                                                      const oct::QuaternionSubalgebra& D);

} // namespace albert::herm
