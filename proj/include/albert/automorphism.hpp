#pragma once

// Automorphism machinery for the split Albert algebra in both presentations:
// the SL3 x SL3 action f_{uv} on the Tits presentation, the transpose
// automorphism theta, torus elements, the two kinds of involutions, exact
// automorphism verification, and fixed-subspace computation.

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include "albert/field.hpp"
#include "albert/hermitian.hpp"
#include "albert/linalg.hpp"
#include "albert/tits.hpp"

namespace albert::aut {

struct NotInvolutive : std::domain_error {
    using std::domain_error::domain_error;
};

enum class Presentation { Tits, Hermitian };

// A linear map on the 27-dimensional algebra, tagged with the algebra it
// acts on so it can be verified and composed.
struct AlgebraMap {
    std::variant<tits::Algebra, herm::Algebra> algebra;
    Mat matrix; // 27x27

    Presentation presentation() const {
        return std::holds_alternative<tits::Algebra>(algebra) ? Presentation::Tits
                                                              : Presentation::Hermitian;
    }
    const FieldSpec& field() const;
    Vec apply(const Vec& x) const { return matrix.apply(x); }
    // Composition: (*this) after inner.
    AlgebraMap after(const AlgebraMap& inner) const;
    bool is_identity() const;
    bool operator==(const AlgebraMap& o) const;

    static AlgebraMap identity(const tits::Algebra& alg);
    static AlgebraMap identity(const herm::Algebra& alg);
    // Unchecked wrapper (for feeding arbitrary maps to check_automorphism).
    static AlgebraMap from_matrix(const tits::Algebra& alg, Mat m);
    static AlgebraMap from_matrix(const herm::Algebra& alg, Mat m);

    // Multiply two elements given by coordinates, in this presentation.
    Vec mul_coords(const Vec& x, const Vec& y) const;
    Vec unit_coords() const;
};

// f_{uv}: (a0, a1, a2) -> (u a0 u^{-1}, u a1 v^{-1}, v a2 u^{-1}).
// Requires u, v invertible; an algebra automorphism iff det u = det v = 1.
AlgebraMap f_uv(const tits::Algebra& alg, const Mat3& u, const Mat3& v);

// theta: (a0, a1, a2) -> (a0^T, a2^T, a1^T); an order-2 automorphism.
AlgebraMap theta(const tits::Algebra& alg);

// (u, v) = (diag(u1, u1^{-1} u2, u2^{-1}), diag(v1, v1^{-1} v2, v2^{-1})).
struct TorusElement {
    Scalar u1, u2, v1, v2;
    TorusElement(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d);
    const FieldSpec& field() const { return u1.field(); }
    Mat3 u_matrix() const;
    Mat3 v_matrix() const;
    std::string to_string() const;
};
AlgebraMap f_torus(const tits::Algebra& alg, const TorusElement& t);

struct CheckResult {
    bool pass = false;
    std::string reason; // empty on pass
    std::optional<Vec> witness;        // coordinates of a violating element
    std::optional<Vec> witness_second; // second element for product violations
};

// Exact automorphism test. Tits presentation: basepoint, bijectivity, full
// coefficient comparison of the cubic form N compose phi against N, and
// sharp-compatibility on a quadratic-map-determining set. Hermitian
// presentation: basepoint, bijectivity, product preservation on all basis
// pairs. Failures carry a violating element when one exists over the field.
CheckResult check_automorphism(const AlgebraMap& phi);

struct InvolutionDescriptor {
    enum class Kind { TypeI, TypeII };
    Kind kind;
    std::optional<TorusElement> torus;        // set for TypeI
    std::optional<herm::Element> idempotent;  // set for TypeII
    AlgebraMap realized;
    std::size_t fixed_dimension;
};

// theta compose f_t; order 2 for every torus element.
InvolutionDescriptor type1_involution(const tits::Algebra& alg, const TorusElement& t);
// Identity on k w + k(e-w) + E0, negation on E1; requires w primitive.
InvolutionDescriptor type2_involution(const herm::Algebra& alg, const herm::Element& w);

struct FixedSubspace {
    std::size_t dimension;
    std::vector<Vec> basis; // echelonized
};
// Exact kernel of (phi - id); throws NotInvolutive unless phi^2 = id.
// Verifies that the fixed space is closed under the Jordan product.
FixedSubspace fixed_subspace(const AlgebraMap& phi);

} // namespace albert::aut
