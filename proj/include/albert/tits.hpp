#pragma once

// The first Tits construction J(Mat3(k), nu): triples (m0, m1, m2) of 3x3
// matrices with the twisted cubic norm N, the quadratic adjoint #, trace
// forms, and the Jordan product they generate (McCrimmon). The default
// nu = 1 gives the split Albert algebra with basepoint (id, 0, 0).

#include <array>
#include <stdexcept>

#include "albert/field.hpp"
#include "albert/linalg.hpp"

namespace albert::tits {

struct Algebra {
    FieldSpec field;
    Scalar nu;

    explicit Algebra(const FieldSpec& k);
    Algebra(const FieldSpec& k, const Scalar& nu_value);
};

class Element {
public:
    Element(const Algebra& alg, std::array<Mat3, 3> a);

    static Element zero(const Algebra& alg);
    static Element one(const Algebra& alg); // basepoint (id, 0, 0)
    // Coordinate basis: 9*t + 3*r + c -> E_{rc} in component t (row-major).
    static Element basis(const Algebra& alg, std::size_t i);
    static Element from_coords(const Algebra& alg, const Vec& coords);

    const Algebra& algebra() const { return alg_; }
    const Mat3& a(int t) const { return a_[static_cast<std::size_t>(t)]; } // t in 0..2
    Vec coords() const; // 27 coordinates

    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element operator-() const;
    Element scaled(const Scalar& x) const;
    bool operator==(const Element& o) const;
    bool operator!=(const Element& o) const { return !(*this == o); }
    bool is_zero() const;

private:
    Algebra alg_;
    std::array<Mat3, 3> a_;
};

// N(m) = n(m0) + nu n(m1) + nu^{-1} n(m2) - tr(m0 m1 m2).
Scalar tits_norm(const Element& m);
// m^# = (m0^# - m1 m2,  nu^{-1} m2^# - m0 m1,  nu m1^# - m2 m0).
Element tits_sharp(const Element& m);
// Directional derivative N(x; y), the coefficient of t in N(x + t y);
// computed characteristic-free as (N(x+y) - N(x-y) - 2N(y)) / 2.
Scalar norm_directional(const Element& x, const Element& y);

Scalar tits_trace(const Element& m);                          // Tr(m) = tr(m0)
Scalar trace_bilinear(const Element& x, const Element& y);    // tr(x0 y0)+tr(x1 y2)+tr(x2 y1)
Scalar tits_sr(const Element& x);                             // Sr(x) = Tr(x^#)
Scalar sr_bilinear(const Element& x, const Element& y);       // Sr(x+y)-Sr(x)-Sr(y)
Element sharp_cross(const Element& x, const Element& y);      // x # y = (x+y)^# - x^# - y^#

// xy = 1/2 (x # y + Tr(x) y + Tr(y) x - Sr(x,y) 1).
Element tits_mul(const Element& x, const Element& y);
// U_x y = Tr(x,y) x - x^# # y.
Element u_operator(const Element& x, const Element& y);

// w = (E_11, 0, 0): the primitive idempotent witnessing reducedness.
Element tits_primitive_idempotent(const Algebra& alg);

// x^3 - Tr(x) x^2 + Sr(x) x - N(x) 1 == 0.
bool degree3_identity_holds(const Element& x);

// Matrix-level cubic-form identities for Mat3; evaluated on m together with
// a few companion matrices m' (the unit, m itself, and a fixed generic one).
struct AssociativeCubicReport {
    bool adjoint_product = false;   // m m^# = m^# m = n(m) id
    bool norm_trace_compat = false; // n(m; m') = tr(m^# m')
    bool trace_pairing = false;     // tr(m, m') = tr(m m')
    bool unit_values = false;       // tr(id) = sr(id) = 3
    bool unit_sharp = false;        // id^# = id
    bool unit_cross = false;        // id # m = tr(m) id - m
    bool sr_via_sharp = false;      // sr(m) = tr(m^#)
    bool sr_doubling = false;       // 2 sr(m) = tr(m)^2 - tr(m^2)
    bool product_sharp_reversal = false; // (m m')^# = m'^# m^#
    bool all() const {
        return adjoint_product && norm_trace_compat && trace_pairing && unit_values &&
               unit_sharp && unit_cross && sr_via_sharp && sr_doubling && product_sharp_reversal;
    }
};
AssociativeCubicReport associative_cubic_checks(const Mat3& m);

} // namespace albert::tits
