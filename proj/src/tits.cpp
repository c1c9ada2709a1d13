#include "albert/tits.hpp"

#include <cassert>

namespace albert::tits {

namespace {

bool same_algebra(const Algebra& a, const Algebra& b) {
    return a.field == b.field && a.nu == b.nu;
}

Scalar mat_norm_directional(const Mat3& x, const Mat3& y) {
    const Scalar half = Scalar(x.field(), 2).inverse();
    return ((x + y).det() - (x - y).det() - Scalar(x.field(), 2) * y.det()) * half;
}

} // namespace

Algebra::Algebra(const FieldSpec& k) : Algebra(k, Scalar(k, 1)) {}

Algebra::Algebra(const FieldSpec& k, const Scalar& nu_value) : field(k), nu(nu_value) {
    if (field.characteristic() == 2)
        throw std::invalid_argument("Tits construction requires characteristic != 2");
    if (!(nu.field() == k) || nu.is_zero())
        throw std::invalid_argument("nu must be a nonzero scalar of the base field");
}

Element::Element(const Algebra& alg, std::array<Mat3, 3> a) : alg_(alg), a_(std::move(a)) {
    for (const Mat3& m : a_)
        if (!(m.field() == alg_.field))
            throw std::invalid_argument("matrix component over wrong field");
}

Element Element::zero(const Algebra& alg) {
    Mat3 z = Mat3::zero(alg.field);
    return Element(alg, {z, z, z});
}

Element Element::one(const Algebra& alg) {
    Mat3 z = Mat3::zero(alg.field);
    return Element(alg, {Mat3::identity(alg.field), z, z});
}

Element Element::basis(const Algebra& alg, std::size_t i) {
    assert(i < 27);
    Vec coords(27, albert::zero(alg.field));
    coords[i] = Scalar(alg.field, 1);
    return from_coords(alg, coords);
}

Element Element::from_coords(const Algebra& alg, const Vec& coords) {
    if (coords.size() != 27)
        throw std::invalid_argument("Tits element needs 27 coordinates");
    std::array<Mat3, 3> a{Mat3::zero(alg.field), Mat3::zero(alg.field), Mat3::zero(alg.field)};
    for (std::size_t t = 0; t < 3; ++t)
        for (std::size_t s = 0; s < 9; ++s)
            a[t].a[s] = coords[9 * t + s];
    return Element(alg, std::move(a));
}

Vec Element::coords() const {
    Vec out;
    out.reserve(27);
    for (const Mat3& m : a_)
        for (const Scalar& x : m.a)
            out.push_back(x);
    return out;
}

Element Element::operator+(const Element& o) const {
    if (!same_algebra(alg_, o.alg_))
        throw std::invalid_argument("cannot add elements of different Tits algebras");
    return Element(alg_, {a_[0] + o.a_[0], a_[1] + o.a_[1], a_[2] + o.a_[2]});
}

Element Element::operator-(const Element& o) const { return *this + (-o); }

Element Element::operator-() const { return scaled(-Scalar(alg_.field, 1)); }

Element Element::scaled(const Scalar& x) const {
    return Element(alg_, {a_[0].scaled(x), a_[1].scaled(x), a_[2].scaled(x)});
}

bool Element::operator==(const Element& o) const {
    return same_algebra(alg_, o.alg_) && a_[0] == o.a_[0] && a_[1] == o.a_[1] && a_[2] == o.a_[2];
}

bool Element::is_zero() const { return a_[0].is_zero() && a_[1].is_zero() && a_[2].is_zero(); }

Scalar tits_norm(const Element& m) {
    const Scalar& nu = m.algebra().nu;
    return m.a(0).det() + nu * m.a(1).det() + nu.inverse() * m.a(2).det() -
           (m.a(0) * m.a(1) * m.a(2)).trace();
}

Element tits_sharp(const Element& m) {
    const Scalar& nu = m.algebra().nu;
    return Element(m.algebra(),
                   {m.a(0).adjoint() - m.a(1) * m.a(2),
                    (m.a(2).adjoint()).scaled(nu.inverse()) - m.a(0) * m.a(1),
                    (m.a(1).adjoint()).scaled(nu) - m.a(2) * m.a(0)});
}

Scalar norm_directional(const Element& x, const Element& y) {
    const FieldSpec& k = x.algebra().field;
    const Scalar half = Scalar(k, 2).inverse();
    return (tits_norm(x + y) - tits_norm(x - y) - Scalar(k, 2) * tits_norm(y)) * half;
}

Scalar tits_trace(const Element& m) { return m.a(0).trace(); }

Scalar trace_bilinear(const Element& x, const Element& y) {
    return (x.a(0) * y.a(0)).trace() + (x.a(1) * y.a(2)).trace() + (x.a(2) * y.a(1)).trace();
}

Scalar tits_sr(const Element& x) { return tits_trace(tits_sharp(x)); }

Scalar sr_bilinear(const Element& x, const Element& y) {
    return tits_sr(x + y) - tits_sr(x) - tits_sr(y);
}

Element sharp_cross(const Element& x, const Element& y) {
    return tits_sharp(x + y) - tits_sharp(x) - tits_sharp(y);
}

Element tits_mul(const Element& x, const Element& y) {
    if (!same_algebra(x.algebra(), y.algebra()))
        throw std::invalid_argument("cannot multiply elements of different Tits algebras");
    const FieldSpec& k = x.algebra().field;
    const Scalar half = Scalar(k, 2).inverse();
    Element sum = sharp_cross(x, y) + y.scaled(tits_trace(x)) + x.scaled(tits_trace(y)) -
                  Element::one(x.algebra()).scaled(sr_bilinear(x, y));
    return sum.scaled(half);
}

Element u_operator(const Element& x, const Element& y) {
    return x.scaled(trace_bilinear(x, y)) - sharp_cross(tits_sharp(x), y);
}

Element tits_primitive_idempotent(const Algebra& alg) {
    Mat3 e11 = Mat3::zero(alg.field);
    e11.at(0, 0) = Scalar(alg.field, 1);
    Mat3 z = Mat3::zero(alg.field);
    return Element(alg, {e11, z, z});
}

bool degree3_identity_holds(const Element& x) {
    Element x2 = tits_mul(x, x);
    Element x3 = tits_mul(x2, x);
    Element lhs = x3 - x2.scaled(tits_trace(x)) + x.scaled(tits_sr(x)) -
                  Element::one(x.algebra()).scaled(tits_norm(x));
    return lhs.is_zero();
}

AssociativeCubicReport associative_cubic_checks(const Mat3& m) {
    const FieldSpec& k = m.field();
    const Mat3 id = Mat3::identity(k);
    const Scalar three(k, 3);
    const Scalar two(k, 2);

    // Companion matrices for the two-variable identities.
    Mat3 generic = Mat3::zero(k);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            generic.at(r, c) = Scalar(k, 3 * r + c + (r == c ? 2 : 0));
    const std::array<Mat3, 3> companions{id, m, generic};

    auto cross = [](const Mat3& a, const Mat3& b) {
        return (a + b).adjoint() - a.adjoint() - b.adjoint();
    };

    AssociativeCubicReport r;
    Mat3 adj = m.adjoint();
    Mat3 n_id = id.scaled(m.det());
    r.adjoint_product = (m * adj == n_id) && (adj * m == n_id);
    r.unit_values = (id.trace() == three) && (id.adjoint().trace() == three);
    r.unit_sharp = id.adjoint() == id;
    r.unit_cross = cross(id, m) == id.scaled(m.trace()) - m;
    r.sr_via_sharp = m.sr() == adj.trace();
    r.sr_doubling = two * m.sr() == m.trace() * m.trace() - (m * m).trace();

    r.norm_trace_compat = true;
    r.trace_pairing = true;
    r.product_sharp_reversal = true;
    for (const Mat3& mp : companions) {
        r.norm_trace_compat = r.norm_trace_compat && mat_norm_directional(m, mp) == (adj * mp).trace();
        r.trace_pairing = r.trace_pairing && (m * mp).trace() == (mp * m).trace();
        r.product_sharp_reversal =
            r.product_sharp_reversal && (m * mp).adjoint() == mp.adjoint() * adj;
    }
    return r;
}

} // namespace albert::tits
