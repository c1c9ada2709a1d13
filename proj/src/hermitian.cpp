#include "albert/hermitian.hpp"

#include <cassert>

namespace albert::herm {

using oct::conjugate;
using oct::Octonion;
using oct::oct_mul;
using oct::OctMat3;

namespace {

bool same_algebra(const Algebra& a, const Algebra& b) {
    return a.field() == b.field() && a.gamma.g1 == b.gamma.g1 && a.gamma.g2 == b.gamma.g2 &&
           a.gamma.g3 == b.gamma.g3;
}

// gamma^{-1} x^T gamma without conjugation of the entries.
OctMat3 gamma_twisted_transpose(const OctMat3& x, const GammaTriple& gamma) {
    const Scalar g[3] = {gamma.g1, gamma.g2, gamma.g3};
    OctMat3 r = x;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            r.at(a, b) = x.at(b, a).scaled(g[a].inverse() * g[b]);
    return r;
}

} // namespace

Algebra::Algebra(const oct::Algebra& c, const GammaTriple& g) : octonions(c), gamma(g) {
    if (!(g.field() == c.field))
        throw MixedAlgebras("gamma entries not over the octonion base field");
}

Algebra Algebra::standard(const FieldSpec& k) {
    return Algebra(oct::Algebra(k), GammaTriple(one(k), one(k), one(k)));
}

Element::Element(const Algebra& alg, std::array<Scalar, 3> f, std::array<Octonion, 3> c)
    : alg_(alg), f_(std::move(f)), c_(std::move(c)) {
    for (const Scalar& x : f_)
        if (!(x.field() == alg_.field()))
            throw MixedAlgebras("diagonal scalar from wrong field");
    for (const Octonion& x : c_)
        if (!(x.field() == alg_.field()))
            throw MixedAlgebras("octonion entry from wrong field");
}

Element Element::zero(const Algebra& alg) {
    const Scalar z = albert::zero(alg.field());
    const Octonion zo = Octonion::zero(alg.octonions);
    return Element(alg, {z, z, z}, {zo, zo, zo});
}

Element Element::identity(const Algebra& alg) {
    const Scalar o = one(alg.field());
    return diag(alg, o, o, o);
}

Element Element::diag(const Algebra& alg, const Scalar& f1, const Scalar& f2, const Scalar& f3) {
    const Octonion zo = Octonion::zero(alg.octonions);
    return Element(alg, {f1, f2, f3}, {zo, zo, zo});
}

Element Element::basis(const Algebra& alg, std::size_t i) {
    assert(i < 27);
    Vec coords(27, albert::zero(alg.field()));
    coords[i] = one(alg.field());
    return from_coords(alg, coords);
}

Element Element::from_coords(const Algebra& alg, const Vec& coords) {
    if (coords.size() != 27)
        throw std::invalid_argument("hermitian element needs 27 coordinates");
    std::array<Scalar, 3> f{coords[0], coords[1], coords[2]};
    std::array<Octonion, 3> c{Octonion::zero(alg.octonions), Octonion::zero(alg.octonions),
                              Octonion::zero(alg.octonions)};
    for (std::size_t i = 0; i < 3; ++i) {
        Vec oc(coords.begin() + 3 + static_cast<long>(8 * i),
               coords.begin() + 3 + static_cast<long>(8 * (i + 1)));
        c[i] = Octonion(alg.octonions, std::move(oc));
    }
    return Element(alg, std::move(f), std::move(c));
}

Vec Element::coords() const {
    Vec out;
    out.reserve(27);
    for (const Scalar& x : f_)
        out.push_back(x);
    for (const Octonion& o : c_)
        for (int s = 0; s < 8; ++s)
            out.push_back(o[s]);
    return out;
}

OctMat3 Element::matrix() const {
    const Scalar& g1 = alg_.gamma.g1;
    const Scalar& g2 = alg_.gamma.g2;
    const Scalar& g3 = alg_.gamma.g3;
    OctMat3 m = OctMat3::zeros(alg_.octonions);
    m.at(0, 0) = Octonion::scalar(alg_.octonions, f_[0]);
    m.at(1, 1) = Octonion::scalar(alg_.octonions, f_[1]);
    m.at(2, 2) = Octonion::scalar(alg_.octonions, f_[2]);
    m.at(1, 2) = c_[0];
    m.at(2, 1) = conjugate(c_[0]).scaled(g3.inverse() * g2);
    m.at(2, 0) = c_[1];
    m.at(0, 2) = conjugate(c_[1]).scaled(g1.inverse() * g3);
    m.at(0, 1) = c_[2];
    m.at(1, 0) = conjugate(c_[2]).scaled(g2.inverse() * g1);
    return m;
}

Element compress(const Algebra& alg, const OctMat3& x) {
    std::array<Scalar, 3> f{oct::scalar_part_strict(x.at(0, 0)),
                            oct::scalar_part_strict(x.at(1, 1)),
                            oct::scalar_part_strict(x.at(2, 2))};
    std::array<Octonion, 3> c{x.at(1, 2), x.at(2, 0), x.at(0, 1)};
    Element out(alg, std::move(f), std::move(c));
    if (!(out.matrix() == x))
        throw std::domain_error("matrix is not gamma-Hermitian");
    return out;
}

Element Element::operator+(const Element& o) const {
    if (!same_algebra(alg_, o.alg_))
        throw MixedAlgebras("cannot add elements of different Hermitian algebras");
    return Element(alg_, {f_[0] + o.f_[0], f_[1] + o.f_[1], f_[2] + o.f_[2]},
                   {c_[0] + o.c_[0], c_[1] + o.c_[1], c_[2] + o.c_[2]});
}

Element Element::operator-(const Element& o) const { return *this + (-o); }

Element Element::operator-() const { return scaled(-one(alg_.field())); }

Element Element::scaled(const Scalar& x) const {
    return Element(alg_, {f_[0] * x, f_[1] * x, f_[2] * x},
                   {c_[0].scaled(x), c_[1].scaled(x), c_[2].scaled(x)});
}

bool Element::operator==(const Element& o) const {
    return same_algebra(alg_, o.alg_) && f_ == o.f_ && c_ == o.c_;
}

bool Element::is_zero() const {
    return f_[0].is_zero() && f_[1].is_zero() && f_[2].is_zero() && c_[0].is_zero() &&
           c_[1].is_zero() && c_[2].is_zero();
}

Element jordan_mul(const Element& x, const Element& y) {
    if (!same_algebra(x.algebra(), y.algebra()))
        throw MixedAlgebras("cannot multiply elements of different Hermitian algebras");
    const Scalar half = Scalar(x.algebra().field(), 2).inverse();
    OctMat3 xm = x.matrix();
    OctMat3 ym = y.matrix();
    OctMat3 prod = (xm * ym + ym * xm).scaled(half);
    return compress(x.algebra(), prod);
}

Scalar quadratic_norm(const Element& x) {
    const GammaTriple& g = x.algebra().gamma;
    const Scalar half = Scalar(x.algebra().field(), 2).inverse();
    Scalar q = (x.f(1) * x.f(1) + x.f(2) * x.f(2) + x.f(3) * x.f(3)) * half;
    q += g.g3.inverse() * g.g2 * oct::oct_norm(x.c(1));
    q += g.g1.inverse() * g.g3 * oct::oct_norm(x.c(2));
    q += g.g2.inverse() * g.g1 * oct::oct_norm(x.c(3));
    return q;
}

Scalar bilinear_form(const Element& x, const Element& y) {
    return quadratic_norm(x + y) - quadratic_norm(x) - quadratic_norm(y);
}

Mat gram_matrix(const Algebra& alg) {
    Mat g(27, 27, zero(alg.field()));
    std::vector<Element> basis;
    basis.reserve(27);
    for (std::size_t i = 0; i < 27; ++i)
        basis.push_back(Element::basis(alg, i));
    for (std::size_t i = 0; i < 27; ++i)
        for (std::size_t j = i; j < 27; ++j) {
            Scalar v = bilinear_form(basis[i], basis[j]);
            g.at(i, j) = v;
            g.at(j, i) = v;
        }
    return g;
}

Mat mul_operator_matrix(const Element& x) {
    const Algebra& alg = x.algebra();
    Mat m(27, 27, zero(alg.field()));
    for (std::size_t j = 0; j < 27; ++j) {
        Vec col = jordan_mul(x, Element::basis(alg, j)).coords();
        for (std::size_t i = 0; i < 27; ++i)
            m.at(i, j) = col[i];
    }
    return m;
}

bool is_idempotent(const Element& w) { return jordan_mul(w, w) == w; }

bool is_primitive_idempotent(const Element& w) {
    if (!is_idempotent(w) || w.is_zero() || w == Element::identity(w.algebra()))
        return false;
    const Scalar half = Scalar(w.algebra().field(), 2).inverse();
    return quadratic_norm(w) == half;
}

IdempotentReport idempotent_lemma_report(const Element& w) {
    const Algebra& alg = w.algebra();
    const FieldSpec& k = alg.field();
    if (!is_idempotent(w) || w.is_zero() || w == Element::identity(alg))
        throw std::domain_error("idempotent lemma needs an idempotent distinct from 0 and e");
    const Scalar half = Scalar(k, 2).inverse();
    const Scalar three_half = Scalar(k, 3) * half;
    Element e = Element::identity(alg);
    Element comp = e - w;
    Scalar q = quadratic_norm(w);

    IdempotentReport r;
    r.q_is_half_or_one = (q == half) || (q == one(k));
    r.pairing_with_e = bilinear_form(w, e) == Scalar(k, 2) * q;
    r.complement_idempotent = jordan_mul(comp, comp) == comp;
    r.product_vanishes = jordan_mul(w, comp).is_zero();
    r.orthogonal_pair = bilinear_form(w, comp).is_zero();
    r.complement_norm = quadratic_norm(comp) == three_half - q;
    r.primitive_iff_half = is_primitive_idempotent(w) == (q == half);
    return r;
}

PeirceDecomposition peirce_decompose(const Element& w) {
    if (!is_primitive_idempotent(w))
        throw NotPrimitive("peirce_decompose needs a primitive idempotent");
    const Algebra& alg = w.algebra();
    const FieldSpec& k = alg.field();
    Element e = Element::identity(alg);

    // Row of the functional <e, .>; stacked under the multiplication operator
    // so each kernel is computed inside e-perp.
    Vec e_row(27, zero(k));
    for (std::size_t j = 0; j < 27; ++j)
        e_row[j] = bilinear_form(e, Element::basis(alg, j));

    Mat lw = mul_operator_matrix(w);
    const Scalar half = Scalar(k, 2).inverse();

    auto stacked_kernel = [&](const Scalar& eigenvalue) {
        Mat m(28, 27, zero(k));
        for (std::size_t i = 0; i < 27; ++i)
            for (std::size_t j = 0; j < 27; ++j)
                m.at(i, j) = lw.at(i, j) - (i == j ? eigenvalue : zero(k));
        for (std::size_t j = 0; j < 27; ++j)
            m.at(27, j) = e_row[j];
        return kernel_basis(m);
    };

    PeirceDecomposition out{w, e - w, stacked_kernel(zero(k)), stacked_kernel(half)};

    // Direct-sum check: the four pieces span all 27 dimensions.
    Mat span(static_cast<std::size_t>(2 + out.basis_e0.size() + out.basis_e1.size()), 27, zero(k));
    std::size_t r = 0;
    auto put_row = [&](const Vec& v) {
        for (std::size_t j = 0; j < 27; ++j)
            span.at(r, j) = v[j];
        ++r;
    };
    put_row(out.w.coords());
    put_row(out.e_minus_w.coords());
    for (const Vec& v : out.basis_e0)
        put_row(v);
    for (const Vec& v : out.basis_e1)
        put_row(v);
    if (rank(span) != 2 + out.basis_e0.size() + out.basis_e1.size() || r != 27)
        throw std::domain_error("Peirce pieces do not form a direct sum decomposition");
    return out;
}

Element primitive_idempotent_from_vector(const Algebra& alg, const oct::QuaternionSubalgebra& D,
                                         const std::array<Octonion, 3>& v) {
    const Scalar g[3] = {alg.gamma.g1, alg.gamma.g2, alg.gamma.g3};
    for (const Octonion& x : v)
        if (!D.contains(x))
            throw std::invalid_argument("vector entries must lie in the quaternion subalgebra");
    OctMat3 x = OctMat3::zeros(alg.octonions);
    for (int r = 0; r < 3; ++r)
        for (int s = 0; s < 3; ++s)
            x.at(r, s) = oct_mul(v[static_cast<std::size_t>(r)],
                                 conjugate(v[static_cast<std::size_t>(s)]))
                             .scaled(g[s]);
    Element el = compress(alg, x);
    Scalar tr = el.f(1) + el.f(2) + el.f(3);
    if (tr.is_zero())
        throw std::invalid_argument("rank-one element has zero trace; pick another vector");
    Element w = el.scaled(tr.inverse());
    if (!is_primitive_idempotent(w))
        throw std::domain_error("normalized rank-one element failed the primitivity check");
    return w;
}

bool entries_in(const OctMat3& x, const oct::QuaternionSubalgebra& D) {
    for (const Octonion& e : x.m)
        if (!D.contains(e))
            return false;
    return true;
}

bool is_gamma_hermitian_over(const OctMat3& x, const oct::QuaternionSubalgebra& D,
                             const GammaTriple& gamma) {
    return entries_in(x, D) && oct::iota_gamma(x, gamma) == x;
}

bool is_gamma_skew_over(const OctMat3& y, const oct::QuaternionSubalgebra& D,
                        const GammaTriple& gamma) {
    const Scalar minus_one = -one(gamma.field());
    return entries_in(y, D) && gamma_twisted_transpose(y, gamma) == y.scaled(minus_one);
}

SkewElement SkewElement::make(const oct::QuaternionSubalgebra& D, const GammaTriple& gamma,
                              const OctMat3& y) {
    if (!is_gamma_skew_over(y, D, gamma))
        throw std::domain_error("matrix is not gamma-skew over the quaternion subalgebra");
    return SkewElement{y};
}

std::vector<Element> hermitian_d_basis(const Algebra& alg, const oct::QuaternionSubalgebra& D) {
    std::vector<Element> out;
    const Scalar o = one(alg.field());
    const Scalar z = zero(alg.field());
    out.push_back(Element::diag(alg, o, z, z));
    out.push_back(Element::diag(alg, z, o, z));
    out.push_back(Element::diag(alg, z, z, o));
    const Octonion zo = Octonion::zero(alg.octonions);
    for (int slot = 0; slot < 3; ++slot)
        for (int m = 0; m < 4; ++m) {
            std::array<Octonion, 3> c{zo, zo, zo};
            c[static_cast<std::size_t>(slot)] = D.basis[static_cast<std::size_t>(m)];
            out.push_back(Element(alg, {z, z, z}, c));
        }
    return out;
}

std::vector<SkewElement> skew_basis(const Algebra& alg, const oct::QuaternionSubalgebra& D) {
    const Scalar g[3] = {alg.gamma.g1, alg.gamma.g2, alg.gamma.g3};
    std::vector<SkewElement> out;
    constexpr int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    for (auto [r, s] : pairs)
        for (int m = 0; m < 4; ++m) {
            OctMat3 y = OctMat3::zeros(alg.octonions);
            const Octonion& d = D.basis[static_cast<std::size_t>(m)];
            y.at(r, s) = d;
            y.at(s, r) = d.scaled(-(g[r] * g[s].inverse()));
            out.push_back(SkewElement::make(D, alg.gamma, y));
        }
    return out;
}

SkewElement bullet_product(const Element& x, const SkewElement& v,
                           const oct::QuaternionSubalgebra& D) {
    const Algebra& alg = x.algebra();
    OctMat3 xm = x.matrix();
    if (!entries_in(xm, D))
        throw std::invalid_argument("bullet_product needs X with entries in D");
    const Scalar half = Scalar(alg.field(), 2).inverse();
    OctMat3 lhs = v.y * xm.conj_entries();
    OctMat3 rhs = (v.y.transpose() * xm.transpose()).transpose();
    return SkewElement::make(D, alg.gamma, (lhs + rhs).scaled(half));
}

Element star_product(const SkewElement& yy, const SkewElement& v, const Algebra& alg,
                     const oct::QuaternionSubalgebra& D) {
    const Scalar half = Scalar(alg.field(), 2).inverse();
    OctMat3 sum = oct::iota_gamma(v.y, alg.gamma) * yy.y + oct::iota_gamma(yy.y, alg.gamma) * v.y;
    OctMat3 res = gamma_twisted_transpose(sum, alg.gamma).scaled(D.q_j * half);
    if (!entries_in(res, D))
        throw std::domain_error("star product left the quaternion subalgebra");
    return compress(alg, res);
}

Element embed_decomposition(const Element& x, const SkewElement& yy,
                            const oct::QuaternionSubalgebra& D) {
    const Algebra& alg = x.algebra();
    OctMat3 total = x.matrix();
    for (int r = 0; r < 3; ++r)
        for (int s = 0; s < 3; ++s)
            total.at(r, s) = total.at(r, s) + oct_mul(yy.y.at(r, s), D.j());
    return compress(alg, total);
}

std::pair<Element, SkewElement> project_decomposition(const Element& a,
                                                      const oct::QuaternionSubalgebra& D) {
    const Algebra& alg = a.algebra();
    const FieldSpec& k = alg.field();
    // Columns: D basis, then (D basis) j — together a basis of C.
    Mat m(8, 8, zero(k));
    for (int col = 0; col < 4; ++col) {
        const Octonion& d = D.basis[static_cast<std::size_t>(col)];
        Octonion dj = oct_mul(d, D.j());
        for (int row = 0; row < 8; ++row) {
            m.at(static_cast<std::size_t>(row), static_cast<std::size_t>(col)) = d[row];
            m.at(static_cast<std::size_t>(row), static_cast<std::size_t>(col + 4)) = dj[row];
        }
    }
    const Octonion zo = Octonion::zero(alg.octonions);
    std::array<Octonion, 3> xc{zo, zo, zo};
    std::array<Octonion, 3> yc{zo, zo, zo};
    for (int i = 0; i < 3; ++i) {
        auto sol = solve(m, a.c(i + 1).coords());
        if (!sol)
            throw std::domain_error("entry does not split along D + D j");
        std::array<Scalar, 4> d_part{(*sol)[0], (*sol)[1], (*sol)[2], (*sol)[3]};
        std::array<Scalar, 4> j_part{(*sol)[4], (*sol)[5], (*sol)[6], (*sol)[7]};
        xc[static_cast<std::size_t>(i)] = D.element(d_part);
        yc[static_cast<std::size_t>(i)] = D.element(j_part);
    }
    Element x(alg, {a.f(1), a.f(2), a.f(3)}, xc);

    const Scalar g[3] = {alg.gamma.g1, alg.gamma.g2, alg.gamma.g3};
    OctMat3 y = OctMat3::zeros(alg.octonions);
    // c1 sits at (1,2), c2 at (2,0), c3 at (0,1); mirrors follow the skew rule.
    constexpr int pos[3][2] = {{1, 2}, {2, 0}, {0, 1}};
    for (int i = 0; i < 3; ++i) {
        int r = pos[i][0], s = pos[i][1];
        y.at(r, s) = yc[static_cast<std::size_t>(i)];
        y.at(s, r) = yc[static_cast<std::size_t>(i)].scaled(-(g[r] * g[s].inverse()));
    }
    SkewElement yy = SkewElement::make(D, alg.gamma, y);
    if (!(embed_decomposition(x, yy, D) == a))
        throw std::domain_error("decomposition round-trip failed");
    return {x, yy};
}

} // namespace albert::herm
