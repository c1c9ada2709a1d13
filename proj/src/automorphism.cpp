#include "albert/automorphism.hpp"

#include <algorithm>
#include <cassert>
#include <random>

namespace albert::aut {

namespace {

constexpr std::size_t kDim = 27;

std::size_t coord_index(int t, int r, int c) {
    return static_cast<std::size_t>(9 * t + 3 * r + c);
}

// One degree-3 monomial coeff * x_i x_j x_k of the cubic norm (i, j, k
// pairwise distinct by construction of N).
struct NormMonomial {
    Scalar coeff;
    std::size_t i, j, k;
};

// N(x) = det(x0) + nu det(x1) + nu^{-1} det(x2) - tr(x0 x1 x2):
// 3 * 6 determinant monomials plus 27 trace monomials.
std::vector<NormMonomial> norm_monomials(const tits::Algebra& alg) {
    const FieldSpec& k = alg.field;
    std::vector<NormMonomial> out;
    out.reserve(45);
    constexpr int perm[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
    const Scalar comp_coeff[3] = {one(k), alg.nu, alg.nu.inverse()};
    for (int t = 0; t < 3; ++t)
        for (int p = 0; p < 6; ++p) {
            Scalar c = comp_coeff[t];
            if (p >= 3)
                c = -c; // odd permutations
            out.push_back({c, coord_index(t, 0, perm[p][0]), coord_index(t, 1, perm[p][1]),
                           coord_index(t, 2, perm[p][2])});
        }
    for (int r = 0; r < 3; ++r)
        for (int s = 0; s < 3; ++s)
            for (int u = 0; u < 3; ++u)
                out.push_back({-one(k), coord_index(0, r, s), coord_index(1, s, u),
                               coord_index(2, u, r)});
    return out;
}

// Dense coefficient array of the cubic polynomial N(phi(x)) over canonical
// slots a <= b <= c (stored at a*729 + b*27 + c). phi == nullptr means N itself.
std::vector<Scalar> expand_norm(const tits::Algebra& alg, const Mat* phi) {
    const FieldSpec& k = alg.field;
    std::vector<Scalar> slots(kDim * kDim * kDim, zero(k));
    auto put = [&](std::size_t a, std::size_t b, std::size_t c, const Scalar& val) {
        std::size_t lo = std::min({a, b, c});
        std::size_t hi = std::max({a, b, c});
        std::size_t mid = a + b + c - lo - hi;
        slots[lo * 729 + mid * 27 + hi] += val;
    };
    for (const NormMonomial& m : norm_monomials(alg)) {
        if (!phi) {
            put(m.i, m.j, m.k, m.coeff);
            continue;
        }
        for (std::size_t a = 0; a < kDim; ++a) {
            const Scalar& mia = phi->at(m.i, a);
            if (mia.is_zero())
                continue;
            Scalar ca = m.coeff * mia;
            for (std::size_t b = 0; b < kDim; ++b) {
                const Scalar& mjb = phi->at(m.j, b);
                if (mjb.is_zero())
                    continue;
                Scalar cab = ca * mjb;
                for (std::size_t c = 0; c < kDim; ++c) {
                    const Scalar& mkc = phi->at(m.k, c);
                    if (mkc.is_zero())
                        continue;
                    put(a, b, c, cab * mkc);
                }
            }
        }
    }
    return slots;
}

Vec random_coords(std::mt19937_64& rng, const FieldSpec& k) {
    Vec v(kDim, zero(k));
    for (auto& x : v) {
        if (k.modular()) {
            x = Scalar(k, static_cast<long>(rng() % k.p));
        } else {
            x = Scalar(k, static_cast<long>(rng() % 9) - 4);
        }
    }
    return v;
}

// phi applied to x, as a Tits element.
tits::Element apply_tits(const AlgebraMap& phi, const tits::Element& x) {
    return tits::Element::from_coords(std::get<tits::Algebra>(phi.algebra),
                                      phi.apply(x.coords()));
}

// Search a vector with N(phi(x)) != N(x): structured candidates first, then
// seeded random draws (finds one whenever the difference is nonzero as a
// function on k^27).
std::optional<Vec> norm_witness(const AlgebraMap& phi) {
    const tits::Algebra& alg = std::get<tits::Algebra>(phi.algebra);
    auto violates = [&](const Vec& coords) {
        tits::Element x = tits::Element::from_coords(alg, coords);
        return tits::tits_norm(apply_tits(phi, x)) != tits::tits_norm(x);
    };
    for (std::size_t i = 0; i < kDim; ++i) {
        Vec v(kDim, zero(alg.field));
        v[i] = one(alg.field);
        if (violates(v))
            return v;
    }
    for (std::size_t i = 0; i < kDim; ++i)
        for (std::size_t j = i + 1; j < kDim; ++j) {
            Vec v(kDim, zero(alg.field));
            v[i] = v[j] = one(alg.field);
            if (violates(v))
                return v;
        }
    for (std::size_t i = 0; i < kDim; ++i)
        for (std::size_t j = i + 1; j < kDim; ++j)
            for (std::size_t l = j + 1; l < kDim; ++l) {
                Vec v(kDim, zero(alg.field));
                v[i] = v[j] = v[l] = one(alg.field);
                if (violates(v))
                    return v;
            }
    std::mt19937_64 rng(0x5eed0001ULL);
    for (int trial = 0; trial < 800; ++trial) {
        Vec v = random_coords(rng, alg.field);
        if (violates(v))
            return v;
    }
    return std::nullopt;
}

CheckResult check_tits(const AlgebraMap& phi) {
    const tits::Algebra& alg = std::get<tits::Algebra>(phi.algebra);
    CheckResult res;

    Vec unit = tits::Element::one(alg).coords();
    if (phi.apply(unit) != unit) {
        res.reason = "basepoint not fixed";
        res.witness = unit;
        return res;
    }
    {
        auto ker = kernel_basis(phi.matrix);
        if (!ker.empty()) {
            res.reason = "not bijective";
            res.witness = ker.front();
            return res;
        }
    }
    if (expand_norm(alg, &phi.matrix) != expand_norm(alg, nullptr)) {
        res.reason = "cubic norm not preserved";
        res.witness = norm_witness(phi);
        return res;
    }
    // Sharp compatibility on singles and pairwise sums: determines the
    // quadratic map # in characteristic != 2.
    auto sharp_ok = [&](const tits::Element& x) {
        return apply_tits(phi, tits::tits_sharp(x)) == tits::tits_sharp(apply_tits(phi, x));
    };
    for (std::size_t i = 0; i < kDim; ++i) {
        tits::Element bi = tits::Element::basis(alg, i);
        if (!sharp_ok(bi)) {
            res.reason = "adjoint not preserved";
            res.witness = bi.coords();
            return res;
        }
        for (std::size_t j = i + 1; j < kDim; ++j) {
            tits::Element x = bi + tits::Element::basis(alg, j);
            if (!sharp_ok(x)) {
                res.reason = "adjoint not preserved";
                res.witness = x.coords();
                return res;
            }
        }
    }
    res.pass = true;
    return res;
}

CheckResult check_hermitian(const AlgebraMap& phi) {
    const herm::Algebra& alg = std::get<herm::Algebra>(phi.algebra);
    CheckResult res;

    Vec unit = herm::Element::identity(alg).coords();
    if (phi.apply(unit) != unit) {
        res.reason = "basepoint not fixed";
        res.witness = unit;
        return res;
    }
    {
        auto ker = kernel_basis(phi.matrix);
        if (!ker.empty()) {
            res.reason = "not bijective";
            res.witness = ker.front();
            return res;
        }
    }
    std::vector<herm::Element> basis;
    std::vector<herm::Element> images;
    basis.reserve(kDim);
    images.reserve(kDim);
    for (std::size_t i = 0; i < kDim; ++i) {
        basis.push_back(herm::Element::basis(alg, i));
        images.push_back(herm::Element::from_coords(alg, phi.apply(basis.back().coords())));
    }
    for (std::size_t i = 0; i < kDim; ++i)
        for (std::size_t j = i; j < kDim; ++j) {
            Vec lhs = phi.apply(herm::jordan_mul(basis[i], basis[j]).coords());
            Vec rhs = herm::jordan_mul(images[i], images[j]).coords();
            if (lhs != rhs) {
                res.reason = "product not preserved";
                res.witness = basis[i].coords();
                res.witness_second = basis[j].coords();
                return res;
            }
        }
    res.pass = true;
    return res;
}

} // namespace

const FieldSpec& AlgebraMap::field() const {
    if (const auto* t = std::get_if<tits::Algebra>(&algebra))
        return t->field;
    return std::get<herm::Algebra>(algebra).field();
}

AlgebraMap AlgebraMap::after(const AlgebraMap& inner) const {
    if (presentation() != inner.presentation() || !(field() == inner.field()))
        throw std::invalid_argument("cannot compose maps over different presentations");
    return AlgebraMap{algebra, matrix * inner.matrix};
}

bool AlgebraMap::is_identity() const { return matrix == Mat::identity(kDim, field()); }

bool AlgebraMap::operator==(const AlgebraMap& o) const {
    return presentation() == o.presentation() && field() == o.field() && matrix == o.matrix;
}

AlgebraMap AlgebraMap::identity(const tits::Algebra& alg) {
    return AlgebraMap{alg, Mat::identity(kDim, alg.field)};
}

AlgebraMap AlgebraMap::identity(const herm::Algebra& alg) {
    return AlgebraMap{alg, Mat::identity(kDim, alg.field())};
}

AlgebraMap AlgebraMap::from_matrix(const tits::Algebra& alg, Mat m) {
    if (m.rows() != kDim || m.cols() != kDim)
        throw std::invalid_argument("algebra maps are 27x27");
    return AlgebraMap{alg, std::move(m)};
}

AlgebraMap AlgebraMap::from_matrix(const herm::Algebra& alg, Mat m) {
    if (m.rows() != kDim || m.cols() != kDim)
        throw std::invalid_argument("algebra maps are 27x27");
    return AlgebraMap{alg, std::move(m)};
}

Vec AlgebraMap::mul_coords(const Vec& x, const Vec& y) const {
    if (const auto* t = std::get_if<tits::Algebra>(&algebra))
        return tits::tits_mul(tits::Element::from_coords(*t, x), tits::Element::from_coords(*t, y))
            .coords();
    const herm::Algebra& h = std::get<herm::Algebra>(algebra);
    return herm::jordan_mul(herm::Element::from_coords(h, x), herm::Element::from_coords(h, y))
        .coords();
}

Vec AlgebraMap::unit_coords() const {
    if (const auto* t = std::get_if<tits::Algebra>(&algebra))
        return tits::Element::one(*t).coords();
    return herm::Element::identity(std::get<herm::Algebra>(algebra)).coords();
}

AlgebraMap f_uv(const tits::Algebra& alg, const Mat3& u, const Mat3& v) {
    if (u.det().is_zero() || v.det().is_zero())
        throw std::invalid_argument("f_uv needs invertible matrices");
    Mat3 ui = u.inverse();
    Mat3 vi = v.inverse();
    Mat m(kDim, kDim, zero(alg.field));
    for (int t = 0; t < 3; ++t)
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) {
                Mat3 e = Mat3::zero(alg.field);
                e.at(r, c) = one(alg.field);
                Mat3 image = (t == 0) ? u * e * ui : (t == 1) ? u * e * vi : v * e * ui;
                std::size_t col = coord_index(t, r, c);
                for (int rr = 0; rr < 3; ++rr)
                    for (int cc = 0; cc < 3; ++cc)
                        m.at(coord_index(t, rr, cc), col) = image.at(rr, cc);
            }
    return AlgebraMap{alg, std::move(m)};
}

AlgebraMap theta(const tits::Algebra& alg) {
    Mat m(kDim, kDim, zero(alg.field));
    constexpr int comp_image[3] = {0, 2, 1}; // a0 -> slot 0, a1 -> slot 2, a2 -> slot 1
    for (int t = 0; t < 3; ++t)
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c)
                m.at(coord_index(comp_image[t], c, r), coord_index(t, r, c)) = one(alg.field);
    return AlgebraMap{alg, std::move(m)};
}

TorusElement::TorusElement(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d)
    : u1(a), u2(b), v1(c), v2(d) {
    if (u1.is_zero() || u2.is_zero() || v1.is_zero() || v2.is_zero())
        throw std::invalid_argument("torus parameters must be units");
    if (!(u2.field() == u1.field()) || !(v1.field() == u1.field()) || !(v2.field() == u1.field()))
        throw std::invalid_argument("torus parameters from mixed fields");
}

Mat3 TorusElement::u_matrix() const { return Mat3::diag(u1, u1.inverse() * u2, u2.inverse()); }

Mat3 TorusElement::v_matrix() const { return Mat3::diag(v1, v1.inverse() * v2, v2.inverse()); }

std::string TorusElement::to_string() const {
    return "t(" + u1.to_string() + "," + u2.to_string() + "," + v1.to_string() + "," +
           v2.to_string() + ")";
}

AlgebraMap f_torus(const tits::Algebra& alg, const TorusElement& t) {
    return f_uv(alg, t.u_matrix(), t.v_matrix());
}

CheckResult check_automorphism(const AlgebraMap& phi) {
    if (phi.presentation() == Presentation::Tits)
        return check_tits(phi);
    return check_hermitian(phi);
}

InvolutionDescriptor type1_involution(const tits::Algebra& alg, const TorusElement& t) {
    if (!(t.field() == alg.field))
        throw std::invalid_argument("torus element over wrong field");
    AlgebraMap realized = theta(alg).after(f_torus(alg, t));
    if (!realized.after(realized).is_identity())
        throw NotInvolutive("theta compose f_t is not an involution"); // cannot happen
    FixedSubspace fix = fixed_subspace(realized);
    return InvolutionDescriptor{InvolutionDescriptor::Kind::TypeI, t, std::nullopt,
                                std::move(realized), fix.dimension};
}

InvolutionDescriptor type2_involution(const herm::Algebra& alg, const herm::Element& w) {
    herm::PeirceDecomposition p = herm::peirce_decompose(w); // throws NotPrimitive
    const FieldSpec& k = alg.field();
    Mat basis(kDim, kDim, zero(k));
    std::size_t col = 0;
    auto put_col = [&](const Vec& v) {
        for (std::size_t r = 0; r < kDim; ++r)
            basis.at(r, col) = v[r];
        ++col;
    };
    put_col(p.w.coords());
    put_col(p.e_minus_w.coords());
    for (const Vec& v : p.basis_e0)
        put_col(v);
    std::size_t plus_dim = col;
    for (const Vec& v : p.basis_e1)
        put_col(v);
    assert(col == kDim);

    auto inv = inverse(basis);
    if (!inv)
        throw std::domain_error("Peirce basis is singular");
    Mat diag = Mat::identity(kDim, k);
    for (std::size_t i = plus_dim; i < kDim; ++i)
        diag.at(i, i) = -one(k);
    AlgebraMap realized{alg, basis * diag * *inv};
    if (!realized.after(realized).is_identity())
        throw NotInvolutive("Peirce reflection is not an involution"); // cannot happen
    FixedSubspace fix = fixed_subspace(realized);
    return InvolutionDescriptor{InvolutionDescriptor::Kind::TypeII, std::nullopt, w,
                                std::move(realized), fix.dimension};
}

FixedSubspace fixed_subspace(const AlgebraMap& phi) {
    const FieldSpec& k = phi.field();
    if (!phi.after(phi).is_identity())
        throw NotInvolutive("fixed_subspace needs phi^2 = id");
    Mat shifted = phi.matrix;
    for (std::size_t i = 0; i < kDim; ++i)
        shifted.at(i, i) -= one(k);
    std::vector<Vec> basis = kernel_basis(shifted);

    // The fixed space of an algebra automorphism is a subalgebra; verify.
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i; j < basis.size(); ++j)
            if (!in_span(basis, phi.mul_coords(basis[i], basis[j])))
                throw std::domain_error("fixed subspace is not closed under the product");
    return FixedSubspace{basis.size(), std::move(basis)};
}

} // namespace albert::aut
