#include "albert/octonion.hpp"

#include <cassert>

namespace albert::oct {

namespace {

// Split quaternion table for (zeta, eta) = (1, 1) on (e, i, j, k):
// i^2 = j^2 = e, k^2 = -e, ij = k = -ji, ik = j = -ki, kj = i = -jk.
constexpr int kQSign[4][4] = {
    {+1, +1, +1, +1},
    {+1, +1, +1, +1},
    {+1, -1, +1, -1},
    {+1, -1, +1, -1},
};
constexpr int kQIndex[4][4] = {
    {0, 1, 2, 3},
    {1, 0, 3, 2},
    {2, 3, 0, 1},
    {3, 2, 1, 0},
};
// conj(b_t) = kQConj[t] * b_t
constexpr int kQConj[4] = {+1, -1, -1, -1};

struct Tables {
    int sign[8][8];
    int index[8][8];
};

// Cayley-Dickson doubling with mu = 1:
//   (a, b)(c, d) = (ac + conj(d) b, da + b conj(c)).
Tables build_tables() {
    Tables t{};
    for (int s = 0; s < 4; ++s) {
        for (int u = 0; u < 4; ++u) {
            // (b_s, 0)(b_u, 0) = (b_s b_u, 0)
            t.sign[s][u] = kQSign[s][u];
            t.index[s][u] = kQIndex[s][u];
            // (b_s, 0)(0, b_u) = (0, b_u b_s)
            t.sign[s][u + 4] = kQSign[u][s];
            t.index[s][u + 4] = kQIndex[u][s] + 4;
            // (0, b_s)(b_u, 0) = (0, b_s conj(b_u))
            t.sign[s + 4][u] = kQConj[u] * kQSign[s][u];
            t.index[s + 4][u] = kQIndex[s][u] + 4;
            // (0, b_s)(0, b_u) = (conj(b_u) b_s, 0)
            t.sign[s + 4][u + 4] = kQConj[u] * kQSign[u][s];
            t.index[s + 4][u + 4] = kQIndex[u][s];
        }
    }
    return t;
}

const Tables& tables() {
    static const Tables t = build_tables();
    return t;
}

// q((a, b)) = q(a) - q(b) with quaternion norm diag(1, -1, -1, 1).
constexpr int kNormSign[8] = {1, -1, -1, 1, -1, 1, 1, -1};

} // namespace

Algebra::Algebra(const FieldSpec& k) : field(k) {
    if (field.characteristic() == 2)
        throw std::invalid_argument("octonion algebra requires characteristic != 2");
}

int Algebra::sign(int s, int t) { return tables().sign[s][t]; }
int Algebra::index(int s, int t) { return tables().index[s][t]; }
int Algebra::norm_sign(int s) { return kNormSign[s]; }

Octonion::Octonion(const Algebra& alg, Vec coords) : field_(alg.field), c_(std::move(coords)) {
    if (c_.size() != 8)
        throw std::invalid_argument("octonion needs 8 coordinates");
    for (const Scalar& x : c_)
        if (!(x.field() == field_))
            throw std::invalid_argument("octonion coordinate from wrong field");
}

Octonion Octonion::zero(const Algebra& alg) {
    return Octonion(alg, Vec(8, albert::zero(alg.field)));
}

Octonion Octonion::unit(const Algebra& alg) { return basis(alg, 0); }

Octonion Octonion::basis(const Algebra& alg, int s) {
    assert(s >= 0 && s < 8);
    Vec c(8, albert::zero(alg.field));
    c[static_cast<std::size_t>(s)] = one(alg.field);
    return Octonion(alg, std::move(c));
}

Octonion Octonion::scalar(const Algebra& alg, const Scalar& c) {
    Vec v(8, albert::zero(alg.field));
    v[0] = c;
    return Octonion(alg, std::move(v));
}

Octonion Octonion::operator+(const Octonion& o) const {
    Octonion r = *this;
    r.c_ = vec_add(c_, o.c_);
    return r;
}

Octonion Octonion::operator-(const Octonion& o) const {
    Octonion r = *this;
    r.c_ = vec_sub(c_, o.c_);
    return r;
}

Octonion Octonion::operator-() const { return scaled(-one(field_)); }

Octonion Octonion::scaled(const Scalar& x) const {
    Octonion r = *this;
    r.c_ = vec_scale(x, c_);
    return r;
}

Octonion oct_mul(const Octonion& x, const Octonion& y) {
    const FieldSpec& k = x.field();
    Vec out(8, zero(k));
    for (int s = 0; s < 8; ++s) {
        if (x[s].is_zero())
            continue;
        for (int t = 0; t < 8; ++t) {
            if (y[t].is_zero())
                continue;
            Scalar term = x[s] * y[t];
            if (Algebra::sign(s, t) < 0)
                term = -term;
            out[static_cast<std::size_t>(Algebra::index(s, t))] += term;
        }
    }
    Algebra alg(k);
    return Octonion(alg, std::move(out));
}

Octonion conjugate(const Octonion& x) {
    const FieldSpec& k = x.field();
    Vec out = x.coords();
    for (int s = 1; s < 8; ++s)
        out[static_cast<std::size_t>(s)] = -out[static_cast<std::size_t>(s)];
    Algebra alg(k);
    return Octonion(alg, std::move(out));
}

Scalar oct_norm(const Octonion& x) {
    Scalar q = zero(x.field());
    for (int s = 0; s < 8; ++s) {
        Scalar sq = x[s] * x[s];
        if (Algebra::norm_sign(s) < 0)
            q -= sq;
        else
            q += sq;
    }
    return q;
}

Scalar oct_bilinear(const Octonion& x, const Octonion& y) {
    Scalar b = zero(x.field());
    Scalar two(x.field(), 2);
    for (int s = 0; s < 8; ++s) {
        Scalar term = two * x[s] * y[s];
        if (Algebra::norm_sign(s) < 0)
            b -= term;
        else
            b += term;
    }
    return b;
}

Scalar scalar_part_strict(const Octonion& x) {
    for (int s = 1; s < 8; ++s)
        if (!x[s].is_zero())
            throw std::domain_error("octonion is not a scalar multiple of e");
    return x[0];
}

Octonion QuaternionSubalgebra::element(const std::array<Scalar, 4>& x) const {
    Octonion r = basis[0].scaled(x[0]);
    for (int m = 1; m < 4; ++m)
        r = r + basis[static_cast<std::size_t>(m)].scaled(x[static_cast<std::size_t>(m)]);
    return r;
}

std::optional<std::array<Scalar, 4>> QuaternionSubalgebra::express(const Octonion& x) const {
    const FieldSpec& k = field();
    Mat m(8, 4, zero(k));
    for (int col = 0; col < 4; ++col)
        for (int row = 0; row < 8; ++row)
            m.at(static_cast<std::size_t>(row), static_cast<std::size_t>(col)) =
                basis[static_cast<std::size_t>(col)][row];
    auto sol = solve(m, x.coords());
    if (!sol)
        return std::nullopt;
    return std::array<Scalar, 4>{(*sol)[0], (*sol)[1], (*sol)[2], (*sol)[3]};
}

QuaternionSubalgebra embed_quaternion(const Algebra& alg, const Scalar& zeta, const Scalar& eta) {
    const FieldSpec& k = alg.field;
    if (zeta.is_zero() || eta.is_zero())
        throw std::invalid_argument("embed_quaternion needs nonzero parameters");
    const Scalar half = Scalar(k, 2).inverse();

    // u = ((zeta+1)/2) i + ((zeta-1)/2) k  satisfies u^2 = zeta e.
    Octonion u = Octonion::basis(alg, 1).scaled((zeta + one(k)) * half) +
                 Octonion::basis(alg, 3).scaled((zeta - one(k)) * half);
    // v = ((eta+1)/2) j + ((eta-1)/2) (il)  satisfies v^2 = eta e, uv = -vu.
    Octonion v = Octonion::basis(alg, 2).scaled((eta + one(k)) * half) +
                 Octonion::basis(alg, 5).scaled((eta - one(k)) * half);
    Octonion uv = oct_mul(u, v);

    QuaternionSubalgebra D{
        {Octonion::unit(alg), u, v, uv},
        Pfister2(zeta, eta),
        {Octonion::zero(alg), Octonion::zero(alg), Octonion::zero(alg), Octonion::zero(alg)},
        zero(k)};

    // Sanity: the defining relations.
    if (oct_mul(u, u) != Octonion::scalar(alg, zeta) ||
        oct_mul(v, v) != Octonion::scalar(alg, eta) || oct_mul(u, v) != -oct_mul(v, u))
        throw NoEmbedding("quaternion relations failed");
    for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n)
            if (!D.contains(oct_mul(D.basis[static_cast<std::size_t>(m)],
                                    D.basis[static_cast<std::size_t>(n)])))
                throw NoEmbedding("quaternion span is not closed under multiplication");

    // Orthogonal complement of D for the bilinear form of q.
    Mat gram_rows(4, 8, zero(k));
    for (int m = 0; m < 4; ++m)
        for (int s = 0; s < 8; ++s) {
            Scalar entry = Scalar(k, 2 * Algebra::norm_sign(s)) *
                           D.basis[static_cast<std::size_t>(m)][s];
            gram_rows.at(static_cast<std::size_t>(m), static_cast<std::size_t>(s)) = entry;
        }
    std::vector<Vec> perp = kernel_basis(gram_rows);
    if (perp.size() != 4)
        throw NoEmbedding("complement of quaternion subalgebra has wrong dimension");

    // Pick j in D-perp with q(j) != 0: some basis vector or pairwise sum works
    // because the form stays nondegenerate on D-perp.
    auto as_oct = [&](const Vec& w) { return Octonion(alg, w); };
    std::optional<Octonion> j;
    int replace = -1;
    for (int m = 0; m < 4 && !j; ++m)
        if (!oct_norm(as_oct(perp[static_cast<std::size_t>(m)])).is_zero()) {
            j = as_oct(perp[static_cast<std::size_t>(m)]);
            replace = m;
        }
    for (int m = 0; m < 4 && !j; ++m)
        for (int n = m + 1; n < 4 && !j; ++n) {
            Octonion cand = as_oct(perp[static_cast<std::size_t>(m)]) +
                            as_oct(perp[static_cast<std::size_t>(n)]);
            if (!oct_norm(cand).is_zero()) {
                j = cand;
                replace = m;
            }
        }
    if (!j)
        throw NoEmbedding("no anisotropic vector in the complement");

    D.complement_basis[0] = *j;
    std::size_t pos = 1;
    for (int m = 0; m < 4; ++m)
        if (m != replace)
            D.complement_basis[pos++] = as_oct(perp[static_cast<std::size_t>(m)]);
    D.q_j = oct_norm(*j);
    return D;
}

bool is_split_quaternion(const QuaternionSubalgebra& D) { return pfister_is_split(D.pfister); }

OctMat3 OctMat3::zeros(const Algebra& alg) {
    Octonion z = Octonion::zero(alg);
    return OctMat3{{z, z, z, z, z, z, z, z, z}};
}

OctMat3 OctMat3::identity(const Algebra& alg) {
    OctMat3 r = zeros(alg);
    for (int d = 0; d < 3; ++d)
        r.at(d, d) = Octonion::unit(alg);
    return r;
}

OctMat3 OctMat3::operator+(const OctMat3& o) const {
    OctMat3 r = *this;
    for (std::size_t s = 0; s < 9; ++s)
        r.m[s] = m[s] + o.m[s];
    return r;
}

OctMat3 OctMat3::operator-(const OctMat3& o) const {
    OctMat3 r = *this;
    for (std::size_t s = 0; s < 9; ++s)
        r.m[s] = m[s] - o.m[s];
    return r;
}

OctMat3 OctMat3::operator*(const OctMat3& o) const {
    Algebra alg(m[0].field());
    OctMat3 r = zeros(alg);
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) {
            if (at(i, k).is_zero())
                continue;
            for (int jj = 0; jj < 3; ++jj)
                r.at(i, jj) = r.at(i, jj) + oct_mul(at(i, k), o.at(k, jj));
        }
    return r;
}

OctMat3 OctMat3::scaled(const Scalar& c) const {
    OctMat3 r = *this;
    for (auto& x : r.m)
        x = x.scaled(c);
    return r;
}

OctMat3 OctMat3::transpose() const {
    OctMat3 r = *this;
    for (int i = 0; i < 3; ++i)
        for (int jj = 0; jj < 3; ++jj)
            r.at(i, jj) = at(jj, i);
    return r;
}

OctMat3 OctMat3::conj_entries() const {
    OctMat3 r = *this;
    for (auto& x : r.m)
        x = conjugate(x);
    return r;
}

OctMat3 iota_gamma(const OctMat3& x, const GammaTriple& gamma) {
    const Scalar g[3] = {gamma.g1, gamma.g2, gamma.g3};
    OctMat3 r = x;
    for (int rI = 0; rI < 3; ++rI)
        for (int c = 0; c < 3; ++c)
            r.at(rI, c) = conjugate(x.at(c, rI)).scaled(g[rI].inverse() * g[c]);
    return r;
}

} // namespace albert::oct
