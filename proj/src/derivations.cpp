#include "albert/derivations.hpp"

#include <cassert>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

namespace albert::der {

namespace {

constexpr std::size_t kDim = 27;
constexpr std::size_t kFlat = kDim * kDim;

// ---------- raw residue arithmetic (p < 2^32, so products fit in 64 bits) ----------

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1)
            r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) { return mod_pow(a, p - 2, p); }

// Row-echelon accumulator over F_p on raw uint64 rows.
struct ModEchelon {
    std::uint64_t p;
    std::size_t width;
    std::vector<std::vector<std::uint64_t>> rows; // normalized, leading 1
    std::vector<std::size_t> pivots;              // pivots[r] = pivot column of rows[r]

    std::size_t rank() const { return rows.size(); }

    // Reduce `row` against the accumulated rows; insert if independent.
    // Returns true when the rank grew.
    bool absorb(std::vector<std::uint64_t> row) {
        for (std::size_t r = 0; r < rows.size(); ++r) {
            std::uint64_t f = row[pivots[r]];
            if (f == 0)
                continue;
            const auto& pr = rows[r];
            std::uint64_t neg = p - f;
            for (std::size_t c = pivots[r]; c < width; ++c)
                if (pr[c])
                    row[c] = (row[c] + neg * pr[c]) % p;
        }
        std::size_t lead = width;
        for (std::size_t c = 0; c < width; ++c)
            if (row[c]) {
                lead = c;
                break;
            }
        if (lead == width)
            return false;
        std::uint64_t inv = mod_inv(row[lead], p);
        for (std::size_t c = lead; c < width; ++c)
            row[c] = row[c] * inv % p;
        // Keep rows sorted by pivot column for easy back substitution.
        std::size_t pos = 0;
        while (pos < pivots.size() && pivots[pos] < lead)
            ++pos;
        rows.insert(rows.begin() + static_cast<std::ptrdiff_t>(pos), std::move(row));
        pivots.insert(pivots.begin() + static_cast<std::ptrdiff_t>(pos), lead);
        return true;
    }

    // Kernel vectors of the accumulated row space (one per free column).
    std::vector<std::vector<std::uint64_t>> kernel() const {
        std::vector<bool> is_pivot(width, false);
        for (std::size_t c : pivots)
            is_pivot[c] = true;
        std::vector<std::vector<std::uint64_t>> out;
        for (std::size_t f = 0; f < width; ++f) {
            if (is_pivot[f])
                continue;
            std::vector<std::uint64_t> v(width, 0);
            v[f] = 1;
            for (std::size_t ri = rows.size(); ri-- > 0;) {
                const auto& row = rows[ri];
                std::uint64_t s = 0;
                for (std::size_t c = pivots[ri] + 1; c < width; ++c)
                    if (row[c] && v[c])
                        s = (s + row[c] * v[c]) % p;
                v[pivots[ri]] = (p - s) % p;
            }
            out.push_back(std::move(v));
        }
        return out;
    }
};

// ---------- mod-p shadows of exact data ----------

std::uint64_t reduce_mod(const Scalar& s, std::uint64_t p) {
    if (s.field().modular()) {
        assert(s.field().characteristic() == p);
        return s.residue();
    }
    const mpq_class& q = s.rational();
    mpz_class num = q.get_num() % static_cast<long>(p);
    if (num < 0)
        num += static_cast<long>(p);
    mpz_class den = q.get_den() % static_cast<long>(p);
    std::uint64_t d = den.get_ui();
    if (d == 0)
        throw std::domain_error("denominator not invertible modulo the shadow prime");
    return num.get_ui() * mod_inv(d, p) % p;
}

bool denominator_coprime(const Scalar& s, std::uint64_t p) {
    if (s.field().modular())
        return true;
    return mpz_class(s.rational().get_den() % static_cast<long>(p)) != 0;
}

std::uint64_t pick_shadow_prime(const MulTable& table) {
    for (std::uint64_t p : {101u, 103u, 107u, 109u, 113u, 127u, 131u, 137u, 139u, 149u}) {
        bool ok = true;
        for (const Vec& prod : table.products)
            for (const Scalar& s : prod)
                if (!denominator_coprime(s, p)) {
                    ok = false;
                    break;
                }
        if (ok)
            return p;
    }
    throw std::domain_error("no shadow prime avoids the table denominators");
}

std::vector<std::uint64_t> flatten_mod(const Mat& m, std::uint64_t p) {
    std::vector<std::uint64_t> out(kFlat);
    for (std::size_t r = 0; r < kDim; ++r)
        for (std::size_t c = 0; c < kDim; ++c)
            out[r * kDim + c] = reduce_mod(m.at(r, c), p);
    return out;
}

// Structure constants reduced mod p: t[(27*i+j)*27+m].
std::vector<std::uint64_t> table_mod(const MulTable& table, std::uint64_t p) {
    std::vector<std::uint64_t> t(kFlat * kDim);
    for (std::size_t i = 0; i < kDim; ++i)
        for (std::size_t j = 0; j < kDim; ++j)
            for (std::size_t m = 0; m < kDim; ++m)
                t[(kDim * i + j) * kDim + m] = reduce_mod(table.product(i, j)[m], p);
    return t;
}

// ---------- Leibniz system over F_p ----------

// Unknown layout: x[27a + b] = D[a][b]. Equation for pair (i, j) and output
// coordinate k:
//   sum_m T(i,j,m) D[k][m] - sum_a T(a,j,k) D[a][i] - sum_a T(i,a,k) D[a][j] = 0.
void append_pair_equations(ModEchelon& ech, const std::vector<std::uint64_t>& t, std::size_t i,
                           std::size_t j, bool& grew) {
    const std::uint64_t p = ech.p;
    for (std::size_t k = 0; k < kDim; ++k) {
        std::vector<std::uint64_t> row(kFlat, 0);
        for (std::size_t m = 0; m < kDim; ++m) {
            std::uint64_t c = t[(kDim * i + j) * kDim + m];
            if (c)
                row[kDim * k + m] = (row[kDim * k + m] + c) % p;
        }
        for (std::size_t a = 0; a < kDim; ++a) {
            std::uint64_t c1 = t[(kDim * a + j) * kDim + k];
            if (c1)
                row[kDim * a + i] = (row[kDim * a + i] + p - c1) % p;
            std::uint64_t c2 = t[(kDim * i + a) * kDim + k];
            if (c2)
                row[kDim * a + j] = (row[kDim * a + j] + p - c2) % p;
        }
        if (ech.absorb(std::move(row)))
            grew = true;
    }
}

Mat unflatten(const FieldSpec& k, const std::vector<Scalar>& flat) {
    Mat m(kDim, kDim, zero(k));
    for (std::size_t r = 0; r < kDim; ++r)
        for (std::size_t c = 0; c < kDim; ++c)
            m.at(r, c) = flat[r * kDim + c];
    return m;
}

bool is_derivation(const MulTable& table, const Mat& d) {
    for (std::size_t i = 0; i < kDim; ++i)
        for (std::size_t j = i; j < kDim; ++j)
            if (!vec_is_zero(table.leibniz_residual(d, i, j)))
                return false;
    return true;
}

// Exact derivation space over a modular field: eliminate Leibniz equations
// pair by pair with an early stop once the rank stalls, then certify the
// extracted kernel exactly (a kernel of a subsystem always contains the true
// solution space, so verified membership proves equality).
std::vector<Mat> solve_modular(const MulTable& table) {
    const FieldSpec& k = table.field;
    const std::uint64_t p = k.characteristic();
    std::vector<std::uint64_t> t = table_mod(table, p);

    std::vector<std::pair<std::size_t, std::size_t>> queue;
    for (std::size_t i = 0; i < kDim; ++i)
        for (std::size_t j = i; j < kDim; ++j)
            queue.emplace_back(i, j);

    ModEchelon ech{p, kFlat, {}, {}};
    std::size_t next = 0;
    auto process = [&](std::size_t count) {
        std::size_t stall = 0;
        while (next < queue.size() && stall < count) {
            bool grew = false;
            append_pair_equations(ech, t, queue[next].first, queue[next].second, grew);
            ++next;
            stall = grew ? 0 : stall + 1;
        }
    };
    process(12);

    while (true) {
        std::vector<Mat> basis;
        bool all_good = true;
        for (const auto& kvec : ech.kernel()) {
            std::vector<Scalar> flat;
            flat.reserve(kFlat);
            for (std::uint64_t x : kvec)
                flat.push_back(Scalar(k, static_cast<long>(x)));
            Mat d = unflatten(k, flat);
            if (!is_derivation(table, d)) {
                all_good = false;
                break;
            }
            basis.push_back(std::move(d));
        }
        if (all_good)
            return basis;
        if (next >= queue.size())
            throw std::logic_error("full Leibniz kernel failed verification");
        process(20);
    }
}

// Exact derivation space over a rational-backed field: the commutators
// [L_x, L_y] are derivations of any Jordan algebra; a mod-p shadow selects an
// independent family and bounds the dimension from above, and each survivor
// is verified exactly.
std::vector<Mat> solve_rational(const MulTable& table) {
    const FieldSpec& k = table.field;
    const std::uint64_t p = pick_shadow_prime(table);

    // Upper bound: the Leibniz system reduced mod p. Independence mod p of
    // integer-cleared vectors implies exact independence, and the exact
    // kernel reduces into the mod-p kernel, so dim_exact <= bound.
    MulTable shadow{FieldSpec::finite(static_cast<std::uint32_t>(p)), {}};
    shadow.products.reserve(kFlat);
    for (const Vec& prod : table.products) {
        Vec v;
        v.reserve(kDim);
        for (const Scalar& s : prod)
            v.push_back(Scalar(shadow.field, static_cast<long>(reduce_mod(s, p))));
        shadow.products.push_back(std::move(v));
    }
    const std::size_t bound = solve_modular(shadow).size();

    std::vector<Mat> lefts;
    lefts.reserve(kDim);
    for (std::size_t i = 0; i < kDim; ++i)
        lefts.push_back(table.left_mul_matrix(i));

    ModEchelon ech{p, kFlat, {}, {}};
    std::vector<Mat> basis;
    for (std::size_t i = 0; i < kDim && basis.size() < bound; ++i)
        for (std::size_t j = i + 1; j < kDim && basis.size() < bound; ++j) {
            Mat comm = lefts[i] * lefts[j] - lefts[j] * lefts[i];
            if (!ech.absorb(flatten_mod(comm, p)))
                continue;
            if (!is_derivation(table, comm))
                throw std::logic_error("commutator of multiplications failed Leibniz");
            basis.push_back(std::move(comm));
        }
    if (basis.size() < bound)
        throw std::logic_error("inner derivations did not reach the dimension bound");
    return basis;
}

DerivationSpace build_space(MulTable table) {
    const FieldSpec k = table.field;
    if (k.characteristic() == 2 || k.characteristic() == 3)
        throw std::domain_error("derivations are not supported in characteristic 2 or 3");

    std::vector<Mat> raw = k.modular() ? solve_modular(table) : solve_rational(table);

    // Echelonize the flattened basis and keep the echelonized matrices as the
    // published basis, so express() is a plain pivot read-off.
    Mat flats(raw.size(), kFlat, zero(k));
    for (std::size_t r = 0; r < raw.size(); ++r)
        for (std::size_t a = 0; a < kDim; ++a)
            for (std::size_t b = 0; b < kDim; ++b)
                flats.at(r, a * kDim + b) = raw[r].at(a, b);
    std::vector<std::size_t> pivots = row_reduce(flats);
    if (pivots.size() != raw.size())
        throw std::logic_error("derivation basis is linearly dependent");

    DerivationSpace space{k, std::move(table), {}, {}, std::move(pivots)};
    space.basis.reserve(space.pivots.size());
    space.echelon.reserve(space.pivots.size());
    for (std::size_t r = 0; r < space.pivots.size(); ++r) {
        Vec row;
        row.reserve(kFlat);
        for (std::size_t c = 0; c < kFlat; ++c)
            row.push_back(flats.at(r, c));
        space.basis.push_back(unflatten(k, row));
        space.echelon.push_back(std::move(row));
    }
    return space;
}

// ---------- cache ----------

std::mutex cache_mutex;
std::map<std::string, DerivationSpace>& cache() {
    static std::map<std::string, DerivationSpace> c;
    return c;
}

const DerivationSpace& cached(const std::string& key, const std::function<MulTable()>& make) {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache().find(key);
    if (it == cache().end())
        it = cache().emplace(key, build_space(make())).first;
    return it->second;
}

} // namespace

// ---------- MulTable ----------

MulTable MulTable::from(const tits::Algebra& alg) {
    MulTable t{alg.field, {}};
    t.products.reserve(kFlat);
    std::vector<tits::Element> basis;
    basis.reserve(kDim);
    for (std::size_t i = 0; i < kDim; ++i)
        basis.push_back(tits::Element::basis(alg, i));
    for (std::size_t i = 0; i < kDim; ++i)
        for (std::size_t j = 0; j < kDim; ++j)
            t.products.push_back(tits::tits_mul(basis[i], basis[j]).coords());
    return t;
}

MulTable MulTable::from(const herm::Algebra& alg) {
    MulTable t{alg.field(), {}};
    t.products.reserve(kFlat);
    std::vector<herm::Element> basis;
    basis.reserve(kDim);
    for (std::size_t i = 0; i < kDim; ++i)
        basis.push_back(herm::Element::basis(alg, i));
    for (std::size_t i = 0; i < kDim; ++i)
        for (std::size_t j = 0; j < kDim; ++j)
            t.products.push_back(herm::jordan_mul(basis[i], basis[j]).coords());
    return t;
}

Vec MulTable::mul(const Vec& x, const Vec& y) const {
    Vec out(kDim, zero(field));
    for (std::size_t i = 0; i < kDim; ++i) {
        if (x[i].is_zero())
            continue;
        for (std::size_t j = 0; j < kDim; ++j) {
            if (y[j].is_zero())
                continue;
            Scalar c = x[i] * y[j];
            const Vec& prod = product(i, j);
            for (std::size_t m = 0; m < kDim; ++m)
                if (!prod[m].is_zero())
                    out[m] += c * prod[m];
        }
    }
    return out;
}

Mat MulTable::left_mul_matrix(std::size_t i) const {
    Mat m(kDim, kDim, zero(field));
    for (std::size_t j = 0; j < kDim; ++j) {
        const Vec& prod = product(i, j);
        for (std::size_t r = 0; r < kDim; ++r)
            m.at(r, j) = prod[r];
    }
    return m;
}

Vec MulTable::leibniz_residual(const Mat& d, std::size_t i, std::size_t j) const {
    Vec res = d.apply(product(i, j));
    for (std::size_t a = 0; a < kDim; ++a) {
        const Scalar& dai = d.at(a, i);
        if (!dai.is_zero()) {
            const Vec& prod = product(a, j);
            for (std::size_t m = 0; m < kDim; ++m)
                if (!prod[m].is_zero())
                    res[m] -= dai * prod[m];
        }
        const Scalar& daj = d.at(a, j);
        if (!daj.is_zero()) {
            const Vec& prod = product(i, a);
            for (std::size_t m = 0; m < kDim; ++m)
                if (!prod[m].is_zero())
                    res[m] -= daj * prod[m];
        }
    }
    return res;
}

// ---------- DerivationSpace ----------

std::optional<Vec> DerivationSpace::express(const Mat& m) const {
    Vec flat;
    flat.reserve(kFlat);
    for (std::size_t a = 0; a < kDim; ++a)
        for (std::size_t b = 0; b < kDim; ++b)
            flat.push_back(m.at(a, b));
    // The basis is the unflattening of the reduced echelon rows, so the
    // coordinate along row r is just the entry at its pivot column.
    Vec coeff(echelon.size(), zero(field));
    for (std::size_t r = 0; r < echelon.size(); ++r) {
        Scalar c = flat[pivots[r]];
        if (c.is_zero())
            continue;
        coeff[r] = c;
        for (std::size_t idx = 0; idx < kFlat; ++idx)
            if (!echelon[r][idx].is_zero())
                flat[idx] -= c * echelon[r][idx];
    }
    if (!vec_is_zero(flat))
        return std::nullopt;
    return coeff;
}

const DerivationSpace& derivations(const tits::Algebra& alg) {
    std::string key = "T|" + alg.field.to_string() + "|" + alg.nu.to_string();
    return cached(key, [&alg] { return MulTable::from(alg); });
}

const DerivationSpace& derivations(const herm::Algebra& alg) {
    std::string key = "H|" + alg.field().to_string() + "|" + alg.gamma.to_string();
    return cached(key, [&alg] { return MulTable::from(alg); });
}

// ---------- centralizers ----------

CentralizerSplit centralizer_split(const aut::AlgebraMap& phi) {
    if (!phi.after(phi).is_identity())
        throw aut::NotInvolutive("centralizer split needs an involutive map");
    const DerivationSpace& space =
        phi.presentation() == aut::Presentation::Tits
            ? derivations(std::get<tits::Algebra>(phi.algebra))
            : derivations(std::get<herm::Algebra>(phi.algebra));
    const FieldSpec& k = space.field;
    const std::size_t n = space.dimension();

    // Conjugation action on Der in the derivation basis: column i holds the
    // coordinates of phi D_i phi^{-1} (phi is an involution, so phi^{-1} = phi).
    Mat action(n, n, zero(k));
    for (std::size_t i = 0; i < n; ++i) {
        Mat conj = phi.matrix * space.basis[i] * phi.matrix;
        std::optional<Vec> coords = space.express(conj);
        if (!coords)
            throw std::domain_error("conjugation does not preserve the derivation algebra");
        for (std::size_t r = 0; r < n; ++r)
            action.at(r, i) = (*coords)[r];
    }
    Mat minus = action;
    Mat plus = action;
    for (std::size_t i = 0; i < n; ++i) {
        minus.at(i, i) -= one(k);
        plus.at(i, i) += one(k);
    }
    CentralizerSplit split{n - rank(minus), n - rank(plus)};
    if (split.fixed_dim + split.anti_dim != n)
        throw std::logic_error("conjugation action failed to diagonalize");
    return split;
}

std::size_t centralizer_dimension(const aut::InvolutionDescriptor& desc) {
    return centralizer_split(desc.realized).fixed_dim;
}

} // namespace albert::der
