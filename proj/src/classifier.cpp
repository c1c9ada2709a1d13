#include "albert/classifier.hpp"

#include <algorithm>
#include <cassert>
#include <random>
#include <set>
#include <thread>

#include "albert/linalg.hpp"
#include "albert/tits.hpp"

namespace albert::cls {

namespace {

constexpr std::size_t kDim = 27;

// Kernel of (theta f_t - id) without the Jordan-closure pass; the closure
// property is covered by the automorphism module.
std::vector<Vec> fixed_basis_light(const aut::TorusElement& t) {
    tits::Algebra alg(t.field());
    aut::AlgebraMap m = aut::theta(alg).after(aut::f_torus(alg, t));
    Mat shifted = m.matrix;
    for (std::size_t i = 0; i < kDim; ++i)
        shifted.at(i, i) -= one(t.field());
    return kernel_basis(shifted);
}

// Diagonalize a symmetric matrix by congruence; returns the diagonal.
std::vector<Scalar> congruence_diagonal(Mat g) {
    const FieldSpec& k = g.field();
    const std::size_t n = g.rows();
    std::vector<Scalar> diag;
    diag.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (g.at(i, i).is_zero()) {
            std::size_t swap_with = n;
            for (std::size_t j = i + 1; j < n; ++j)
                if (!g.at(j, j).is_zero()) {
                    swap_with = j;
                    break;
                }
            if (swap_with < n) {
                for (std::size_t c = 0; c < n; ++c)
                    std::swap(g.at(i, c), g.at(swap_with, c));
                for (std::size_t r = 0; r < n; ++r)
                    std::swap(g.at(r, i), g.at(r, swap_with));
            } else {
                // All remaining diagonal entries vanish; rescue one with an
                // off-diagonal entry (char != 2) or record the zero.
                std::size_t j = n;
                for (std::size_t c = i + 1; c < n; ++c)
                    if (!g.at(i, c).is_zero()) {
                        j = c;
                        break;
                    }
                if (j == n) {
                    diag.push_back(zero(k));
                    continue;
                }
                for (std::size_t c = 0; c < n; ++c)
                    g.at(i, c) += g.at(j, c);
                for (std::size_t r = 0; r < n; ++r)
                    g.at(r, i) += g.at(r, j);
            }
        }
        Scalar pivot = g.at(i, i);
        for (std::size_t j = i + 1; j < n; ++j) {
            Scalar f = g.at(j, i) / pivot;
            if (f.is_zero())
                continue;
            for (std::size_t c = 0; c < n; ++c)
                g.at(j, c) -= f * g.at(i, c);
            for (std::size_t r = 0; r < n; ++r)
                g.at(r, j) -= f * g.at(r, i);
        }
        diag.push_back(g.at(i, i));
    }
    return diag;
}

// First-principles verification of the invariant: diagonalize the restricted
// trace form and compare square-class multisets with the predicted display.
void cross_check_invariant(const aut::TorusElement& t, const std::vector<Vec>& fixed) {
    const FieldSpec& k = t.field();
    tits::Algebra alg(k);
    const std::size_t n = fixed.size();
    if (n != 15)
        throw std::logic_error("fixed subspace of a type 1 involution must have dimension 15");

    std::vector<tits::Element> basis;
    basis.reserve(n);
    for (const Vec& v : fixed)
        basis.push_back(tits::Element::from_coords(alg, v));
    const Scalar half = one(k) / Scalar(k, 2);
    Mat gram(n, n, zero(k));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Scalar v = half * tits::trace_bilinear(basis[i], basis[j]);
            gram.at(i, j) = v;
            gram.at(j, i) = v;
        }

    std::vector<SquareClass> got;
    for (const Scalar& d : congruence_diagonal(std::move(gram))) {
        if (d.is_zero())
            throw std::logic_error("restricted trace form is degenerate");
        got.push_back(square_class(d));
    }

    std::vector<SquareClass> expected;
    expected.push_back(square_class(half));
    expected.push_back(square_class(half));
    expected.push_back(square_class(half));
    const Scalar u_classes[3] = {t.u2, t.u1 * t.u2, t.u1};
    const Scalar v_classes[4] = {one(k), t.v1, t.v1 * t.v2, t.v2};
    for (const Scalar& u : u_classes)
        for (const Scalar& v : v_classes)
            expected.push_back(square_class(u * v));

    std::sort(got.begin(), got.end());
    std::sort(expected.begin(), expected.end());
    if (!(got == expected))
        throw std::logic_error("restricted trace form does not match the predicted coefficients");
}

InvolutionInvariant invariant_with_dim(const aut::TorusElement& t, std::size_t* fixed_dim) {
    std::vector<Vec> fixed = fixed_basis_light(t);
    if (fixed_dim)
        *fixed_dim = fixed.size();
    cross_check_invariant(t, fixed);
    return InvolutionInvariant{Pfister2(t.v1, t.v1.inverse() * t.v2),
                               GammaTriple(t.u2, t.u1.inverse() * t.u2.inverse(), t.u1)};
}

InvolutionClass classify_invariant(const InvolutionInvariant& inv, const FieldSpec& k) {
    Pfister2 symbol = inv.quaternion_symbol();
    if (pfister_is_split(symbol))
        return InvolutionClass{InvolutionClass::Kind::TypeISplit, k, std::nullopt, std::nullopt};
    NormGroup ng = norm_group_of(symbol);
    return InvolutionClass{InvolutionClass::Kind::TypeIDivision, k, symbol,
                           canonical_gamma(inv.gamma, ng)};
}

aut::TorusElement torus_of_longs(const FieldSpec& k, long a, long b, long c, long d) {
    return aut::TorusElement(Scalar(k, a), Scalar(k, b), Scalar(k, c), Scalar(k, d));
}

} // namespace

Pfister2 InvolutionInvariant::quaternion_symbol() const {
    return Pfister2(-pfister.zeta, -pfister.eta);
}

bool InvolutionInvariant::quaternion_is_split() const {
    return pfister_is_split(quaternion_symbol());
}

InvolutionInvariant invariant_of(const aut::TorusElement& t) {
    return invariant_with_dim(t, nullptr);
}

std::string InvolutionClass::label() const {
    switch (kind) {
    case Kind::TypeII:
        return "TypeII";
    case Kind::TypeISplit:
        return "TypeI(split)";
    case Kind::TypeIDivision:
        break;
    }
    std::string s = "TypeI(division";
    if (field.kind == FieldKind::Rationals && symbol)
        s += ", symbol=(" + square_class(symbol->zeta).to_string() + "," +
             square_class(symbol->eta).to_string() + ")";
    if (gamma_class)
        s += ", gamma=" + gamma_class->to_string();
    return s + ")";
}

bool InvolutionClass::operator==(const InvolutionClass& o) const {
    if (kind != o.kind || !(field == o.field))
        return false;
    if (kind != Kind::TypeIDivision)
        return true;
    if (!symbol || !o.symbol || !gamma_class || !o.gamma_class)
        return false;
    if (!pfister_equivalent(*symbol, *o.symbol))
        return false;
    return gamma_equivalent(*gamma_class, *o.gamma_class, norm_group_of(*symbol));
}

InvolutionClass classify(const aut::TorusElement& t) {
    return classify_invariant(invariant_of(t), t.field());
}

InvolutionClass type2_class(const FieldSpec& k) {
    return InvolutionClass{InvolutionClass::Kind::TypeII, k, std::nullopt, std::nullopt};
}

std::vector<aut::TorusElement> representatives(const FieldSpec& k) {
    switch (k.kind) {
    case FieldKind::AlgClosedModel:
    case FieldKind::FiniteField:
        return {torus_of_longs(k, 1, 1, 1, 1)};
    case FieldKind::Reals:
        return {torus_of_longs(k, 1, 1, -1, 1), torus_of_longs(k, 1, 1, 1, 1),
                torus_of_longs(k, -1, 1, 1, 1)};
    case FieldKind::PAdics:
        if (k.p == 2)
            return {torus_of_longs(k, 1, 1, -1, 1), torus_of_longs(k, 1, 1, 1, 1)};
        return {torus_of_longs(k, 1, 1, -1, 1),
                torus_of_longs(k, 1, 1, -static_cast<long>(k.p),
                               -static_cast<long>(least_nonresidue(k.p)))};
    case FieldKind::Rationals:
        throw InfiniteClassCount("infinitely many classes over the rationals");
    }
    throw std::invalid_argument("unsupported field");
}

ClassCount class_count(const FieldSpec& k, InvolutionKind kind) {
    if (kind == InvolutionKind::TypeII)
        return ClassCount{false, 1};
    switch (k.kind) {
    case FieldKind::AlgClosedModel:
    case FieldKind::FiniteField:
        return ClassCount{false, 1};
    case FieldKind::Reals:
        return ClassCount{false, 3};
    case FieldKind::PAdics:
        return ClassCount{false, 2};
    case FieldKind::Rationals:
        return ClassCount{true, 0};
    }
    throw std::invalid_argument("unsupported field");
}

CensusResult census(const FieldSpec& k, const CensusOptions& options) {
    if (k.kind != FieldKind::FiniteField)
        throw std::invalid_argument("census runs over finite fields");
    if (k.p == 2)
        throw std::invalid_argument("census requires odd characteristic");
    if (options.exhaustive && k.p > 13)
        throw std::invalid_argument("exhaustive census is bounded to p <= 13");

    const std::uint64_t units = k.p - 1;
    std::vector<std::array<long, 4>> tuples;
    if (options.exhaustive) {
        tuples.reserve(units * units * units * units);
        for (std::uint64_t i = 0, n = units * units * units * units; i < n; ++i) {
            std::uint64_t x = i;
            std::array<long, 4> tup{};
            for (int slot = 3; slot >= 0; --slot) {
                tup[static_cast<std::size_t>(slot)] = static_cast<long>(x % units + 1);
                x /= units;
            }
            tuples.push_back(tup);
        }
    } else {
        std::mt19937_64 rng(options.seed);
        tuples.reserve(options.samples);
        for (std::size_t i = 0; i < options.samples; ++i)
            tuples.push_back({static_cast<long>(rng() % units + 1),
                              static_cast<long>(rng() % units + 1),
                              static_cast<long>(rng() % units + 1),
                              static_cast<long>(rng() % units + 1)});
    }

    const std::size_t total = tuples.size();
    const unsigned jobs = std::max(1u, options.jobs);
    struct Local {
        std::vector<std::pair<InvolutionClass, std::size_t>> histogram;
        bool all_15 = true;
    };
    std::vector<Local> locals(jobs);
    std::vector<CensusRow> rows(options.keep_rows ? total : 0);

    auto worker = [&](unsigned w, std::size_t lo, std::size_t hi) {
        Local& local = locals[w];
        for (std::size_t i = lo; i < hi; ++i) {
            const auto& tup = tuples[i];
            aut::TorusElement t = torus_of_longs(k, tup[0], tup[1], tup[2], tup[3]);
            std::size_t dim = 0;
            InvolutionClass cls = classify_invariant(invariant_with_dim(t, &dim), k);
            local.all_15 = local.all_15 && dim == 15;
            bool found = false;
            for (auto& entry : local.histogram)
                if (entry.first == cls) {
                    ++entry.second;
                    found = true;
                    break;
                }
            if (!found)
                local.histogram.emplace_back(cls, 1);
            if (options.keep_rows)
                rows[i] = CensusRow{{t.u1.to_string(), t.u2.to_string(), t.v1.to_string(),
                                     t.v2.to_string()},
                                    cls.label(), dim};
        }
    };

    if (jobs == 1) {
        worker(0, 0, total);
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (total + jobs - 1) / jobs;
        for (unsigned w = 0; w < jobs; ++w) {
            std::size_t lo = std::min<std::size_t>(w * chunk, total);
            std::size_t hi = std::min<std::size_t>(lo + chunk, total);
            pool.emplace_back(worker, w, lo, hi);
        }
        for (auto& th : pool)
            th.join();
    }

    CensusResult result;
    result.total = total;
    result.rows = std::move(rows);
    for (const Local& local : locals) {
        result.all_fixed_dim_15 = result.all_fixed_dim_15 && local.all_15;
        for (const auto& entry : local.histogram) {
            bool found = false;
            for (auto& acc : result.histogram)
                if (acc.first == entry.first) {
                    acc.second += entry.second;
                    found = true;
                    break;
                }
            if (!found)
                result.histogram.push_back(entry);
        }
    }
    std::sort(result.histogram.begin(), result.histogram.end(),
              [](const auto& a, const auto& b) { return a.first.label() < b.first.label(); });
    return result;
}

std::vector<aut::TorusElement> rational_distinct_torus(const std::vector<std::uint32_t>& primes) {
    std::set<std::uint32_t> seen;
    FieldSpec q = FieldSpec::rationals();
    std::vector<aut::TorusElement> out;
    out.reserve(primes.size());
    for (std::uint32_t p : primes) {
        if (!is_prime_u32(p) || p % 4 != 3)
            throw std::invalid_argument("rational family needs primes congruent to 3 mod 4");
        if (!seen.insert(p).second)
            throw std::invalid_argument("rational family needs distinct primes");
        out.push_back(torus_of_longs(q, 1, 1, 1, -static_cast<long>(p)));
    }
    return out;
}

std::vector<InvolutionClass> rational_distinct_family(const std::vector<std::uint32_t>& primes) {
    std::vector<InvolutionClass> out;
    for (const aut::TorusElement& t : rational_distinct_torus(primes))
        out.push_back(classify(t));
    return out;
}

} // namespace albert::cls
