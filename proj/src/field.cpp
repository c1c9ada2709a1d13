#include "albert/field.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace albert {

// ---------- FieldSpec ----------

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

static void require_prime(std::uint32_t p, const char* what) {
    if (!is_prime_u32(p)) throw std::invalid_argument(std::string(what) + ": " + std::to_string(p) + " is not prime");
}

FieldSpec FieldSpec::alg_closed(std::uint32_t p) {
    require_prime(p, "AlgClosedModel");
    if (p == 2) throw std::invalid_argument("AlgClosedModel: characteristic 2 not supported");
    return {FieldKind::AlgClosedModel, p};
}

FieldSpec FieldSpec::finite(std::uint32_t p) {
    require_prime(p, "FiniteField");
    if (p == 2) throw std::invalid_argument("FiniteField: characteristic 2 not supported");
    return {FieldKind::FiniteField, p};
}

FieldSpec FieldSpec::rationals() { return {FieldKind::Rationals, 0}; }
FieldSpec FieldSpec::reals() { return {FieldKind::Reals, 0}; }

FieldSpec FieldSpec::padics(std::uint32_t p) {
    require_prime(p, "PAdics");
    return {FieldKind::PAdics, p};
}

FieldSpec FieldSpec::parse(const std::string& s) {
    if (s == "C") return alg_closed();
    if (s == "Q") return rationals();
    if (s == "R") return reals();
    auto parse_p = [&](const std::string& tail) -> std::uint32_t {
        std::size_t pos = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(tail, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad field spec: " + s);
        }
        if (pos != tail.size() || v == 0 || v > 0x7fffffffUL)
            throw std::invalid_argument("bad field spec: " + s);
        return static_cast<std::uint32_t>(v);
    };
    if (s.rfind("Fp:", 0) == 0) return finite(parse_p(s.substr(3)));
    if (s.rfind("Qp:", 0) == 0) return padics(parse_p(s.substr(3)));
    throw std::invalid_argument("unknown field spec: " + s);
}

std::string FieldSpec::to_string() const {
    switch (kind) {
        case FieldKind::AlgClosedModel: return "C";
        case FieldKind::FiniteField: return "Fp:" + std::to_string(p);
        case FieldKind::Rationals: return "Q";
        case FieldKind::Reals: return "R";
        case FieldKind::PAdics: return "Qp:" + std::to_string(p);
    }
    return "?";
}

std::uint32_t FieldSpec::characteristic() const { return modular() ? p : 0; }

// ---------- modular helpers ----------

namespace {

std::uint64_t mod_add(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a + b) % p; }
std::uint64_t mod_sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a + p - b) % p; }
std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a * b) % p; } // p < 2^31

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) {
    if (a == 0) throw std::domain_error("division by zero in F_p");
    // extended Euclid
    std::int64_t t = 0, newt = 1;
    std::int64_t r = static_cast<std::int64_t>(p), newr = static_cast<std::int64_t>(a);
    while (newr != 0) {
        std::int64_t q = r / newr;
        std::int64_t tmp = t - q * newt;
        t = newt; newt = tmp;
        tmp = r - q * newr;
        r = newr; newr = tmp;
    }
    assert(r == 1); // p prime, a != 0
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

// residue of a rational (with denominator coprime to m) mod a small modulus m
std::uint64_t rational_mod(const mpq_class& q, std::uint64_t m) {
    mpz_class num = q.get_num(), den = q.get_den();
    mpz_class nm = num % static_cast<unsigned long>(m);
    if (nm < 0) nm += static_cast<unsigned long>(m);
    mpz_class dm = den % static_cast<unsigned long>(m);
    std::uint64_t n = nm.get_ui(), d = dm.get_ui();
    if (m == 8) {
        // modulus 8 is not prime; the denominator must be odd
        if (d % 2 == 0) throw std::domain_error("rational_mod: even denominator mod 8");
        // odd residues are self-inverse-able by search
        for (std::uint64_t i = 1; i < 8; i += 2)
            if ((d * i) % 8 == 1) return (n * i) % 8;
        throw std::logic_error("rational_mod: unreachable");
    }
    if (d == 0) throw std::domain_error("rational_mod: denominator divisible by modulus");
    return mod_mul(n, mod_inv(d, m), m);
}

} // namespace

// ---------- Scalar ----------

Scalar::Scalar(const FieldSpec& k, long n) : field_(k) {
    if (field_.modular()) {
        long m = n % static_cast<long>(field_.p);
        if (m < 0) m += static_cast<long>(field_.p);
        rep_ = static_cast<std::uint64_t>(m);
    } else {
        rat_ = mpq_class(n);
    }
}

Scalar::Scalar(const FieldSpec& k, const mpq_class& q) : field_(k) {
    if (field_.modular()) {
        rep_ = rational_mod(q, field_.p);
    } else {
        rat_ = q;
        rat_.canonicalize();
    }
}

Scalar Scalar::parse(const FieldSpec& k, const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty scalar");
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad scalar: " + s);
    q.canonicalize();
    if (q.get_den() == 0) throw std::invalid_argument("bad scalar (zero denominator): " + s);
    if (k.modular() && mpz_divisible_ui_p(q.get_den().get_mpz_t(), k.p))
        throw std::invalid_argument("scalar denominator divisible by the characteristic: " + s);
    return Scalar(k, q);
}

bool Scalar::is_zero() const { return field_.modular() ? rep_ == 0 : rat_ == 0; }
bool Scalar::is_one() const { return field_.modular() ? rep_ == 1 : rat_ == 1; }

std::uint64_t Scalar::residue() const {
    if (!field_.modular()) throw std::logic_error("residue() on a non-modular scalar");
    return rep_;
}

const mpq_class& Scalar::rational() const {
    if (field_.modular()) throw std::logic_error("rational() on a modular scalar");
    return rat_;
}

int Scalar::sign() const {
    if (!field_.ordered()) throw std::logic_error("sign() requires an ordered field");
    return sgn(rat_);
}

void Scalar::check_same_field(const Scalar& other) const {
    if (!(field_ == other.field_)) throw std::invalid_argument("mixed-field scalar arithmetic");
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    if (field_.modular())
        r.rep_ = rep_ == 0 ? 0 : field_.p - rep_;
    else
        r.rat_ = -rat_;
    return r;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    Scalar r = *this;
    if (field_.modular())
        r.rep_ = mod_inv(rep_, field_.p);
    else
        r.rat_ = 1 / rat_;
    return r;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    a.check_same_field(b);
    Scalar r = a;
    if (a.field_.modular()) r.rep_ = mod_add(a.rep_, b.rep_, a.field_.p);
    else r.rat_ = a.rat_ + b.rat_;
    return r;
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    a.check_same_field(b);
    Scalar r = a;
    if (a.field_.modular()) r.rep_ = mod_sub(a.rep_, b.rep_, a.field_.p);
    else r.rat_ = a.rat_ - b.rat_;
    return r;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    a.check_same_field(b);
    Scalar r = a;
    if (a.field_.modular()) r.rep_ = mod_mul(a.rep_, b.rep_, a.field_.p);
    else r.rat_ = a.rat_ * b.rat_;
    return r;
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    a.check_same_field(b);
    if (b.is_zero()) throw std::domain_error("division by zero");
    Scalar r = a;
    if (a.field_.modular()) r.rep_ = mod_mul(a.rep_, mod_inv(b.rep_, a.field_.p), a.field_.p);
    else r.rat_ = a.rat_ / b.rat_;
    return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (!(a.field_ == b.field_)) return false;
    return a.field_.modular() ? a.rep_ == b.rep_ : a.rat_ == b.rat_;
}

std::string Scalar::to_string() const {
    if (field_.modular()) return std::to_string(rep_);
    return rat_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

// ---------- Legendre / square classes ----------

int legendre_symbol(const mpz_class& a, std::uint32_t p) {
    if (p == 2 || !is_prime_u32(p)) throw std::invalid_argument("legendre_symbol: p must be an odd prime");
    mpz_class pz(static_cast<unsigned long>(p));
    return mpz_legendre(a.get_mpz_t(), pz.get_mpz_t());
}

int legendre_symbol(const Scalar& a, std::uint32_t p) {
    if (a.field().modular()) {
        if (a.field().p != p) throw std::invalid_argument("legendre_symbol: scalar lives mod a different prime");
        return legendre_symbol(mpz_class(static_cast<unsigned long>(a.residue())), p);
    }
    const mpq_class& q = a.rational();
    // (num/den | p) = (num*den | p) when p divides neither
    return legendre_symbol(mpz_class(q.get_num() * q.get_den()), p);
}

std::uint32_t least_nonresidue(std::uint32_t p) {
    for (std::uint32_t z = 2; z < p; ++z)
        if (legendre_symbol(mpz_class(z), p) == -1) return z;
    throw std::logic_error("least_nonresidue: none found (p == 3 gives 2; unreachable)");
}

mpz_class squarefree_part(const mpz_class& n) {
    if (n == 0) throw std::invalid_argument("squarefree_part of zero");
    mpz_class m = abs(n), out = 1;
    for (mpz_class d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            int e = 0;
            while (m % d == 0) { m /= d; ++e; }
            if (e % 2) out *= d;
        }
    }
    out *= m; // m is prime or 1 here
    return sgn(n) < 0 ? mpz_class(-out) : out;
}

namespace {

// p-adic valuation of a nonzero rational; also returns the unit part.
long padic_val(const mpq_class& q, std::uint32_t p, mpq_class* unit = nullptr) {
    mpz_class num = q.get_num(), den = q.get_den();
    long v = 0;
    while (mpz_divisible_ui_p(num.get_mpz_t(), p)) { num /= p; ++v; }
    while (mpz_divisible_ui_p(den.get_mpz_t(), p)) { den /= p; --v; }
    if (unit) *unit = mpq_class(num) / mpq_class(den);
    return v;
}

} // namespace

SquareClass square_class(const Scalar& a) {
    if (a.is_zero()) throw std::invalid_argument("square_class of zero");
    const FieldSpec& k = a.field();
    switch (k.kind) {
        case FieldKind::AlgClosedModel:
            return {k, mpq_class(1)};
        case FieldKind::FiniteField: {
            int s = legendre_symbol(a, k.p);
            return {k, s == 1 ? mpq_class(1) : mpq_class(static_cast<unsigned long>(least_nonresidue(k.p)))};
        }
        case FieldKind::Reals:
            return {k, mpq_class(a.sign())};
        case FieldKind::Rationals:
            return {k, mpq_class(squarefree_part(a.rational().get_num() * a.rational().get_den()))};
        case FieldKind::PAdics: {
            mpq_class unit;
            long v = padic_val(a.rational(), k.p, &unit);
            if (k.p != 2) {
                int ls = legendre_symbol(Scalar(FieldSpec::rationals(), unit), k.p);
                mpq_class rep = ls == 1 ? mpq_class(1) : mpq_class(static_cast<unsigned long>(least_nonresidue(k.p)));
                if (v % 2 != 0) rep *= static_cast<unsigned long>(k.p);
                return {k, rep};
            }
            // Q_2: eight classes {±1, ±2, ±5, ±10}; the unit class is u mod 8.
            std::uint64_t u8 = rational_mod(unit, 8);
            mpq_class rep;
            switch (u8) {
                case 1: rep = 1; break;
                case 3: rep = -5; break; // -5 = 3 mod 8
                case 5: rep = 5; break;
                case 7: rep = -1; break; // -1 = 7 mod 8
                default: throw std::logic_error("square_class: even unit mod 8");
            }
            if (v % 2 != 0) rep *= 2;
            return {k, rep};
        }
    }
    throw std::logic_error("square_class: unhandled field kind");
}

bool is_square(const Scalar& a) {
    if (a.is_zero()) return true;
    SquareClass c = square_class(a);
    return c.rep == 1;
}

bool operator==(const SquareClass& a, const SquareClass& b) {
    return a.field == b.field && a.rep == b.rep;
}

bool operator<(const SquareClass& a, const SquareClass& b) {
    if (!(a.field == b.field)) throw std::invalid_argument("comparing square classes of different fields");
    return cmp(a.rep, b.rep) < 0;
}

std::string SquareClass::to_string() const { return rep.get_str(); }

// ---------- Hilbert symbol ----------

int hilbert_symbol(const Scalar& a, const Scalar& b) {
    if (a.is_zero() || b.is_zero()) throw std::invalid_argument("hilbert_symbol: arguments must be nonzero");
    if (!(a.field() == b.field())) throw std::invalid_argument("hilbert_symbol: mixed fields");
    const FieldSpec& k = a.field();
    if (k.kind == FieldKind::Reals)
        return (a.sign() < 0 && b.sign() < 0) ? -1 : 1;
    if (k.kind != FieldKind::PAdics)
        throw std::invalid_argument("hilbert_symbol: supported over R and Q_p only");

    mpq_class u, w;
    long alpha = padic_val(a.rational(), k.p, &u);
    long beta = padic_val(b.rational(), k.p, &w);
    if (k.p != 2) {
        int eps = (k.p - 1) / 2 % 2; // (p-1)/2 parity
        int sign_exp = (alpha % 2) && (beta % 2) ? eps : 0;
        int lu = legendre_symbol(Scalar(FieldSpec::rationals(), u), k.p);
        int lw = legendre_symbol(Scalar(FieldSpec::rationals(), w), k.p);
        int r = sign_exp % 2 ? -1 : 1;
        if (beta % 2) r *= lu;
        if (alpha % 2) r *= lw;
        return r;
    }
    // p = 2: (-1)^( eps(u)eps(w) + alpha*omega(w) + beta*omega(u) )
    auto eps2 = [](const mpq_class& x) { return rational_mod(x, 8) % 4 == 3 ? 1 : 0; };
    auto omega2 = [](const mpq_class& x) {
        std::uint64_t m = rational_mod(x, 8);
        return (m == 3 || m == 5) ? 1 : 0;
    };
    int e = eps2(u) * eps2(w) + static_cast<int>(alpha & 1) * omega2(w) + static_cast<int>(beta & 1) * omega2(u);
    return e % 2 ? -1 : 1;
}

// ---------- Pfister forms ----------

Pfister2::Pfister2(const Scalar& z, const Scalar& e) : zeta(z), eta(e) {
    if (!(z.field() == e.field())) throw std::invalid_argument("Pfister2: mixed fields");
    if (z.is_zero() || e.is_zero()) throw std::invalid_argument("Pfister2: entries must be nonzero");
}

namespace {

// Odd primes at which a rational 2-Pfister form can be non-split: divisors of
// the numerators/denominators of its entries.
void collect_odd_places(const Scalar& s, std::set<std::uint32_t>& places) {
    auto collect = [&](mpz_class n) {
        n = abs(n);
        for (mpz_class d = 3; d * d <= n; d += 2) {
            if (n % d == 0) {
                if (!d.fits_uint_p()) throw std::domain_error("pfister place exceeds 32 bits");
                places.insert(static_cast<std::uint32_t>(d.get_ui()));
                while (n % d == 0) n /= d;
            }
        }
        while (n % 2 == 0) n /= 2;
        if (n > 1) {
            if (!n.fits_uint_p()) throw std::domain_error("pfister place exceeds 32 bits");
            places.insert(static_cast<std::uint32_t>(n.get_ui()));
        }
    };
    collect(s.rational().get_num());
    collect(s.rational().get_den());
}

int rational_local_symbol(const Scalar& zeta, const Scalar& eta, const FieldSpec& place) {
    Scalar z(place, zeta.rational()), e(place, eta.rational());
    return hilbert_symbol(z, e);
}

} // namespace

bool pfister_is_split(const Pfister2& f) {
    const FieldSpec& k = f.field();
    switch (k.kind) {
        case FieldKind::AlgClosedModel:
            return true; // every nonzero element is a square
        case FieldKind::FiniteField:
            return true; // only split quaternion algebras over F_p
        case FieldKind::Reals:
        case FieldKind::PAdics:
            return hilbert_symbol(f.zeta, f.eta) == 1;
        case FieldKind::Rationals: {
            if (rational_local_symbol(f.zeta, f.eta, FieldSpec::reals()) == -1) return false;
            if (rational_local_symbol(f.zeta, f.eta, FieldSpec::padics(2)) == -1) return false;
            std::set<std::uint32_t> places;
            collect_odd_places(f.zeta, places);
            collect_odd_places(f.eta, places);
            for (std::uint32_t p : places)
                if (rational_local_symbol(f.zeta, f.eta, FieldSpec::padics(p)) == -1) return false;
            return true;
        }
    }
    throw std::logic_error("pfister_is_split: unhandled field kind");
}

bool pfister_equivalent(const Pfister2& f, const Pfister2& g) {
    if (!(f.field() == g.field())) throw std::invalid_argument("pfister_equivalent: mixed fields");
    const FieldSpec& k = f.field();
    if (k.kind != FieldKind::Rationals) {
        // at most one anisotropic 2-Pfister class over these fields
        return pfister_is_split(f) == pfister_is_split(g);
    }
    // Over Q: compare all local split flags. Away from infinity, 2, and the
    // divisors of the entries both forms are split.
    if (rational_local_symbol(f.zeta, f.eta, FieldSpec::reals()) !=
        rational_local_symbol(g.zeta, g.eta, FieldSpec::reals()))
        return false;
    std::set<std::uint32_t> places{2};
    collect_odd_places(f.zeta, places);
    collect_odd_places(f.eta, places);
    collect_odd_places(g.zeta, places);
    collect_odd_places(g.eta, places);
    for (std::uint32_t p : places)
        if (rational_local_symbol(f.zeta, f.eta, FieldSpec::padics(p)) !=
            rational_local_symbol(g.zeta, g.eta, FieldSpec::padics(p)))
            return false;
    return true;
}

// ---------- gamma equivalence ----------

GammaTriple::GammaTriple(const Scalar& a, const Scalar& b, const Scalar& c) : g1(a), g2(b), g3(c) {
    if (!(a.field() == b.field()) || !(a.field() == c.field()))
        throw std::invalid_argument("GammaTriple: mixed fields");
    if (a.is_zero() || b.is_zero() || c.is_zero())
        throw std::invalid_argument("GammaTriple: entries must be nonzero");
}

std::string GammaTriple::to_string() const {
    return "(" + g1.to_string() + "," + g2.to_string() + "," + g3.to_string() + ")";
}

NormGroup norm_group_of(const Pfister2& f) {
    const FieldSpec& k = f.field();
    if (pfister_is_split(f)) return NormGroup::Full;
    if (k.kind == FieldKind::Reals)
        return NormGroup::PositiveOnly;
    if (k.kind == FieldKind::Rationals) {
        // Division algebra: the norm group is everything when the norm form is
        // indefinite (Hasse-Minkowski: 5-dim forms over Q_p are isotropic) and
        // the positives when definite (zeta, eta < 0).
        bool definite = f.zeta.sign() < 0 && f.eta.sign() < 0;
        return definite ? NormGroup::PositiveOnly : NormGroup::Full;
    }
    // Q_p division quaternion norms are surjective.
    return NormGroup::Full;
}

namespace {

int negatives(const GammaTriple& g) {
    return (g.g1.sign() < 0) + (g.g2.sign() < 0) + (g.g3.sign() < 0);
}

} // namespace

bool gamma_equivalent(const GammaTriple& g, const GammaTriple& h, NormGroup ng) {
    if (!(g.field() == h.field())) throw std::invalid_argument("gamma_equivalent: mixed fields");
    if (ng == NormGroup::Full) return true;
    if (!g.field().ordered())
        throw std::invalid_argument("gamma_equivalent: PositiveOnly needs an ordered field");
    // Positive scalings are free, so only the sign pattern matters, up to a
    // global flip and permutation: orbits are {0,3} and {1,2} negatives.
    int a = negatives(g), b = negatives(h);
    return a == b || a == 3 - b;
}

GammaTriple canonical_gamma(const GammaTriple& g, NormGroup ng) {
    const FieldSpec& k = g.field();
    if (ng == NormGroup::Full) return GammaTriple(one(k), one(k), one(k));
    int n = negatives(g);
    if (n == 0 || n == 3) return GammaTriple(one(k), one(k), one(k));
    return GammaTriple(-one(k), one(k), one(k));
}

std::vector<SquareClass> square_class_group(const FieldSpec& k) {
    auto cls = [&](long n) { return square_class(Scalar(k, n)); };
    switch (k.kind) {
        case FieldKind::AlgClosedModel:
            return {cls(1)};
        case FieldKind::FiniteField:
            return {cls(1), cls(static_cast<long>(least_nonresidue(k.p)))};
        case FieldKind::Reals:
            return {cls(1), cls(-1)};
        case FieldKind::PAdics: {
            if (k.p != 2) {
                long z = static_cast<long>(least_nonresidue(k.p));
                long p = static_cast<long>(k.p);
                return {cls(1), cls(z), cls(p), cls(p * z)};
            }
            return {cls(1), cls(-1), cls(5), cls(-5), cls(2), cls(-2), cls(10), cls(-10)};
        }
        case FieldKind::Rationals:
            throw std::invalid_argument("square_class_group: infinite over Q");
    }
    throw std::logic_error("square_class_group: unhandled field kind");
}

bool gamma_equivalent(const GammaTriple& g, const GammaTriple& h,
                      const std::vector<SquareClass>& normgroup) {
    if (!(g.field() == h.field())) throw std::invalid_argument("gamma_equivalent: mixed fields");
    const FieldSpec& k = g.field();
    if (k.kind == FieldKind::Rationals)
        throw std::invalid_argument("gamma_equivalent: use the NormGroup overload over Q");

    // Close the generators into a subgroup of the (finite, exponent-2) class group.
    auto mul_cls = [&](const SquareClass& a, const SquareClass& b) {
        return square_class(Scalar(k, a.rep * b.rep));
    };
    std::set<SquareClass> sub{square_class(one(k))};
    for (const auto& gen : normgroup) {
        if (!(gen.field == k)) throw std::invalid_argument("gamma_equivalent: normgroup field mismatch");
        sub.insert(square_class(Scalar(k, gen.rep)));
    }
    bool grew = true;
    while (grew) {
        grew = false;
        std::set<SquareClass> next = sub;
        for (const auto& a : sub)
            for (const auto& b : sub)
                if (next.insert(mul_cls(a, b)).second) grew = true;
        sub = next;
    }

    std::array<SquareClass, 3> gc{square_class(g.g1), square_class(g.g2), square_class(g.g3)};
    std::array<SquareClass, 3> hc{square_class(h.g1), square_class(h.g2), square_class(h.g3)};
    std::array<int, 3> perm{0, 1, 2};
    std::vector<SquareClass> group = square_class_group(k);
    std::sort(perm.begin(), perm.end());
    do {
        for (const auto& delta : group) {
            bool ok = true;
            for (int i = 0; i < 3 && ok; ++i) {
                // need cls(g_i) = cls(delta) * cls(h_perm(i)) * n for some n in sub;
                // exponent 2 lets us test membership of the product of all three.
                SquareClass prod = mul_cls(mul_cls(gc[static_cast<std::size_t>(i)], delta),
                                           hc[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])]);
                ok = sub.count(prod) > 0;
            }
            if (ok) return true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

} // namespace albert
