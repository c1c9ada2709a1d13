#pragma once

// Exact pluggable field arithmetic with square-class, Legendre-symbol,
// Hilbert-symbol and 2-Pfister-form services.
//
// Supported fields:
//   * AlgClosedModel : F_p arithmetic (odd p) where every nonzero element is
//                      declared a square -- a classification-level model of an
//                      algebraically closed field.
//   * FiniteField    : F_p, p an odd prime.
//   * Rationals      : exact rationals (GMP).
//   * Reals          : rationals with the sign square-class oracle.
//   * PAdics         : rationals with the valuation/residue square-class
//                      oracle of Q_p (p = 2 allowed).
//
// All values are immutable after construction; operations are pure.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace albert {

enum class FieldKind { AlgClosedModel, FiniteField, Rationals, Reals, PAdics };

bool is_prime_u32(std::uint32_t n);

struct FieldSpec {
    FieldKind kind = FieldKind::Rationals;
    std::uint32_t p = 0; // modulus (AlgClosedModel/FiniteField) or place (PAdics)

    static FieldSpec alg_closed(std::uint32_t p = 101);
    static FieldSpec finite(std::uint32_t p);
    static FieldSpec rationals();
    static FieldSpec reals();
    static FieldSpec padics(std::uint32_t p);

    // "C" | "Fp:<p>" | "Q" | "R" | "Qp:<p>"
    static FieldSpec parse(const std::string& s);
    std::string to_string() const;

    // 0 in characteristic zero, p otherwise.
    std::uint32_t characteristic() const;
    bool modular() const { return kind == FieldKind::AlgClosedModel || kind == FieldKind::FiniteField; }
    // Fields whose elements are represented by exact rationals.
    bool rational_backed() const { return !modular(); }
    bool ordered() const { return kind == FieldKind::Reals || kind == FieldKind::Rationals; }

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) = default;
};

// An exact field element: a residue for modular fields, a reduced fraction
// otherwise. No floating point anywhere.
class Scalar {
public:
    Scalar() = default; // zero of Q; prefer the field-carrying constructors
    Scalar(const FieldSpec& k, long n);
    Scalar(const FieldSpec& k, const mpq_class& q);
    static Scalar from_int(const FieldSpec& k, long n) { return Scalar(k, n); }
    // Accepts "n" or "n/d".
    static Scalar parse(const FieldSpec& k, const std::string& s);

    const FieldSpec& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    // Residue in [0, p) for modular fields.
    std::uint64_t residue() const;
    // Underlying rational for rational-backed fields.
    const mpq_class& rational() const;
    // Sign for ordered (rational-backed) fields.
    int sign() const;

    Scalar operator-() const;
    Scalar inverse() const; // throws on zero
    std::string to_string() const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b); // throws on zero divisor
    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
    Scalar& operator/=(const Scalar& b) { return *this = *this / b; }
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
    friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

private:
    FieldSpec field_{FieldKind::Rationals, 0};
    std::uint64_t rep_ = 0; // modular representation
    mpq_class rat_{0};      // rational representation

    void check_same_field(const Scalar& other) const;
};

inline Scalar zero(const FieldSpec& k) { return Scalar(k, 0); }
inline Scalar one(const FieldSpec& k) { return Scalar(k, 1); }

// ---------- square classes ----------

// Canonical square-class representative:
//   F_p: 1 or the least positive non-residue z_p; AlgClosedModel: 1;
//   R: +-1; Q_p (odd): 1, z_p, p, p*z_p; Q_2: +-1, +-2, +-5, +-10;
//   Q: sign * squarefree part of numerator*denominator.
struct SquareClass {
    FieldSpec field;
    mpq_class rep;

    std::string to_string() const;
    friend bool operator==(const SquareClass& a, const SquareClass& b);
    friend bool operator!=(const SquareClass& a, const SquareClass& b) { return !(a == b); }
    friend bool operator<(const SquareClass& a, const SquareClass& b); // for ordered containers
};

// Legendre symbol of a mod p (p an odd prime): +1 square, -1 non-square, 0 if p | a.
int legendre_symbol(const mpz_class& a, std::uint32_t p);
int legendre_symbol(const Scalar& a, std::uint32_t p);

// Least positive non-residue mod p.
std::uint32_t least_nonresidue(std::uint32_t p);

// Squarefree part of a nonzero integer (keeps sign). Trial division; intended
// for desk-scale inputs.
mpz_class squarefree_part(const mpz_class& n);

SquareClass square_class(const Scalar& a); // throws on zero
bool is_square(const Scalar& a);           // true for 0 as well

// Hilbert symbol (a,b)_k for k in {Reals, PAdics}: +1 iff z^2 = ax^2 + by^2
// has a nontrivial solution.
int hilbert_symbol(const Scalar& a, const Scalar& b);

// ---------- 2-Pfister forms ----------

// Represents x0^2 - zeta*x1^2 - eta*x2^2 + zeta*eta*x3^2 (the norm form of the
// quaternion algebra (zeta, eta / k)).
struct Pfister2 {
    Scalar zeta, eta;
    Pfister2(const Scalar& z, const Scalar& e);
    const FieldSpec& field() const { return zeta.field(); }
};

bool pfister_is_split(const Pfister2& f);
bool pfister_equivalent(const Pfister2& f, const Pfister2& g);

// ---------- gamma triples ----------

struct GammaTriple {
    Scalar g1, g2, g3;
    GammaTriple(const Scalar& a, const Scalar& b, const Scalar& c);
    const FieldSpec& field() const { return g1.field(); }
    std::string to_string() const;
    bool operator==(const GammaTriple& o) const {
        return g1 == o.g1 && g2 == o.g2 && g3 == o.g3;
    }
    bool operator!=(const GammaTriple& o) const { return !(*this == o); }
};

// The image of the quaternion norm in the square-class group.
//   Full         : all classes (split D; F_p, Q_p, model-K always).
//   PositiveOnly : classes of positive elements (R: {+1}; Q: positive
//                  squarefree classes) -- definite division D over an ordered field.
enum class NormGroup { Full, PositiveOnly };

// Norm group of the quaternion algebra with norm form f over its field.
NormGroup norm_group_of(const Pfister2& f);

// gamma ~ gamma' under simultaneous scaling, entrywise squares, entrywise
// norm-class multiplication, and coordinate permutation.
bool gamma_equivalent(const GammaTriple& g, const GammaTriple& h, NormGroup ng);
// Same, with the norm group given by explicit square-class generators
// (finite square-class groups only, i.e. not over Q).
bool gamma_equivalent(const GammaTriple& g, const GammaTriple& h,
                      const std::vector<SquareClass>& normgroup);

// Canonical orbit representative used for class labels.
GammaTriple canonical_gamma(const GammaTriple& g, NormGroup ng);

// Full square-class group (finite square-class groups only).
std::vector<SquareClass> square_class_group(const FieldSpec& k);

} // namespace albert
