#pragma once

// Field-by-field classification of the involutions: the quadratic-form
// invariant (zeta, eta, gamma) read off a torus element, class labels under
// quaternion-norm gamma-equivalence, representative lists, class counts, a
// finite-field census, and the infinite rational family.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "albert/automorphism.hpp"
#include "albert/field.hpp"

namespace albert::cls {

struct InfiniteClassCount : std::domain_error {
    using std::domain_error::domain_error;
};

// Literal invariant of a torus element: zeta = v1, eta = v1^{-1} v2,
// gamma = (u2, u1^{-1} u2^{-1}, u1). The quaternion algebra attached to the
// involution has symbol (-zeta, -eta).
struct InvolutionInvariant {
    Pfister2 pfister;  // (zeta, eta)
    GammaTriple gamma; // (u2, u1^{-1} u2^{-1}, u1)

    Pfister2 quaternion_symbol() const;
    bool quaternion_is_split() const;
};

// Reads the invariant off t and cross-checks it from first principles: the
// restriction of the trace form x -> 1/2 Tr(x^2) to the fixed subalgebra of
// theta compose f_t is diagonalized exactly and its square-class multiset is
// compared with {1/2, 1/2, 1/2} u {u2, u1 u2, u1} x {1, v1, v1 v2, v2}.
InvolutionInvariant invariant_of(const aut::TorusElement& t);

struct InvolutionClass {
    enum class Kind { TypeISplit, TypeIDivision, TypeII };
    Kind kind;
    FieldSpec field;
    // Division labels carry the quaternion symbol (-zeta, -eta) and the
    // canonical gamma class under the quaternion norm group.
    std::optional<Pfister2> symbol;
    std::optional<GammaTriple> gamma_class;

    std::string label() const;
    bool operator==(const InvolutionClass& o) const;
    bool operator!=(const InvolutionClass& o) const { return !(*this == o); }
};

// Class of the involution theta compose f_t over k = t.field().
InvolutionClass classify(const aut::TorusElement& t);
InvolutionClass type2_class(const FieldSpec& k);

// Verbatim representative torus elements (one per class); throws
// InfiniteClassCount over the rationals.
std::vector<aut::TorusElement> representatives(const FieldSpec& k);

struct ClassCount {
    bool infinite = false;
    std::size_t count = 0;
};
enum class InvolutionKind { TypeI, TypeII };
ClassCount class_count(const FieldSpec& k, InvolutionKind kind);

struct CensusRow {
    std::array<std::string, 4> torus; // u1, u2, v1, v2
    std::string label;
    std::size_t fixed_dim;
};
struct CensusOptions {
    bool exhaustive = true;
    std::size_t samples = 1000;
    std::uint64_t seed = 0;
    unsigned jobs = 1;
    bool keep_rows = false;
};
struct CensusResult {
    std::vector<std::pair<InvolutionClass, std::size_t>> histogram;
    std::size_t total = 0;
    bool all_fixed_dim_15 = true;
    std::vector<CensusRow> rows;
};

// Classify every torus element (exhaustive, odd p <= 13) or a seeded sample;
// parallel over elements, deterministic for a fixed seed.
CensusResult census(const FieldSpec& k, const CensusOptions& options);

// Torus elements t(1,1,1,-p) whose quaternion symbols (-1, p) are pairwise
// inequivalent over Q; requires distinct primes p = 3 mod 4.
std::vector<InvolutionClass> rational_distinct_family(const std::vector<std::uint32_t>& primes);
// The torus elements behind rational_distinct_family, in the same order.
std::vector<aut::TorusElement> rational_distinct_torus(const std::vector<std::uint32_t>& primes);

} // namespace albert::cls
