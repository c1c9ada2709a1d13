#pragma once

// Kac-coordinate combinatorics for affine F4: enumerate the non-negative
// solutions of the affine weight equation for a given element order, read the
// centralizer subdiagram off the zero coordinates, recognize its Dynkin type,
// and cross-check the resulting group dimensions against the derivation-based
// centralizer dimensions of the realized involutions.

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "albert/field.hpp"

namespace albert::kac {

// Affine F4: path alpha0 - alpha1 - alpha2 => alpha3 - alpha4 with marks
// (1, 2, 3, 4, 2); alpha0..alpha2 long, alpha3..alpha4 short.
struct AffineF4Diagram {
    static constexpr std::array<unsigned, 5> marks = {1, 2, 3, 4, 2};
    static constexpr std::array<bool, 5> is_short = {false, false, false, true, true};
    // Path edges (i, i+1); the (2,3) edge is the double edge.
    static bool adjacent(std::size_t a, std::size_t b) {
        return (a < b ? b - a : a - b) == 1;
    }
    static bool double_edge(std::size_t a, std::size_t b) {
        return (a == 2 && b == 3) || (a == 3 && b == 2);
    }
};

struct KacSolution {
    std::array<unsigned, 5> rho;
    unsigned order;

    bool operator==(const KacSolution& o) const { return rho == o.rho && order == o.order; }
};

// All solutions of rho0 + 2 rho1 + 3 rho2 + 4 rho3 + 2 rho4 = kappa with
// gcd(rho, kappa) = 1 (exact order kappa), in descending lexicographic order.
std::vector<KacSolution> enumerate(unsigned kappa);

struct DynkinComponent {
    char family; // 'A', 'B', 'C', 'F'
    unsigned rank;

    std::string name() const;
    std::size_t root_count() const;
    std::size_t group_dimension() const; // roots + rank
    bool operator==(const DynkinComponent& o) const {
        return family == o.family && rank == o.rank;
    }
};

struct DynkinType {
    std::vector<DynkinComponent> components; // canonical order (family, rank)

    std::string name() const; // e.g. "A1xC3", "B4", "F4", "1" when empty
    std::size_t root_count() const;
};

// Induced subdiagram on the zero coordinates of s, split into components and
// recognized by edge pattern and root lengths.
DynkinType centralizer_subdiagram(const KacSolution& s);

// Dimension of the centralizer group: ambient torus rank 4 plus the roots of
// the subdiagram.
std::size_t centralizer_group_dimension(const KacSolution& s);

struct CrossCheckEntry {
    KacSolution solution;
    std::string type;
    std::size_t kac_dimension;        // 4 + roots of the subdiagram
    std::size_t involution_dimension; // derivation-centralizer of the realized involution
};

struct CrossCheckReport {
    std::vector<CrossCheckEntry> entries; // order-2 solutions vs {TypeI, TypeII}
    bool consistent;
};

// Matches the two order-2 Kac solutions against the two involution kinds over
// an algebraically closed model field: A1xC3 <-> TypeI (24), B4 <-> TypeII (36).
CrossCheckReport cross_check_with_classifier(const FieldSpec& k);

} // namespace albert::kac
