#pragma once

// Derivation algebra of the 27-dimensional Jordan algebra: the exact solution
// space of the Leibniz system D(xy) = D(x)y + x D(y), its dimension (52, the
// Lie algebra of a type-F4 group), and the eigenspace split of conjugation by
// an involutive automorphism (dimension of the fixed-point group).

#include <cstddef>
#include <utility>
#include <vector>

#include "albert/automorphism.hpp"
#include "albert/field.hpp"
#include "albert/hermitian.hpp"
#include "albert/linalg.hpp"
#include "albert/tits.hpp"

namespace albert::der {

// Structure constants of a commutative product on k^27.
struct MulTable {
    FieldSpec field;
    std::vector<Vec> products; // products[27*i + j] = coords of b_i * b_j

    static MulTable from(const tits::Algebra& alg);
    static MulTable from(const herm::Algebra& alg);

    const Vec& product(std::size_t i, std::size_t j) const { return products[27 * i + j]; }
    Vec mul(const Vec& x, const Vec& y) const;
    Mat left_mul_matrix(std::size_t i) const; // matrix of x -> b_i * x
    // D(b_i b_j) - D(b_i) b_j - b_i D(b_j), as a 27-vector.
    Vec leibniz_residual(const Mat& d, std::size_t i, std::size_t j) const;
};

struct DerivationSpace {
    FieldSpec field;
    MulTable table;
    std::vector<Mat> basis; // exact 27x27 derivation matrices

    std::size_t dimension() const { return basis.size(); }
    // Coordinates of a 27x27 matrix in this basis; empty optional when the
    // matrix is outside the span.
    std::optional<Vec> express(const Mat& m) const;

    // Internal: echelonized flattened basis (row-major 729-vectors) with
    // pivot columns, used by express().
    std::vector<Vec> echelon;
    std::vector<std::size_t> pivots;
};

// Exact derivation space; dimension 52 away from characteristics 2 and 3.
// Modular fields: Gaussian elimination on the Leibniz system with a verified
// early stop. Rational-backed fields: inner derivations [L_x, L_y] certified
// independent modulo a good prime, verified exactly, and matched against a
// modular upper bound. Results are cached (thread-safe, keyed by algebra).
const DerivationSpace& derivations(const tits::Algebra& alg);
const DerivationSpace& derivations(const herm::Algebra& alg);

struct CentralizerSplit {
    std::size_t fixed_dim; // { D : phi D phi^{-1} = D }
    std::size_t anti_dim;  // { D : phi D phi^{-1} = -D }
};

// Eigenspace dimensions of D -> phi D phi^{-1} on Der; phi must be an
// involutive automorphism in either presentation.
CentralizerSplit centralizer_split(const aut::AlgebraMap& phi);

// Dimension of the Lie algebra of the fixed-point group of an involution:
// 24 for TypeI, 36 for TypeII.
std::size_t centralizer_dimension(const aut::InvolutionDescriptor& desc);

} // namespace albert::der
