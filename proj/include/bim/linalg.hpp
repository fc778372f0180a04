#pragma once

#include <optional>
#include <vector>

#include "bim/matrix.hpp"
#include "bim/polynomial.hpp"

namespace bim {

/// AB + BA for square A, B of equal size.
MatrixQ anticommutator(const MatrixQ& a, const MatrixQ& b);

struct RrefResult {
    MatrixQ form;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form. Pivots are taken in the first column with a
/// nonzero entry, from the topmost eligible row, so the output is reproducible.
RrefResult rref(const MatrixQ& m);
std::size_t rank(const MatrixQ& m);

/// Basis of the right null space, one vector per free column (free entry = 1).
std::vector<VectorQ> kernel_basis(const MatrixQ& m);

Rational determinant(const MatrixQ& m);
std::optional<MatrixQ> inverse(const MatrixQ& m);

/// Monic characteristic polynomial det(xI - M) (Faddeev-LeVerrier over Q).
PolynomialQ char_poly(const MatrixQ& m);

/// Monic minimal polynomial: lcm of the Krylov annihilators of the standard basis vectors.
PolynomialQ min_poly(const MatrixQ& m);

/// Monic polynomial of least degree killing v under repeated application of M.
PolynomialQ krylov_annihilator(const MatrixQ& m, const VectorQ& v);

/// p(M) by Horner's rule.
MatrixQ evaluate(const PolynomialQ& p, const MatrixQ& m);

/// Incrementally built basis kept in insertion-ordered echelon form.
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t ambient) : n_(ambient) {}

    std::size_t ambient() const { return n_; }
    std::size_t size() const { return vecs_.size(); }
    /// Residual of v after reduction against the basis (zero iff v is in the span).
    VectorQ reduce(VectorQ v) const;
    bool contains(const VectorQ& v) const { return is_zero(reduce(v)); }
    /// Adds v if it enlarges the span; returns whether it did.
    bool insert(const VectorQ& v);
    /// Reduced row echelon basis of the span (deterministic).
    std::vector<VectorQ> canonical_basis() const;

private:
    std::size_t n_;
    std::vector<VectorQ> vecs_;
    std::vector<std::size_t> pivots_;
};

/// Smallest subspace containing the seeds and invariant under every operator.
std::vector<VectorQ> spin(const std::vector<VectorQ>& seeds, const std::vector<MatrixQ>& operators);

/// True when every operator maps span(basis) into itself.
bool is_invariant(const std::vector<VectorQ>& basis, const std::vector<MatrixQ>& operators);

/// Basis of {x : u . x = 0 for all u in vectors}.
std::vector<VectorQ> annihilator(const std::vector<VectorQ>& vectors, std::size_t ambient);

}  // namespace bim
