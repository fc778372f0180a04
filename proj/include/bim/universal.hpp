#pragma once

#include <string>
#include <vector>

#include "bim/bimodule.hpp"
#include "bim/matrix.hpp"

namespace bim {

/// Parameters (delta, a, b, c) of the Verma-type module M_delta(a, b, c).
struct VermaParams {
    Rational delta, a, b, c;
};

/// First N basis vectors m_0..m_{N-1} of M_delta(a, b, c) and the truncated actions.
///
/// X m_i = theta_i m_i + m_{i+1}; Y m_i = theta*_i m_i + varphi_i m_{i-1}. The last
/// column of X drops the m_N component, so the defining relations are exact only
/// on the columns 0..valid_columns-1 = 0..N-3.
struct TruncatedVerma {
    VermaParams params;
    std::size_t N = 0;
    MatrixQ X;
    MatrixQ Y;
    Rational kappa;
    Rational lambda;
    Rational mu;
    std::size_t valid_columns = 0;

    SequenceTable sequences() const { return {params.delta, params.a, params.b, params.c}; }
};

TruncatedVerma build_verma(const VermaParams& p, std::size_t N);

/// Residuals of the two cubic presentation relations (Y^2X + 2YXY + XY^2 - X - 2 kappa Y - lambda
/// and the X <-> Y, lambda -> mu counterpart); zero on every column below valid_columns.
std::pair<MatrixQ, MatrixQ> relation_residuals(const TruncatedVerma& m);
bool relations_hold_on_interior(const TruncatedVerma& m);

/// prod_{h=i}^{j} (X - theta_h) m_i; throws std::logic_error unless it equals m_{j+1}.
VectorQ verma_vector_ladder(const TruncatedVerma& m, std::size_t i, std::size_t j);

/// Images of m_0..m_{count-1} under the unique homomorphism M_delta(a,b,c) -> V with m_0 -> v,
/// i.e. prod_{h<i} (X - theta_h) v. Throws PremiseViolated naming the first failing hypothesis.
std::vector<VectorQ> universal_map(const VermaParams& p, const BIModule& v, const VectorQ& seed,
                                   std::size_t count);
/// Same, with the default window of d + 5 images.
std::vector<VectorQ> universal_map(const EvenParams& p, const BIModule& v, const VectorQ& seed);

/// Checks every hypothesis of the universal property; throws PremiseViolated on the first failure.
void check_universal_premises(const VermaParams& p, const BIModule& v, const VectorQ& seed);

/// The homomorphism E_d(a,b,c) -> V sending v_0 to the seed, as a (dim V) x (d+1) matrix whose
/// columns are prod_{h<i} (X - theta_h) seed. Both intertwining equations are verified.
MatrixQ descend_to_E(const EvenParams& p, const BIModule& v, const VectorQ& seed);

struct QuotientReport {
    bool tail_x_invariant = false;
    bool tail_y_invariant = false;
    bool quotient_matches_E = false;
    bool kappa_matches = false;
    bool passed() const { return tail_x_invariant && tail_y_invariant && quotient_matches_E && kappa_matches; }
};

/// Verifies span{m_{d+1}, ...} is a submodule of the truncation and M_d / N_d == E_d(a,b,c).
/// Throws std::invalid_argument when N < d + 3.
QuotientReport verma_quotient_check(const EvenParams& p, std::size_t N);

constexpr std::size_t default_truncation(long d) { return static_cast<std::size_t>(d) + 5; }

}  // namespace bim
