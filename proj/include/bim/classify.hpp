#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "bim/bimodule.hpp"
#include "bim/matrix.hpp"

namespace bim {

enum class IrrStatus { Irreducible, Reducible, Indeterminate };
enum class IrrMethod { Criterion, Oracle };

std::string to_string(IrrStatus s);
std::string to_string(IrrMethod m);

struct IrrVerdict {
    IrrStatus status = IrrStatus::Indeterminate;
    /// Basis of a proper nonzero invariant subspace; present iff status is Reducible.
    std::vector<VectorQ> witness;
    IrrMethod method = IrrMethod::Oracle;
    /// Which step of the decision produced the verdict.
    std::string note;
};

/// a+b+c, -a+b+c, a-b+c, a+b-c all avoid {(d-1)/2 - i : i = 0, 2, ..., d-1}.
/// The characteristic clause of the irreducibility criterion is vacuous over Q.
bool criterion_even(long d, const Rational& a, const Rational& b, const Rational& c);
/// a+b+c, a-b-c, -a+b-c, -a-b+c all avoid {(d+1)/2 - i : i = 2, 4, ..., d}.
bool criterion_odd(long d, const Rational& a, const Rational& b, const Rational& c);

/// Verdict from the parameter criterion, with an explicit witness when reducible.
IrrVerdict criterion_verdict(const EvenParams& p);
IrrVerdict criterion_verdict(const OddParams& p);

/// Budget for the Norton element search.
struct OracleOptions {
    /// t in (Y - lambda) + t (X - mu); t = 0 is covered by the single factors.
    std::vector<long> combination_coefficients{1, -1, 2, -2};
    /// Longest product of factors X - theta, Y - theta*.
    int max_factors = 3;
    std::size_t max_words = 5000;
};

/// Spin-based irreducibility decision over Q. Requires Y to split over Q
/// (throws NonSplitSpectrum otherwise). Reducible verdicts carry a verified witness.
IrrVerdict oracle_irreducible(const BIModule& v, const OracleOptions& opts = {});

enum class LMethod { Operator, Recurrence, Closed };

/// Lower-triangular (d+1) x (d+1) matrix with R S_i v_j = L_ij v_0.
MatrixQ L_matrix(const EvenParams& p, LMethod method);

/// X and Y of E_d(a,b,c) in the basis w_i = prod_{h<i} (X - theta_{d-h}) v_0.
std::pair<MatrixQ, MatrixQ> w_basis_matrices(const EvenParams& p);
/// The change-of-basis matrix with columns w_0..w_d.
MatrixQ w_basis(const EvenParams& p);

/// Basis of {T : T X_V = X_W T, T Y_V = Y_W T}; each T is (dim W) x (dim V).
std::vector<MatrixQ> intertwiner_space(const BIModule& v, const BIModule& w);

enum class IsoStatus { Isomorphic, NotIsomorphic, Indeterminate };
std::string to_string(IsoStatus s);

struct IsoResult {
    IsoStatus status = IsoStatus::Indeterminate;
    std::optional<MatrixQ> witness;  // invertible T with T X_V = X_W T, T Y_V = Y_W T
    std::string reason;
    bool isomorphic() const { return status == IsoStatus::Isomorphic; }
};

IsoResult are_isomorphic(const BIModule& v, const BIModule& w);

struct Invariants {
    Rational trace_X, trace_Y, kappa, lambda, mu;
    Rational kappa_plus_mu, lambda_plus_kappa, mu_plus_lambda;
    friend bool operator==(const Invariants&, const Invariants&) = default;
};

/// Throws NotAModule when the relations fail.
Invariants invariants(const BIModule& v);

enum class Family { Even, Odd };

struct ClassCoordinates {
    Family family = Family::Even;
    long d = 0;
    std::optional<TwistSign> twist;  // even family only
    /// Even family: nonnegative orbit representative. Odd family: exact (a, b, c).
    Rational a, b, c;
    friend bool operator==(const ClassCoordinates&, const ClassCoordinates&) = default;
};

struct Identification {
    ClassCoordinates coords;
    /// Invertible intertwiner from V to the reference module.
    MatrixQ witness;
    std::string method;  // "invariants", "eigenvalue-chain" or "traces"
};

/// Locates an irreducible module in the classification and proves it with an intertwiner.
Identification identify(const BIModule& v);

/// The reference module the coordinates name.
BIModule reference_module(const ClassCoordinates& c);

std::tuple<Rational, Rational, Rational> orbit_canonical(const Rational& a, const Rational& b,
                                                         const Rational& c);

struct OddTwistEntry {
    TwistSign twist;
    OddParams target;
    IsoResult result;
};

struct OddTwistReport {
    std::vector<OddTwistEntry> entries;
    bool passed() const;
};

/// O_d(a,b,c)^(1,-1) ~ O_d(a,-b,-c), ^(-1,1) ~ O_d(-a,b,-c), ^(-1,-1) ~ O_d(-a,-b,c).
OddTwistReport odd_twist_check(const OddParams& p);

}  // namespace bim
