#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "bim/matrix.hpp"
#include "bim/polynomial.hpp"
#include "bim/rational.hpp"

namespace bim {

/// Parameters of the even-dimensional family E_d(a, b, c): d odd, d >= 1.
struct EvenParams {
    long d = 1;
    Rational a, b, c;
    EvenParams() = default;
    EvenParams(long d, Rational a, Rational b, Rational c);
    friend bool operator==(const EvenParams&, const EvenParams&) = default;
};

/// Parameters of the odd-dimensional family O_d(a, b, c): d even, d >= 0.
struct OddParams {
    long d = 0;
    Rational a, b, c;
    OddParams() = default;
    OddParams(long d, Rational a, Rational b, Rational c);
    friend bool operator==(const OddParams&, const OddParams&) = default;
};

/// One of the four sign automorphisms (X, Y, Z) -> (eps X, eps' Y, eps eps' Z).
struct TwistSign {
    int eps = 1;
    int eps_prime = 1;
    TwistSign() = default;
    TwistSign(int e, int ep);
    bool is_identity() const { return eps == 1 && eps_prime == 1; }
    std::string to_string() const;
    static TwistSign parse(const std::string& text);
    friend bool operator==(const TwistSign&, const TwistSign&) = default;
    friend auto operator<=>(const TwistSign&, const TwistSign&) = default;
};

inline const std::vector<TwistSign>& all_twists() {
    static const std::vector<TwistSign> v{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
    return v;
}

/// Finite-dimensional module given by the matrices of X and Y and the scalar of kappa.
/// Z is never stored: it is always {X, Y} - kappa.
struct BIModule {
    std::size_t dim = 0;
    MatrixQ X;
    MatrixQ Y;
    Rational kappa;
    std::optional<Rational> lambda;
    std::optional<Rational> mu;
    /// Free-form provenance: family, d, a, b, c, twist, label.
    std::map<std::string, std::string> meta;

    BIModule() = default;
    BIModule(MatrixQ x, MatrixQ y, Rational kappa);

    friend bool operator==(const BIModule&, const BIModule&) = default;
};

/// Closed forms theta_i, theta*_i, phi_i (lower) and varphi_i (upper) for any integer i.
class SequenceTable {
public:
    enum class Family { Even, Odd };

    /// Even-family sequences with a general (possibly non-integer) delta.
    SequenceTable(Rational delta, Rational a, Rational b, Rational c);
    static SequenceTable even(const EvenParams& p);
    static SequenceTable odd(const OddParams& p);

    Family family() const { return family_; }
    const Rational& delta() const { return delta_; }

    Rational theta(long i) const;
    Rational theta_star(long i) const;
    /// Superdiagonal sequence of E_d(-a, b, c) read in the w-basis. Even family only.
    Rational phi_lower(long i) const;
    /// Superdiagonal of Y in the constructed basis.
    Rational phi_upper(long i) const;

    /// omega, omega*, omega-diamond: the scalars of kappa, lambda, mu (even family).
    Rational omega() const;
    Rational omega_star() const;
    Rational omega_diamond() const;

private:
    SequenceTable(Family f, Rational delta, Rational a, Rational b, Rational c);
    Family family_;
    Rational delta_, a_, b_, c_;
};

SequenceTable sequences(const EvenParams& p);
SequenceTable sequences(const OddParams& p);

/// Lower-bidiagonal X (diagonal theta, subdiagonal 1) and upper-bidiagonal Y
/// (diagonal theta*, superdiagonal phi_upper) of size n.
std::pair<MatrixQ, MatrixQ> bidiagonal_pair(const SequenceTable& s, std::size_t n);

BIModule build_E(const EvenParams& p);
BIModule build_O(const OddParams& p);
BIModule twist(const BIModule& v, const TwistSign& s);

/// {X, Y} - kappa I.
MatrixQ derive_Z(const BIModule& v);

struct RelationCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct RelationReport {
    std::vector<RelationCheck> checks;
    /// Scalars actually acting on the module; lambda/mu are empty when the
    /// corresponding element is not a scalar matrix.
    Rational kappa;
    std::optional<Rational> lambda;
    std::optional<Rational> mu;

    bool passed() const;
    /// Name of the first failing check, empty if none.
    std::string first_failure() const;
};

RelationReport check_relations(const BIModule& v);

/// (kappa, lambda, mu); throws NotAModule if the relations fail.
std::tuple<Rational, Rational, Rational> central_scalars(const BIModule& v);

struct GeneratorTriple {
    PolynomialQ X, Y, Z;
};
struct FlagTriple {
    bool X = false, Y = false, Z = false;
};

GeneratorTriple minimal_polynomials(const BIModule& v);
/// Per generator: true iff its minimal polynomial is squarefree (diagonalizable over the splitting field).
FlagTriple diagonalizability(const BIModule& v);

/// The four-dimensional module E with matrices entered verbatim.
BIModule example_E();
/// The five-dimensional module O with matrices entered verbatim.
BIModule example_O();

}  // namespace bim
