#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "bim/rational.hpp"

namespace bim {

/// Univariate polynomial over Q, coefficients stored lowest degree first.
/// The zero polynomial has no coefficients; otherwise the last one is nonzero.
class PolynomialQ {
public:
    PolynomialQ() = default;
    explicit PolynomialQ(std::vector<Rational> coeffs);
    PolynomialQ(std::initializer_list<Rational> coeffs)
        : PolynomialQ(std::vector<Rational>(coeffs)) {}

    static PolynomialQ constant(const Rational& c) { return PolynomialQ({c}); }
    static PolynomialQ x() { return PolynomialQ({Rational(0), Rational(1)}); }
    /// prod (x - r) over the given roots (with repetition).
    static PolynomialQ from_roots(const std::vector<Rational>& roots);

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return c_; }
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == Rational(1); }

    PolynomialQ monic() const;
    PolynomialQ derivative() const;
    Rational operator()(const Rational& x) const;

    PolynomialQ& operator+=(const PolynomialQ& o);
    PolynomialQ& operator-=(const PolynomialQ& o);
    friend PolynomialQ operator+(PolynomialQ a, const PolynomialQ& b) { return a += b; }
    friend PolynomialQ operator-(PolynomialQ a, const PolynomialQ& b) { return a -= b; }
    friend PolynomialQ operator*(const PolynomialQ& a, const PolynomialQ& b);
    friend PolynomialQ operator*(const Rational& s, const PolynomialQ& p);
    friend bool operator==(const PolynomialQ&, const PolynomialQ&) = default;

    /// Expanded form, e.g. "x^2 - 1/4".
    std::string to_string() const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// Quotient and remainder; throws std::domain_error when dividing by zero.
std::pair<PolynomialQ, PolynomialQ> divmod(const PolynomialQ& a, const PolynomialQ& b);

/// Monic gcd; gcd(0, 0) = 0.
PolynomialQ gcd(PolynomialQ a, PolynomialQ b);

/// Monic lcm; zero if either argument is zero.
PolynomialQ lcm(const PolynomialQ& a, const PolynomialQ& b);

bool divides(const PolynomialQ& d, const PolynomialQ& p);

/// True iff gcd(p, p') is constant. Throws std::invalid_argument for p = 0.
bool is_squarefree(const PolynomialQ& p);

struct RootReport {
    /// Rational roots with multiplicity, sorted in decreasing order.
    std::vector<Rational> roots;
    /// True when the roots account for the full degree.
    bool split = false;
};

/// All rational roots with multiplicity. Throws std::invalid_argument for p = 0.
RootReport rational_roots(const PolynomialQ& p);

/// "(x - 3/2)^2*(x + 1/2)" for split polynomials (scaled by the leading
/// coefficient when it is not 1); the expanded form otherwise.
std::string factored_string(const PolynomialQ& p);

}  // namespace bim
