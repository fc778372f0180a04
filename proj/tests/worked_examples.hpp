#pragma once

// Displayed data of the two worked examples: the Z matrices and the factored
// minimal polynomials of X, Y, Z, transcribed entry by entry.

#include "bim/matrix.hpp"
#include "bim/polynomial.hpp"

namespace worked {

using bim::MatrixQ;
using bim::PolynomialQ;
using bim::Rational;

inline MatrixQ Z_of_E() {
    return MatrixQ{{Rational(-3, 2), -1, 0, 0},
                   {-1, Rational(1, 2), 4, 0},
                   {0, 1, Rational(-3, 2), 3},
                   {0, 0, -1, Rational(1, 2)}};
}

inline MatrixQ Z_of_O() {
    return MatrixQ{{Rational(3, 2), -4, 0, 0, 0},
                   {-1, Rational(-5, 2), -2, 0, 0},
                   {0, 1, Rational(3, 2), -6, 0},
                   {0, 0, -1, Rational(-5, 2), -12},
                   {0, 0, 0, 1, Rational(3, 2)}};
}

struct MinPolys {
    PolynomialQ X, Y, Z;
};

inline MinPolys min_polys_of_E() {
    const Rational h(1, 2);
    return {PolynomialQ::from_roots({Rational(3, 2), -h, -h, Rational(-5, 2)}),
            PolynomialQ::from_roots({h, h, Rational(-3, 2), Rational(-3, 2)}),
            PolynomialQ::from_roots({Rational(3, 2), -h, -h, Rational(-5, 2)})};
}

inline MinPolys min_polys_of_O() {
    const Rational h(1, 2);
    return {PolynomialQ::from_roots({Rational(7, 2), Rational(3, 2), -h, -h, Rational(-5, 2)}),
            PolynomialQ::from_roots({Rational(5, 2), h, h, Rational(-3, 2), Rational(-3, 2)}),
            PolynomialQ::from_roots({Rational(3, 2), Rational(3, 2), -h, -h, Rational(-5, 2)})};
}

}  // namespace worked
