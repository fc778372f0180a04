#include <doctest.h>

#include <random>

#include "bim/errors.hpp"
#include "bim/linalg.hpp"
#include "oracles.hpp"

using namespace bim;

namespace {

bool is_rref(const MatrixQ& m) {
    long last = -1;
    bool zero_seen = false;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::size_t c = 0;
        while (c < m.cols() && m(r, c).is_zero()) ++c;
        if (c == m.cols()) {
            zero_seen = true;
            continue;
        }
        if (zero_seen || static_cast<long>(c) <= last || m(r, c) != Rational(1)) return false;
        for (std::size_t o = 0; o < m.rows(); ++o)
            if (o != r && !m(o, c).is_zero()) return false;
        last = static_cast<long>(c);
    }
    return true;
}

}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("anticommutator") {
    MatrixQ a{{1, 2}, {0, 1}}, b{{0, 1}, {1, 0}};
    CHECK(anticommutator(a, b) == a * b + b * a);
    CHECK_THROWS_AS(anticommutator(a, MatrixQ::identity(3)), DimensionMismatch);
}

TEST_CASE("rref is reduced echelon, rank matches the transpose, kernel is exact") {
    std::mt19937 rng(17);
    for (int t = 0; t < 80; ++t) {
        std::uniform_int_distribution<std::size_t> dim(1, 6);
        std::size_t r = dim(rng), c = dim(rng);
        MatrixQ m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                if (rng() % 3) m(i, j) = oracle::random_rational(rng);
        // Force some dependence.
        if (r > 2)
            for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) - Rational(2) * m(1, j);
        RrefResult res = rref(m);
        CHECK(is_rref(res.form));
        CHECK(res.rank == rank(m.transpose()));
        std::vector<VectorQ> rows;
        for (std::size_t i = 0; i < r; ++i) rows.push_back(m.row(i));
        CHECK(res.rank == oracle::span_dim(rows));
        auto k = kernel_basis(m);
        CHECK(k.size() == c - res.rank);
        for (const auto& v : k) CHECK(is_zero(m * v));
        if (!k.empty()) CHECK(oracle::span_dim(k) == k.size());
    }
}

TEST_CASE("determinant matches the permutation expansion") {
    std::mt19937 rng(19);
    for (int t = 0; t < 60; ++t) {
        std::size_t n = 1 + t % 6;
        MatrixQ m = oracle::random_matrix(rng, n);
        CHECK(determinant(m) == oracle::leibniz_det(m));
        auto inv = inverse(m);
        CHECK(inv.has_value() == !determinant(m).is_zero());
        if (inv) CHECK(m * *inv == MatrixQ::identity(n));
    }
}

TEST_CASE("characteristic polynomial matches cofactor expansion of det(xI - M)") {
    std::mt19937 rng(23);
    for (int t = 0; t < 40; ++t) {
        std::size_t n = 1 + t % 6;
        MatrixQ m = oracle::random_matrix(rng, n);
        PolynomialQ cp = char_poly(m);
        CHECK(cp == oracle::cofactor_char_poly(m));
        CHECK(cp.is_monic());
        // Cayley-Hamilton.
        CHECK(oracle::horner(cp, m).is_zero());
    }
}

TEST_CASE("minimal polynomial of conjugated Jordan forms") {
    std::mt19937 rng(29);
    for (int t = 0; t < 60; ++t) {
        std::size_t n = 1 + t % 8;
        auto blocks = oracle::random_blocks(rng, n);
        auto [p, pinv] = oracle::random_unimodular(rng, n);
        REQUIRE(p * pinv == MatrixQ::identity(n));
        MatrixQ m = p * oracle::jordan(blocks) * pinv;
        CHECK(min_poly(m) == oracle::jordan_min_poly(blocks));
        CHECK(char_poly(m) == oracle::jordan_char_poly(blocks));
        CHECK(evaluate(min_poly(m), m).is_zero());
    }
}

TEST_CASE("minimal polynomial divides the characteristic polynomial and kills the matrix") {
    std::mt19937 rng(31);
    for (int t = 0; t < 40; ++t) {
        MatrixQ m = oracle::random_matrix(rng, 1 + t % 7, 0.4);
        PolynomialQ mp = min_poly(m);
        CHECK(divides(mp, char_poly(m)));
        CHECK(oracle::horner(mp, m).is_zero());
        // No proper monic divisor of lower degree built from dropping one root kills M.
        auto rep = rational_roots(mp);
        for (const auto& r : rep.roots) {
            auto [q, rem] = divmod(mp, PolynomialQ::from_roots({r}));
            CHECK_FALSE(oracle::horner(q, m).is_zero());
        }
    }
}

TEST_CASE("scalar and zero matrices") {
    CHECK(min_poly(MatrixQ::scalar(4, Rational(3, 2))) == PolynomialQ::from_roots({Rational(3, 2)}));
    CHECK(min_poly(MatrixQ(3, 3)) == PolynomialQ::x());
}

TEST_CASE("spin closes under the operators and contains the seeds") {
    std::mt19937 rng(37);
    for (int t = 0; t < 40; ++t) {
        std::size_t n = 2 + t % 6;
        // Block upper triangular pair: span of the first k vectors is invariant.
        std::size_t k = 1 + t % (n - 1);
        MatrixQ a = oracle::random_matrix(rng, n), b = oracle::random_matrix(rng, n);
        for (std::size_t r = k; r < n; ++r)
            for (std::size_t c = 0; c < k; ++c) a(r, c) = b(r, c) = Rational(0);
        VectorQ seed = unit_vector(n, 0);
        auto s = spin({seed}, {a, b});
        CHECK(is_invariant(s, {a, b}));
        CHECK(s.size() <= k);
        CHECK(oracle::span_dim({s.begin(), s.end()}) == s.size());
        auto with_seed = s;
        with_seed.push_back(seed);
        CHECK(oracle::span_dim(with_seed) == s.size());
    }
}

TEST_CASE("spin of nothing is empty; spin of the full space is the identity basis") {
    MatrixQ a{{0, 1}, {1, 0}};
    CHECK(spin({}, {a}).empty());
    auto s = spin({unit_vector(2, 0)}, {a});
    CHECK(s == std::vector<VectorQ>{unit_vector(2, 0), unit_vector(2, 1)});
}

TEST_CASE("annihilator is the orthogonal complement") {
    std::mt19937 rng(41);
    for (int t = 0; t < 40; ++t) {
        std::size_t n = 2 + t % 6;
        std::vector<VectorQ> vs;
        for (std::size_t i = 0; i < 1 + t % n; ++i) {
            VectorQ v(n);
            for (auto& x : v) x = oracle::random_rational(rng);
            vs.push_back(v);
        }
        auto ann = annihilator(vs, n);
        CHECK(ann.size() + oracle::span_dim(vs) == n);
        for (const auto& x : ann)
            for (const auto& u : vs) {
                Rational dot(0);
                for (std::size_t i = 0; i < n; ++i) dot += u[i] * x[i];
                CHECK(dot.is_zero());
            }
    }
}

TEST_CASE("transpose-invariant complement gives a primal invariant subspace") {
    // If S is invariant under A^T then its annihilator is invariant under A.
    MatrixQ a{{1, 1, 0}, {0, 1, 1}, {0, 0, 2}};
    auto s = spin({unit_vector(3, 2)}, {a.transpose()});
    REQUIRE(s.size() < 3);
    auto w = annihilator(s, 3);
    CHECK(is_invariant(w, {a}));
}

TEST_CASE("echelon basis membership") {
    EchelonBasis eb(3);
    CHECK(eb.insert({Rational(1), Rational(2), Rational(0)}));
    CHECK(eb.insert({Rational(0), Rational(1), Rational(1)}));
    CHECK_FALSE(eb.insert({Rational(1), Rational(3), Rational(1)}));
    CHECK(eb.contains({Rational(2), Rational(5), Rational(1)}));
    CHECK_FALSE(eb.contains(unit_vector(3, 2)));
    CHECK(eb.size() == 2);
}

}
