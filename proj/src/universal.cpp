#include "bim/universal.hpp"

#include <stdexcept>

#include "bim/errors.hpp"
#include "bim/linalg.hpp"

namespace bim {

TruncatedVerma build_verma(const VermaParams& p, std::size_t N) {
    if (N < 2) throw std::invalid_argument("build_verma: truncation length must be >= 2");
    TruncatedVerma m;
    m.params = p;
    m.N = N;
    SequenceTable s = m.sequences();
    auto [x, y] = bidiagonal_pair(s, N);
    m.X = std::move(x);
    m.Y = std::move(y);
    m.kappa = s.omega();
    m.lambda = s.omega_star();
    m.mu = s.omega_diamond();
    m.valid_columns = N - 2;
    return m;
}

std::pair<MatrixQ, MatrixQ> relation_residuals(const TruncatedVerma& m) {
    const MatrixQ& X = m.X;
    const MatrixQ& Y = m.Y;
    const MatrixQ I = MatrixQ::identity(m.N);
    const Rational two(2);
    MatrixQ yyx = Y * Y * X + two * (Y * X * Y) + X * Y * Y - X - two * m.kappa * Y - m.lambda * I;
    MatrixQ xxy = X * X * Y + two * (X * Y * X) + Y * X * X - Y - two * m.kappa * X - m.mu * I;
    return {std::move(yyx), std::move(xxy)};
}

bool relations_hold_on_interior(const TruncatedVerma& m) {
    auto [r1, r2] = relation_residuals(m);
    for (std::size_t c = 0; c < m.valid_columns; ++c)
        for (std::size_t r = 0; r < m.N; ++r)
            if (!r1(r, c).is_zero() || !r2(r, c).is_zero()) return false;
    return true;
}

VectorQ verma_vector_ladder(const TruncatedVerma& m, std::size_t i, std::size_t j) {
    if (i > j || j + 2 > m.N) throw std::out_of_range("verma_vector_ladder: need 0 <= i <= j <= N-2");
    SequenceTable s = m.sequences();
    VectorQ v = unit_vector(m.N, i);
    for (std::size_t h = i; h <= j; ++h) v = shift(m.X, s.theta(static_cast<long>(h))) * v;
    if (v != unit_vector(m.N, j + 1)) throw std::logic_error("verma_vector_ladder: ladder identity fails");
    return v;
}

void check_universal_premises(const VermaParams& p, const BIModule& v, const VectorQ& seed) {
    if (seed.size() != v.dim) throw DimensionMismatch("universal_map: seed length != module dimension");
    SequenceTable s(p.delta, p.a, p.b, p.c);
    VectorQ y_seed = v.Y * seed;
    if (y_seed != s.theta_star(0) * seed)
        throw PremiseViolated("eigenvector", "Y v != theta*_0 v");
    VectorQ lhs = shift(v.Y, s.theta_star(1)) * (shift(v.X, s.theta(0)) * seed);
    if (lhs != s.phi_upper(1) * seed)
        throw PremiseViolated("ladder", "(Y - theta*_1)(X - theta_0) v != varphi_1 v");
    if (v.kappa != s.omega()) throw PremiseViolated("kappa", "kappa does not act as omega");
    RelationReport rep = check_relations(v);
    if (!rep.lambda || *rep.lambda != s.omega_star())
        throw PremiseViolated("lambda", "lambda does not act as omega*");
    if (!rep.mu || *rep.mu != s.omega_diamond())
        throw PremiseViolated("mu", "mu does not act as omega-diamond");
}

std::vector<VectorQ> universal_map(const VermaParams& p, const BIModule& v, const VectorQ& seed,
                                   std::size_t count) {
    check_universal_premises(p, v, seed);
    SequenceTable s(p.delta, p.a, p.b, p.c);
    std::vector<VectorQ> images;
    images.reserve(count);
    VectorQ cur = seed;
    for (std::size_t i = 0; i < count; ++i) {
        images.push_back(cur);
        cur = shift(v.X, s.theta(static_cast<long>(i))) * cur;
    }
    return images;
}

std::vector<VectorQ> universal_map(const EvenParams& p, const BIModule& v, const VectorQ& seed) {
    return universal_map(VermaParams{Rational(p.d), p.a, p.b, p.c}, v, seed, default_truncation(p.d));
}

MatrixQ descend_to_E(const EvenParams& p, const BIModule& v, const VectorQ& seed) {
    const std::size_t n = static_cast<std::size_t>(p.d) + 1;
    std::vector<VectorQ> images =
        universal_map(VermaParams{Rational(p.d), p.a, p.b, p.c}, v, seed, n + 1);
    if (!is_zero(images[n])) throw AnnihilatorFails("prod_{i=0}^{d} (X - theta_i) v != 0");
    images.pop_back();
    MatrixQ T = MatrixQ::from_columns(v.dim, images);
    BIModule e = build_E(p);
    if (T * e.X != v.X * T || T * e.Y != v.Y * T)
        throw std::logic_error("descend_to_E: intertwining equations fail");
    return T;
}

QuotientReport verma_quotient_check(const EvenParams& p, std::size_t N) {
    const std::size_t n = static_cast<std::size_t>(p.d) + 1;
    if (N < n + 2) throw std::invalid_argument("verma_quotient_check: truncation too short (need N >= d+3)");
    TruncatedVerma m = build_verma(VermaParams{Rational(p.d), p.a, p.b, p.c}, N);
    QuotientReport rep;

    std::vector<VectorQ> tail;
    for (std::size_t i = n; i < N; ++i) tail.push_back(unit_vector(N, i));
    rep.tail_x_invariant = is_invariant(tail, {m.X});
    rep.tail_y_invariant = is_invariant(tail, {m.Y});

    // Modulo the tail, the action on m_0..m_d is the leading (d+1) x (d+1) block.
    BIModule e = build_E(p);
    rep.quotient_matches_E = m.X.block(0, 0, n, n) == e.X && m.Y.block(0, 0, n, n) == e.Y;
    rep.kappa_matches = m.kappa == e.kappa;
    return rep;
}

}  // namespace bim
