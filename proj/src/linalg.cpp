#include "bim/linalg.hpp"

#include "bim/errors.hpp"

namespace bim {

MatrixQ anticommutator(const MatrixQ& a, const MatrixQ& b) {
    if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
        throw DimensionMismatch("anticommutator: operands must be square of equal size");
    return a * b + b * a;
}

RrefResult rref(const MatrixQ& m) {
    RrefResult out{m, 0, {}};
    MatrixQ& a = out.form;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a(p, c).is_zero()) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
        Rational inv = Rational(1) / a(r, c);
        for (std::size_t j = c; j < cols; ++j)
            if (!a(r, j).is_zero()) a(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a(i, c).is_zero()) continue;
            Rational f = a(i, c);
            for (std::size_t j = c; j < cols; ++j)
                if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.rank = r;
    return out;
}

std::size_t rank(const MatrixQ& m) { return rref(m).rank; }

std::vector<VectorQ> kernel_basis(const MatrixQ& m) {
    RrefResult rr = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : rr.pivots) is_pivot[p] = true;
    std::vector<VectorQ> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        VectorQ v(m.cols());
        v[f] = Rational(1);
        for (std::size_t i = 0; i < rr.rank; ++i) v[rr.pivots[i]] = -rr.form(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

Rational determinant(const MatrixQ& m) {
    if (!m.is_square()) throw DimensionMismatch("determinant of non-square matrix");
    MatrixQ a = m;
    const std::size_t n = a.rows();
    Rational det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c).is_zero()) ++p;
        if (p == n) return Rational(0);
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
            det = -det;
        }
        det *= a(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a(i, c).is_zero()) continue;
            Rational f = a(i, c) / a(c, c);
            for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
        }
    }
    return det;
}

std::optional<MatrixQ> inverse(const MatrixQ& m) {
    if (!m.is_square()) throw DimensionMismatch("inverse of non-square matrix");
    const std::size_t n = m.rows();
    MatrixQ aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = Rational(1);
    }
    RrefResult rr = rref(aug);
    if (rr.rank < n || (n > 0 && rr.pivots[n - 1] != n - 1)) return std::nullopt;
    return rr.form.block(0, n, n, n);
}

PolynomialQ char_poly(const MatrixQ& m) {
    if (!m.is_square()) throw DimensionMismatch("char_poly of non-square matrix");
    const std::size_t n = m.rows();
    // c[k] is the coefficient of x^k; M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k.
    std::vector<Rational> c(n + 1);
    c[n] = Rational(1);
    MatrixQ mk(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        mk = m * mk;
        for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
        c[n - k] = -(m * mk).trace() / Rational(static_cast<long>(k));
    }
    return PolynomialQ(std::move(c));
}

PolynomialQ krylov_annihilator(const MatrixQ& m, const VectorQ& v) {
    if (!m.is_square() || m.cols() != v.size()) throw DimensionMismatch("krylov_annihilator");
    const std::size_t n = m.rows();
    // Each stored vector b_j carries the polynomial p_j with b_j = p_j(M) v.
    std::vector<VectorQ> basis;
    std::vector<std::size_t> pivots;
    std::vector<PolynomialQ> polys;
    VectorQ w = v;
    PolynomialQ xk = PolynomialQ::constant(Rational(1));
    for (std::size_t k = 0; k <= n; ++k) {
        VectorQ r = w;
        PolynomialQ pr = xk;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            const Rational& coef = r[pivots[j]];
            if (coef.is_zero()) continue;
            Rational f = coef;
            for (std::size_t i = 0; i < n; ++i)
                if (!basis[j][i].is_zero()) r[i] -= f * basis[j][i];
            pr -= f * polys[j];
        }
        if (is_zero(r)) return pr.monic();
        std::size_t p = 0;
        while (r[p].is_zero()) ++p;
        Rational inv = Rational(1) / r[p];
        for (auto& x : r) x *= inv;
        basis.push_back(std::move(r));
        pivots.push_back(p);
        polys.push_back(inv * pr);
        w = m * w;
        xk = xk * PolynomialQ::x();
    }
    throw std::logic_error("krylov_annihilator: no dependency within n+1 steps");
}

PolynomialQ min_poly(const MatrixQ& m) {
    if (!m.is_square()) throw DimensionMismatch("min_poly of non-square matrix");
    PolynomialQ acc = PolynomialQ::constant(Rational(1));
    for (std::size_t i = 0; i < m.rows(); ++i) acc = lcm(acc, krylov_annihilator(m, unit_vector(m.rows(), i)));
    return acc;
}

MatrixQ evaluate(const PolynomialQ& p, const MatrixQ& m) {
    if (!m.is_square()) throw DimensionMismatch("evaluate: non-square matrix");
    const std::size_t n = m.rows();
    MatrixQ acc(n, n);
    const auto& c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * m;
        for (std::size_t i = 0; i < n; ++i) acc(i, i) += *it;
    }
    return acc;
}

VectorQ EchelonBasis::reduce(VectorQ v) const {
    if (v.size() != n_) throw DimensionMismatch("EchelonBasis: vector length");
    for (std::size_t j = 0; j < vecs_.size(); ++j) {
        if (v[pivots_[j]].is_zero()) continue;
        Rational f = v[pivots_[j]];
        for (std::size_t i = 0; i < n_; ++i)
            if (!vecs_[j][i].is_zero()) v[i] -= f * vecs_[j][i];
    }
    return v;
}

bool EchelonBasis::insert(const VectorQ& v) {
    VectorQ r = reduce(v);
    std::size_t p = 0;
    while (p < n_ && r[p].is_zero()) ++p;
    if (p == n_) return false;
    Rational inv = Rational(1) / r[p];
    for (auto& x : r) x *= inv;
    vecs_.push_back(std::move(r));
    pivots_.push_back(p);
    return true;
}

std::vector<VectorQ> EchelonBasis::canonical_basis() const {
    if (vecs_.empty()) return {};
    RrefResult rr = rref(MatrixQ::from_rows(n_, vecs_));
    std::vector<VectorQ> out;
    for (std::size_t i = 0; i < rr.rank; ++i) out.push_back(rr.form.row(i));
    return out;
}

std::vector<VectorQ> spin(const std::vector<VectorQ>& seeds, const std::vector<MatrixQ>& operators) {
    if (seeds.empty()) return {};
    const std::size_t n = seeds.front().size();
    for (const auto& op : operators)
        if (op.rows() != n || op.cols() != n) throw DimensionMismatch("spin: operator size");
    EchelonBasis basis(n);
    std::vector<VectorQ> queue;
    for (const auto& s : seeds) {
        if (s.size() != n) throw DimensionMismatch("spin: seed length");
        if (basis.insert(s)) queue.push_back(s);
    }
    for (std::size_t q = 0; q < queue.size() && basis.size() < n; ++q) {
        for (const auto& op : operators) {
            VectorQ img = op * queue[q];
            if (basis.insert(img)) queue.push_back(std::move(img));
        }
    }
    return basis.canonical_basis();
}

bool is_invariant(const std::vector<VectorQ>& basis, const std::vector<MatrixQ>& operators) {
    if (basis.empty()) return true;
    EchelonBasis eb(basis.front().size());
    for (const auto& b : basis) eb.insert(b);
    for (const auto& op : operators)
        for (const auto& b : basis)
            if (!eb.contains(op * b)) return false;
    return true;
}

std::vector<VectorQ> annihilator(const std::vector<VectorQ>& vectors, std::size_t ambient) {
    if (vectors.empty()) {
        std::vector<VectorQ> all;
        for (std::size_t i = 0; i < ambient; ++i) all.push_back(unit_vector(ambient, i));
        return all;
    }
    return kernel_basis(MatrixQ::from_rows(ambient, vectors));
}

}  // namespace bim
