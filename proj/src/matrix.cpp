#include "bim/matrix.hpp"

#include <sstream>

#include "bim/errors.hpp"

namespace bim {

MatrixQ::MatrixQ(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows_ * cols_) throw DimensionMismatch("MatrixQ: entry count != rows*cols");
}

MatrixQ::MatrixQ(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    a_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DimensionMismatch("MatrixQ: ragged row list");
        a_.insert(a_.end(), r.begin(), r.end());
    }
}

MatrixQ MatrixQ::identity(std::size_t n) { return scalar(n, Rational(1)); }

MatrixQ MatrixQ::scalar(std::size_t n, const Rational& s) {
    MatrixQ m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = s;
    return m;
}

MatrixQ MatrixQ::from_columns(std::size_t rows, const std::vector<VectorQ>& cols) {
    MatrixQ m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows) throw DimensionMismatch("from_columns: column length");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
    }
    return m;
}

MatrixQ MatrixQ::from_rows(std::size_t cols, const std::vector<VectorQ>& rows) {
    MatrixQ m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw DimensionMismatch("from_rows: row length");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

VectorQ MatrixQ::row(std::size_t r) const {
    return VectorQ(a_.begin() + static_cast<long>(r * cols_), a_.begin() + static_cast<long>((r + 1) * cols_));
}

VectorQ MatrixQ::column(std::size_t c) const {
    VectorQ v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

MatrixQ MatrixQ::transpose() const {
    MatrixQ t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

MatrixQ MatrixQ::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionMismatch("block out of range");
    MatrixQ b(nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
    return b;
}

Rational MatrixQ::trace() const {
    if (!is_square()) throw DimensionMismatch("trace of non-square matrix");
    Rational t(0);
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

bool MatrixQ::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

bool MatrixQ::is_scalar(Rational* s) const {
    if (!is_square()) return false;
    Rational d = rows_ == 0 ? Rational(0) : (*this)(0, 0);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) {
            const Rational& x = (*this)(r, c);
            if (r == c ? x != d : !x.is_zero()) return false;
        }
    if (s) *s = d;
    return true;
}

MatrixQ& MatrixQ::operator+=(const MatrixQ& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix addition");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

MatrixQ& MatrixQ::operator-=(const MatrixQ& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix subtraction");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

MatrixQ& MatrixQ::operator*=(const Rational& s) {
    for (auto& x : a_) x *= s;
    return *this;
}

MatrixQ operator*(const MatrixQ& a, const MatrixQ& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product");
    MatrixQ p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero()) p(i, j) += x * b(k, j);
        }
    return p;
}

VectorQ operator*(const MatrixQ& a, const VectorQ& v) {
    if (a.cols_ != v.size()) throw DimensionMismatch("matrix-vector product");
    VectorQ out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k)
            if (!a(i, k).is_zero() && !v[k].is_zero()) out[i] += a(i, k) * v[k];
    return out;
}

std::string MatrixQ::to_string() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < rows_; ++r) {
        os << "[";
        for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c);
        os << "]\n";
    }
    return os.str();
}

MatrixQ shift(const MatrixQ& a, const Rational& s) {
    if (!a.is_square()) throw DimensionMismatch("shift of non-square matrix");
    MatrixQ m = a;
    for (std::size_t i = 0; i < a.rows(); ++i) m(i, i) -= s;
    return m;
}

VectorQ unit_vector(std::size_t n, std::size_t i) {
    VectorQ v(n);
    v.at(i) = Rational(1);
    return v;
}

bool is_zero(const VectorQ& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

VectorQ operator-(const VectorQ& a, const VectorQ& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector subtraction");
    VectorQ out(a);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
    return out;
}

VectorQ operator*(const Rational& s, const VectorQ& v) {
    VectorQ out(v);
    for (auto& x : out) x *= s;
    return out;
}

}  // namespace bim
