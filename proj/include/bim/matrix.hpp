#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "bim/rational.hpp"

namespace bim {

using VectorQ = std::vector<Rational>;

/// Dense row-major matrix over Q.
class MatrixQ {
public:
    MatrixQ() = default;
    MatrixQ(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    MatrixQ(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
    /// Row list; all rows must have equal length.
    MatrixQ(std::initializer_list<std::initializer_list<Rational>> rows);

    static MatrixQ identity(std::size_t n);
    static MatrixQ scalar(std::size_t n, const Rational& s);
    /// Matrix whose columns are the given vectors (all of length `rows`).
    static MatrixQ from_columns(std::size_t rows, const std::vector<VectorQ>& cols);
    static MatrixQ from_rows(std::size_t cols, const std::vector<VectorQ>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    const std::vector<Rational>& entries() const { return a_; }

    Rational& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    VectorQ row(std::size_t r) const;
    VectorQ column(std::size_t c) const;
    MatrixQ transpose() const;
    MatrixQ block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    Rational trace() const;
    bool is_zero() const;
    /// True when the matrix equals s * I for some s; the scalar is written to `s` if given.
    bool is_scalar(Rational* s = nullptr) const;

    MatrixQ& operator+=(const MatrixQ& o);
    MatrixQ& operator-=(const MatrixQ& o);
    MatrixQ& operator*=(const Rational& s);
    friend MatrixQ operator+(MatrixQ a, const MatrixQ& b) { return a += b; }
    friend MatrixQ operator-(MatrixQ a, const MatrixQ& b) { return a -= b; }
    friend MatrixQ operator*(MatrixQ a, const Rational& s) { return a *= s; }
    friend MatrixQ operator*(const Rational& s, MatrixQ a) { return a *= s; }
    friend MatrixQ operator*(const MatrixQ& a, const MatrixQ& b);
    friend VectorQ operator*(const MatrixQ& a, const VectorQ& v);
    friend bool operator==(const MatrixQ&, const MatrixQ&) = default;

    /// Multi-line text, one row per line, entries as "p/q".
    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> a_;
};

/// A - s*I for square A.
MatrixQ shift(const MatrixQ& a, const Rational& s);

VectorQ unit_vector(std::size_t n, std::size_t i);
bool is_zero(const VectorQ& v);
VectorQ operator-(const VectorQ& a, const VectorQ& b);
VectorQ operator*(const Rational& s, const VectorQ& v);

}  // namespace bim
