#pragma once

#include "bigalg/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace bigalg {

using QVector = std::vector<Rational>;

/// Dense exact rational matrix, row-major.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static QMatrix identity(std::size_t n);
    static QMatrix from_rows(const std::vector<QVector>& rows);
    static QMatrix from_columns(const std::vector<QVector>& cols, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    QVector row(std::size_t i) const;
    QVector column(std::size_t j) const;
    std::vector<QVector> columns() const;
    void set_column(std::size_t j, const QVector& v);

    QMatrix& operator+=(const QMatrix& o);
    QMatrix& operator-=(const QMatrix& o);
    QMatrix& operator*=(const Rational& c);
    friend QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
    friend QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }
    friend QMatrix operator*(QMatrix a, const Rational& c) { return a *= c; }
    friend QMatrix operator*(const Rational& c, QMatrix a) { return a *= c; }
    friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
    QMatrix operator-() const;

    QVector apply(const QVector& v) const;
    QMatrix transpose() const;
    Rational trace() const;
    bool is_zero() const;
    bool operator==(const QMatrix& o) const = default;

    /// Flattened row-major entries; used as a vector in End(V).
    const std::vector<Rational>& data() const { return data_; }

    std::string to_string() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

QMatrix commutator(const QMatrix& a, const QMatrix& b);
QMatrix power(const QMatrix& a, unsigned e);

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(QMatrix& m);
std::size_t rank(QMatrix m);
/// Basis of the null space, one vector per free column.
std::vector<QVector> kernel(const QMatrix& m);
std::optional<QMatrix> inverse(const QMatrix& m);
Rational determinant(QMatrix m);

/// Restriction of an invariant subspace: returns R with m * B = B * R, B given by columns.
/// Throws if the span of B is not m-invariant.
QMatrix restrict_to(const QMatrix& m, const std::vector<QVector>& basis);

bool is_zero(const QVector& v);

}  // namespace bigalg
