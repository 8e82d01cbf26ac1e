#pragma once

#include "bigalg/multipoly.hpp"
#include "bigalg/qmatrix.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bigalg {

/// Dense matrix of MultiPoly entries sharing one variable set.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(VarSetPtr vars, std::size_t rows, std::size_t cols);

    static PolyMatrix identity(VarSetPtr vars, std::size_t n);
    /// Constant matrix m, optionally multiplied by a scalar polynomial.
    static PolyMatrix constant(VarSetPtr vars, const QMatrix& m);
    static PolyMatrix scalar(const MultiPoly& p, std::size_t n);

    const VarSetPtr& vars() const { return vars_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    MultiPoly& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const MultiPoly& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    const std::vector<MultiPoly>& entries() const { return data_; }

    PolyMatrix& operator+=(const PolyMatrix& o);
    PolyMatrix& operator-=(const PolyMatrix& o);
    PolyMatrix& operator*=(const Rational& c);
    friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) { return a += b; }
    friend PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b) { return a -= b; }
    friend PolyMatrix operator*(PolyMatrix a, const Rational& c) { return a *= c; }
    friend PolyMatrix operator*(const Rational& c, PolyMatrix a) { return a *= c; }
    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator*(const QMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator*(const PolyMatrix& a, const QMatrix& b);
    friend PolyMatrix operator*(const MultiPoly& p, const PolyMatrix& a);

    /// this += m * p for a constant matrix m and scalar polynomial p.
    void add_product(const QMatrix& m, const MultiPoly& p);

    QMatrix evaluate(std::span<const Rational> point) const;
    PolyMatrix substitute(std::span<const MultiPoly> images) const;
    PolyMatrix derivative(std::size_t var) const;

    /// Common weighted degree of all nonzero entries; nullopt if inhomogeneous or zero.
    std::optional<int> homogeneous_degree(std::span<const int> weights) const;
    bool is_zero() const;
    bool operator==(const PolyMatrix& o) const;
    /// First nonzero entry as (row, col), if any.
    std::optional<std::pair<std::size_t, std::size_t>> first_nonzero() const;

    std::string to_string() const;

private:
    VarSetPtr vars_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<MultiPoly> data_;
};

PolyMatrix commutator(const PolyMatrix& a, const PolyMatrix& b);

}  // namespace bigalg
