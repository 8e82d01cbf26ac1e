#pragma once

#include "bigalg/polymatrix.hpp"
#include "bigalg/qmatrix.hpp"
#include "bigalg/upoly.hpp"

#include <optional>
#include <vector>

namespace bigalg {

/// Incrementally built semi-echelon basis of a subspace of Q^dim.
/// With tracking enabled it can express members as combinations of the inserted vectors.
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t dim, bool track = false) : dim_(dim), track_(track) {}

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return rows_.size(); }
    /// Inserted vectors that turned out independent, in insertion order.
    const std::vector<QVector>& basis() const { return inserted_; }

    /// Returns true (and keeps v) iff v is independent of the current span.
    bool add(const QVector& v);
    bool contains(const QVector& v) const;
    QVector reduce(QVector v) const;
    /// Coordinates with respect to basis(); nullopt if v is outside the span. Needs tracking.
    std::optional<QVector> coordinates(const QVector& v) const;

private:
    std::size_t dim_;
    bool track_;
    std::vector<QVector> rows_;
    std::vector<std::size_t> pivots_;
    std::vector<QVector> combos_;  // rows_[i] = sum combos_[i][k] * inserted_[k]
    std::vector<QVector> inserted_;
};

/// Independent subset spanning the same space (greedy, order preserving).
std::vector<QVector> span_basis(const std::vector<QVector>& vectors, std::size_t dim);
bool subspace_contains(const std::vector<QVector>& big, const std::vector<QVector>& small, std::size_t dim);
bool subspace_equal(const std::vector<QVector>& a, const std::vector<QVector>& b, std::size_t dim);
std::vector<QVector> intersection(const std::vector<QVector>& a, const std::vector<QVector>& b, std::size_t dim);
std::vector<QVector> matrix_kernel_on(const QMatrix& m, const std::vector<QVector>& basis);

/// Limit as w -> 0 of the span of columns with entries in Q[w, 1/w] (variable index wvar).
/// Valuation echelon: normalize valuations, and while leading vectors are dependent replace
/// one column by the kernel combination, which raises its valuation.
std::vector<QVector> limit_of_span(const PolyMatrix& columns, std::size_t wvar);

struct JointBlock {
    std::vector<QVector> basis;
    /// Joint eigenvalue per input matrix; nullopt where the restricted spectrum is irrational.
    std::vector<std::optional<Rational>> eigenvalues;
    /// Squarefree characteristic factor carrying the irrational part, per input matrix.
    std::vector<UPoly> factors;
};

/// Splits Q^n into common generalized eigenspaces of commuting matrices. Rational joint
/// eigenvalues label blocks; irrational parts stay unsplit. Throws on non-commuting input.
std::vector<JointBlock> joint_invariant_decomposition(const std::vector<QMatrix>& ms);

/// True iff the characteristic polynomial of m is squarefree.
bool simple_spectrum_check(const QMatrix& m);

}  // namespace bigalg
