#include "bigalg/qmatrix.hpp"

#include "bigalg/linalg.hpp"

#include <sstream>

namespace bigalg {

QMatrix QMatrix::identity(std::size_t n)
{
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

QMatrix QMatrix::from_rows(const std::vector<QVector>& rows)
{
    if (rows.empty()) return {};
    QMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) throw Error("ragged rows");
        for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

QMatrix QMatrix::from_columns(const std::vector<QVector>& cols, std::size_t rows)
{
    QMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
    return m;
}

QVector QMatrix::row(std::size_t i) const
{
    return QVector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

QVector QMatrix::column(std::size_t j) const
{
    QVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

std::vector<QVector> QMatrix::columns() const
{
    std::vector<QVector> out;
    for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
    return out;
}

void QMatrix::set_column(std::size_t j, const QVector& v)
{
    if (v.size() != rows_) throw Error("column length mismatch");
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

QMatrix& QMatrix::operator+=(const QMatrix& o)
{
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix shape mismatch in +");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& o)
{
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix shape mismatch in -");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
}

QMatrix& QMatrix::operator*=(const Rational& c)
{
    for (auto& x : data_) x *= c;
    return *this;
}

QMatrix QMatrix::operator-() const
{
    QMatrix r = *this;
    for (auto& x : r.data_) x = -x;
    return r;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b)
{
    if (a.cols_ != b.rows_) throw Error("matrix shape mismatch in *");
    QMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& x = a(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (b(k, j) != 0) r(i, j) += x * b(k, j);
        }
    return r;
}

QVector QMatrix::apply(const QVector& v) const
{
    if (v.size() != cols_) throw Error("vector length mismatch");
    QVector r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != 0 && v[j] != 0) r[i] += (*this)(i, j) * v[j];
    return r;
}

QMatrix QMatrix::transpose() const
{
    QMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

Rational QMatrix::trace() const
{
    Rational t = 0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

bool QMatrix::is_zero() const
{
    for (const auto& x : data_)
        if (x != 0) return false;
    return true;
}

std::string QMatrix::to_string() const
{
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).get_str();
        os << "]";
    }
    os << "]";
    return os.str();
}

QMatrix commutator(const QMatrix& a, const QMatrix& b) { return a * b - b * a; }

QMatrix power(const QMatrix& a, unsigned e)
{
    QMatrix r = QMatrix::identity(a.rows());
    for (unsigned i = 0; i < e; ++i) r = r * a;
    return r;
}

std::vector<std::size_t> rref(QMatrix& m)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        Rational inv = 1 / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            Rational f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (m(r, j) != 0) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(QMatrix m) { return rref(m).size(); }

std::vector<QVector> kernel(const QMatrix& m)
{
    QMatrix a = m;
    auto pivots = rref(a);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<QVector> out;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        QVector v(m.cols());
        v[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(r, f);
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<QMatrix> inverse(const QMatrix& m)
{
    if (!m.is_square()) throw Error("inverse of non-square matrix");
    std::size_t n = m.rows();
    QMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    auto piv = rref(aug);
    if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
    QMatrix r(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r(i, j) = aug(i, n + j);
    return r;
}

Rational determinant(QMatrix m)
{
    if (!m.is_square()) throw Error("determinant of non-square matrix");
    std::size_t n = m.rows();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c) == 0) continue;
            Rational f = m(i, c) / m(c, c);
            for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

QMatrix restrict_to(const QMatrix& m, const std::vector<QVector>& basis)
{
    EchelonBasis eb(m.rows(), true);
    for (const auto& b : basis)
        if (!eb.add(b)) throw Error("restrict_to: basis is linearly dependent");
    QMatrix r(basis.size(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        auto coords = eb.coordinates(m.apply(basis[j]));
        if (!coords) throw Error("restrict_to: subspace is not invariant");
        for (std::size_t i = 0; i < basis.size(); ++i) r(i, j) = (*coords)[i];
    }
    return r;
}

bool is_zero(const QVector& v)
{
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

}  // namespace bigalg
