#include "bigalg/polymatrix.hpp"

#include <sstream>

namespace bigalg {

PolyMatrix::PolyMatrix(VarSetPtr vars, std::size_t rows, std::size_t cols)
    : vars_(std::move(vars)), rows_(rows), cols_(cols), data_(rows * cols, MultiPoly(vars_))
{
}

PolyMatrix PolyMatrix::identity(VarSetPtr vars, std::size_t n)
{
    PolyMatrix m(vars, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = MultiPoly::constant(vars, 1);
    return m;
}

PolyMatrix PolyMatrix::constant(VarSetPtr vars, const QMatrix& q)
{
    PolyMatrix m(vars, q.rows(), q.cols());
    for (std::size_t i = 0; i < q.rows(); ++i)
        for (std::size_t j = 0; j < q.cols(); ++j) m(i, j) = MultiPoly::constant(vars, q(i, j));
    return m;
}

PolyMatrix PolyMatrix::scalar(const MultiPoly& p, std::size_t n)
{
    PolyMatrix m(p.vars(), n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = p;
    return m;
}

PolyMatrix& PolyMatrix::operator+=(const PolyMatrix& o)
{
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("PolyMatrix shape mismatch in +");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
}

PolyMatrix& PolyMatrix::operator-=(const PolyMatrix& o)
{
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("PolyMatrix shape mismatch in -");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
}

PolyMatrix& PolyMatrix::operator*=(const Rational& c)
{
    for (auto& p : data_) p *= c;
    return *this;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b)
{
    if (a.cols_ != b.rows_) throw Error("PolyMatrix shape mismatch in *");
    PolyMatrix r(a.vars_ ? a.vars_ : b.vars_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const MultiPoly& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const MultiPoly& y = b(k, j);
                if (y.is_zero()) continue;
                if (x.is_constant())
                    r(i, j).add_scaled(y, x.constant_term());
                else if (y.is_constant())
                    r(i, j).add_scaled(x, y.constant_term());
                else
                    r(i, j) += x * y;
            }
        }
    return r;
}

PolyMatrix operator*(const QMatrix& a, const PolyMatrix& b)
{
    if (a.cols() != b.rows_) throw Error("PolyMatrix shape mismatch in *");
    PolyMatrix r(b.vars_, a.rows(), b.cols_);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero()) r(i, j).add_scaled(b(k, j), a(i, k));
        }
    return r;
}

PolyMatrix operator*(const PolyMatrix& a, const QMatrix& b)
{
    if (a.cols_ != b.rows()) throw Error("PolyMatrix shape mismatch in *");
    PolyMatrix r(a.vars_, a.rows_, b.cols());
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (b(k, j) != 0) r(i, j).add_scaled(a(i, k), b(k, j));
        }
    return r;
}

PolyMatrix operator*(const MultiPoly& p, const PolyMatrix& a)
{
    PolyMatrix r(a.vars_ ? a.vars_ : p.vars(), a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k)
        if (!a.data_[k].is_zero()) r.data_[k] = p * a.data_[k];
    return r;
}

void PolyMatrix::add_product(const QMatrix& m, const MultiPoly& p)
{
    if (m.rows() != rows_ || m.cols() != cols_) throw Error("PolyMatrix shape mismatch in add_product");
    if (p.is_zero()) return;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (m(i, j) != 0) (*this)(i, j).add_scaled(p, m(i, j));
}

QMatrix PolyMatrix::evaluate(std::span<const Rational> point) const
{
    QMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!(*this)(i, j).is_zero()) r(i, j) = (*this)(i, j).evaluate(point);
    return r;
}

PolyMatrix PolyMatrix::substitute(std::span<const MultiPoly> images) const
{
    VarSetPtr target;
    for (const auto& im : images)
        if (im.vars()) {
            target = im.vars();
            break;
        }
    PolyMatrix r(target, rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k)
        if (!data_[k].is_zero()) r.data_[k] = data_[k].substitute(images);
    return r;
}

PolyMatrix PolyMatrix::derivative(std::size_t var) const
{
    PolyMatrix r(vars_, rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k)
        if (!data_[k].is_zero()) r.data_[k] = data_[k].derivative(var);
    return r;
}

std::optional<int> PolyMatrix::homogeneous_degree(std::span<const int> weights) const
{
    std::optional<int> deg;
    for (const auto& p : data_) {
        if (p.is_zero()) continue;
        auto d = p.homogeneous_degree(weights);
        if (!d || (deg && *deg != *d)) return std::nullopt;
        deg = d;
    }
    return deg;
}

bool PolyMatrix::is_zero() const
{
    for (const auto& p : data_)
        if (!p.is_zero()) return false;
    return true;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const
{
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t k = 0; k < data_.size(); ++k)
        if (!(data_[k] == o.data_[k])) return false;
    return true;
}

std::optional<std::pair<std::size_t, std::size_t>> PolyMatrix::first_nonzero() const
{
    for (std::size_t k = 0; k < data_.size(); ++k)
        if (!data_[k].is_zero()) return std::make_pair(k / cols_, k % cols_);
    return std::nullopt;
}

std::string PolyMatrix::to_string() const
{
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ",\n [" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).to_string();
        os << "]";
    }
    os << "]";
    return os.str();
}

PolyMatrix commutator(const PolyMatrix& a, const PolyMatrix& b) { return a * b - b * a; }

}  // namespace bigalg
