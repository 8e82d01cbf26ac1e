#pragma once

#include "bigalg/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace bigalg {

/// Laurent polynomial in q with integer coefficients. Exponents may be half-integers;
/// they are stored doubled so the key 3 means q^(3/2).
class QPolynomial {
public:
    QPolynomial() = default;
    static QPolynomial monomial(const Integer& c, const Rational& exponent);
    static QPolynomial one() { return monomial(1, 0); }

    void add(const Rational& exponent, const Integer& c);
    QPolynomial& operator+=(const QPolynomial& o);
    QPolynomial& operator-=(const QPolynomial& o);
    friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
    friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
    friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
    QPolynomial shifted(const Rational& by) const;
    bool operator==(const QPolynomial& o) const = default;

    bool is_zero() const { return terms_.empty(); }
    Integer at_one() const;
    Integer coeff(const Rational& exponent) const;
    bool nonnegative() const;
    /// (exponent, coefficient) pairs in ascending exponent order.
    std::vector<std::pair<Rational, Integer>> terms() const;
    std::string to_string() const;

private:
    std::map<long, Integer> terms_;
};

/// Product formula prod_i (1 - q^{a_i}) / (1 - q^{b_i}); throws if the quotient is not a polynomial.
QPolynomial product_quotient(const std::vector<int>& numer_exponents, const std::vector<int>& denom_exponents);

}  // namespace bigalg
