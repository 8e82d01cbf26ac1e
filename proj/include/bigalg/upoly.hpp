#pragma once

#include "bigalg/qmatrix.hpp"

#include <string>
#include <utility>
#include <vector>

namespace bigalg {

/// Dense univariate polynomial over Q; coeffs[i] multiplies t^i, no trailing zeros.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rational> coeffs);
    static UPoly monomial(const Rational& c, unsigned degree);

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

    UPoly& operator+=(const UPoly& o);
    UPoly& operator-=(const UPoly& o);
    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend UPoly operator*(UPoly a, const Rational& c);
    bool operator==(const UPoly& o) const = default;

    Rational evaluate(const Rational& x) const;
    /// Sign of p(x) for exact rational x.
    int sign_at(const Rational& x) const;
    UPoly derivative() const;
    UPoly monic() const;
    /// Matrix polynomial p(M).
    QMatrix evaluate(const QMatrix& m) const;

    std::string to_string(const std::string& var = "t") const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// Quotient and remainder; divisor must be nonzero.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
/// Monic gcd (zero if both are zero).
UPoly gcd(const UPoly& a, const UPoly& b);
/// Yun's squarefree decomposition: list of (factor, multiplicity), factors monic, squarefree, coprime.
std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& p);
bool is_squarefree(const UPoly& p);

/// Characteristic polynomial det(tI - M) via Hessenberg reduction over Q.
UPoly charpoly(const QMatrix& m);

/// Rational roots of p with multiplicity, ascending.
std::vector<std::pair<Rational, int>> rational_roots(const UPoly& p);

/// Isolating intervals [lo, hi] of the distinct real roots of p, ascending.
/// Each interval contains exactly one root; degenerate intervals are exact roots.
std::vector<std::pair<Rational, Rational>> isolate_real_roots(const UPoly& p);

/// Shrinks an isolating interval of a squarefree p until its width is below eps.
std::pair<Rational, Rational> refine_root(const UPoly& p, std::pair<Rational, Rational> iv, const Rational& eps);

}  // namespace bigalg
