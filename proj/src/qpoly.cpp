#include "bigalg/qpoly.hpp"

#include "bigalg/upoly.hpp"

#include <sstream>

namespace bigalg {

namespace {

long doubled(const Rational& e)
{
    Rational d = e * 2;
    if (!is_integer(d)) throw Error("q-exponent must be a half-integer");
    return d.get_num().get_si();
}

}  // namespace

QPolynomial QPolynomial::monomial(const Integer& c, const Rational& exponent)
{
    QPolynomial p;
    p.add(exponent, c);
    return p;
}

void QPolynomial::add(const Rational& exponent, const Integer& c)
{
    if (c == 0) return;
    long k = doubled(exponent);
    auto& slot = terms_[k];
    slot += c;
    if (slot == 0) terms_.erase(k);
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& o)
{
    for (const auto& [k, c] : o.terms_) add(frac(k, 2), c);
    return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& o)
{
    for (const auto& [k, c] : o.terms_) add(frac(k, 2), Integer(-c));
    return *this;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b)
{
    QPolynomial r;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) r.add(frac(ka + kb, 2), Integer(ca * cb));
    return r;
}

QPolynomial QPolynomial::shifted(const Rational& by) const
{
    long s = doubled(by);
    QPolynomial r;
    for (const auto& [k, c] : terms_) r.terms_[k + s] = c;
    return r;
}

Integer QPolynomial::at_one() const
{
    Integer s = 0;
    for (const auto& [k, c] : terms_) s += c;
    return s;
}

Integer QPolynomial::coeff(const Rational& exponent) const
{
    auto it = terms_.find(doubled(exponent));
    return it == terms_.end() ? Integer(0) : it->second;
}

bool QPolynomial::nonnegative() const
{
    for (const auto& [k, c] : terms_)
        if (c < 0) return false;
    return true;
}

std::vector<std::pair<Rational, Integer>> QPolynomial::terms() const
{
    std::vector<std::pair<Rational, Integer>> out;
    for (const auto& [k, c] : terms_) {
        out.emplace_back(frac(k, 2), c);
    }
    return out;
}

std::string QPolynomial::to_string() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms()) {
        Integer a = c < 0 ? Integer(-c) : c;
        os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
        first = false;
        if (e == 0) {
            os << a.get_str();
            continue;
        }
        if (a != 1) os << a.get_str() << "*";
        os << "q";
        if (e != 1) os << "^" << (is_integer(e) ? e.get_str() : "(" + e.get_str() + ")");
    }
    return os.str();
}

QPolynomial product_quotient(const std::vector<int>& numer_exponents, const std::vector<int>& denom_exponents)
{
    UPoly num({Rational(1)}), den({Rational(1)});
    auto factor = [](int a) {
        if (a <= 0) throw Error("product_quotient exponents must be positive");
        return UPoly({Rational(1)}) - UPoly::monomial(1, static_cast<unsigned>(a));
    };
    for (int a : numer_exponents) num = num * factor(a);
    for (int b : denom_exponents) den = den * factor(b);
    auto [quo, rem] = divmod(num, den);
    if (!rem.is_zero()) throw Error("product formula is not a polynomial");
    QPolynomial out;
    for (std::size_t i = 0; i < quo.coeffs().size(); ++i) {
        if (!is_integer(quo.coeffs()[i])) throw Error("product formula has non-integer coefficients");
        out.add(Rational(static_cast<long>(i)), quo.coeffs()[i].get_num());
    }
    return out;
}

}  // namespace bigalg
