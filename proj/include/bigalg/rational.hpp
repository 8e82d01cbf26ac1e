#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace bigalg {

/// Exact rational number; GMP keeps it canonical (reduced, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

/// Base class for every error the library raises.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Always "p/q", including integers ("3/1"), so consumers never guess.
std::string to_string(const Rational& r);

/// Accepts "p/q", "p", and plain decimals such as "-1.25".
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// Canonicalized n/d; the raw two-argument mpq_class constructor does not reduce.
inline Rational frac(const Integer& n, const Integer& d)
{
    if (d == 0) throw Error("zero denominator");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

}  // namespace bigalg
