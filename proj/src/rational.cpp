#include "bigalg/rational.hpp"

namespace bigalg {

std::string to_string(const Rational& r)
{
    return r.get_str();
}

Rational parse_rational(std::string_view text)
{
    std::string s(text);
    if (s.empty()) throw Error("empty rational literal");
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string whole = s.substr(0, dot);
        std::string frac = s.substr(dot + 1);
        bool neg = !whole.empty() && whole[0] == '-';
        if (neg || (!whole.empty() && whole[0] == '+')) whole.erase(0, 1);
        if (whole.empty()) whole = "0";
        if (frac.find_first_not_of("0123456789") != std::string::npos ||
            whole.find_first_not_of("0123456789") != std::string::npos)
            throw Error("malformed decimal literal: " + s);
        Integer num(whole + frac, 10);
        Integer den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
        Rational r(num, den);
        r.canonicalize();
        return neg ? Rational(-r) : r;
    }
    Rational r;
    if (r.set_str(s, 10) != 0 || r.get_den() == 0) throw Error("malformed rational literal: " + s);
    r.canonicalize();
    return r;
}

}  // namespace bigalg
