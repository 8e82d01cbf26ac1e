#include "bigalg/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>

namespace bigalg {

VarSet::VarSet(std::vector<std::string> names, std::optional<std::size_t> limit_var)
    : names_(std::move(names)), limit_var_(limit_var)
{
    if (names_.size() > kMaxVars)
        throw Error("too many variables: " + std::to_string(names_.size()) + " > " + std::to_string(kMaxVars));
    if (limit_var_ && *limit_var_ >= names_.size()) throw Error("limit variable out of range");
}

std::optional<std::size_t> VarSet::index_of(std::string_view name) const
{
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

std::size_t VarSet::require(std::string_view name) const
{
    auto i = index_of(name);
    if (!i) throw Error("unknown variable: " + std::string(name));
    return *i;
}

VarSetPtr make_vars(std::vector<std::string> names, std::optional<std::string> limit_var)
{
    std::optional<std::size_t> idx;
    if (limit_var) {
        auto it = std::find(names.begin(), names.end(), *limit_var);
        if (it == names.end()) throw Error("limit variable not among names: " + *limit_var);
        idx = static_cast<std::size_t>(it - names.begin());
    }
    return std::make_shared<const VarSet>(std::move(names), idx);
}

int Monomial::total_degree() const
{
    int d = 0;
    for (auto e : exp) d += e;
    return d;
}

int Monomial::weighted_degree(std::span<const int> weights) const
{
    int d = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) d += weights[i] * exp[i];
    return d;
}

Monomial Monomial::operator+(const Monomial& other) const
{
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
        int s = int(exp[i]) + int(other.exp[i]);
        if (s > std::numeric_limits<std::int16_t>::max() || s < std::numeric_limits<std::int16_t>::min())
            throw Error("monomial exponent overflow");
        r.exp[i] = static_cast<std::int16_t>(s);
    }
    return r;
}

// ---------------------------------------------------------------------------

MultiPoly MultiPoly::constant(VarSetPtr vars, const Rational& c)
{
    MultiPoly p(std::move(vars));
    if (c != 0) p.terms_.emplace_back(Monomial{}, c);
    return p;
}

MultiPoly MultiPoly::variable(VarSetPtr vars, std::size_t index)
{
    if (index >= vars->size()) throw Error("variable index out of range");
    Monomial m;
    m.exp[index] = 1;
    MultiPoly p(std::move(vars));
    p.terms_.emplace_back(m, Rational(1));
    return p;
}

MultiPoly MultiPoly::variable(VarSetPtr vars, std::string_view name)
{
    auto i = vars->require(name);
    return variable(std::move(vars), i);
}

MultiPoly MultiPoly::term(VarSetPtr vars, const Monomial& m, const Rational& c)
{
    MultiPoly p(std::move(vars));
    p.check_exponents(m);
    if (c != 0) p.terms_.emplace_back(m, c);
    return p;
}

void MultiPoly::check_exponents(const Monomial& m) const
{
    std::size_t n = vars_ ? vars_->size() : 0;
    auto limit = vars_ ? vars_->limit_var() : std::nullopt;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
        if (i >= n && m.exp[i] != 0) throw Error("exponent vector longer than variable set");
        if (m.exp[i] < 0 && (!limit || *limit != i))
            throw Error("negative exponent on non-limit variable " + vars_->name(i));
    }
}

void MultiPoly::check_compatible(const MultiPoly& other) const
{
    if (vars_ == other.vars_) return;
    if (!vars_ || !other.vars_) {
        // A default-constructed zero is compatible with every ring.
        if ((!vars_ && terms_.empty()) || (!other.vars_ && other.terms_.empty())) return;
        throw Error("variable-set mismatch (missing variable set)");
    }
    if (!(*vars_ == *other.vars_)) throw Error("variable-set mismatch");
}

bool MultiPoly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first == Monomial{});
}

Rational MultiPoly::constant_term() const { return coefficient(Monomial{}); }

Rational MultiPoly::coefficient(const Monomial& m) const
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) { return t.first < key; });
    if (it != terms_.end() && it->first == m) return it->second;
    return 0;
}

std::vector<MultiPoly::Term> MultiPoly::merge(const std::vector<Term>& a, const std::vector<Term>& b, int sign)
{
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, sign > 0 ? b[j].second : Rational(-b[j].second));
            ++j;
        } else {
            Rational c = sign > 0 ? Rational(a[i].second + b[j].second) : Rational(a[i].second - b[j].second);
            if (c != 0) out.emplace_back(a[i].first, std::move(c));
            ++i;
            ++j;
        }
    }
    return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other)
{
    check_compatible(other);
    if (!vars_) vars_ = other.vars_;
    if (other.terms_.empty()) return *this;
    terms_ = merge(terms_, other.terms_, +1);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other)
{
    check_compatible(other);
    if (!vars_) vars_ = other.vars_;
    if (other.terms_.empty()) return *this;
    terms_ = merge(terms_, other.terms_, -1);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.second *= c;
    return *this;
}

MultiPoly MultiPoly::operator-() const
{
    MultiPoly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

void MultiPoly::add_scaled(const MultiPoly& b, const Rational& c)
{
    check_compatible(b);
    if (!vars_) vars_ = b.vars_;
    if (c == 0 || b.terms_.empty()) return;
    std::vector<Term> scaled;
    scaled.reserve(b.terms_.size());
    for (const auto& t : b.terms_) scaled.emplace_back(t.first, t.second * c);
    terms_ = merge(terms_, scaled, +1);
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b)
{
    a.check_compatible(b);
    MultiPoly r(a.vars_ ? a.vars_ : b.vars_);
    if (a.terms_.empty() || b.terms_.empty()) return r;
    if (b.terms_.size() == 1) {
        const auto& [mb, cb] = b.terms_[0];
        r.terms_.reserve(a.terms_.size());
        for (const auto& [ma, ca] : a.terms_) r.terms_.emplace_back(ma + mb, ca * cb);
        // Adding a fixed monomial preserves lexicographic order.
        return r;
    }
    if (a.terms_.size() == 1) return b * a;

    std::vector<std::pair<Monomial, std::uint32_t>> keys;
    std::vector<Rational> coeffs;
    keys.reserve(a.terms_.size() * b.terms_.size());
    coeffs.reserve(keys.capacity());
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            keys.emplace_back(ma + mb, static_cast<std::uint32_t>(coeffs.size()));
            coeffs.push_back(ca * cb);
        }
    std::sort(keys.begin(), keys.end());
    for (std::size_t i = 0; i < keys.size();) {
        Rational sum = coeffs[keys[i].second];
        std::size_t j = i + 1;
        while (j < keys.size() && keys[j].first == keys[i].first) sum += coeffs[keys[j++].second];
        if (sum != 0) r.terms_.emplace_back(keys[i].first, std::move(sum));
        i = j;
    }
    return r;
}

MultiPoly MultiPoly::pow(unsigned e) const
{
    MultiPoly result = constant(vars_, 1);
    MultiPoly base = *this;
    while (e) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return result;
}

MultiPoly MultiPoly::derivative(std::size_t var) const
{
    if (!vars_ || var >= vars_->size()) throw Error("unknown variable index in derivative");
    MultiPoly r(vars_);
    for (const auto& [m, c] : terms_) {
        if (m.exp[var] == 0) continue;
        Monomial d = m;
        d.exp[var] -= 1;
        r.terms_.emplace_back(d, c * m.exp[var]);
    }
    // Lowering one coordinate can reorder terms only among those that kept it nonzero; re-sort.
    std::sort(r.terms_.begin(), r.terms_.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
    return r;
}

MultiPoly MultiPoly::derivative(std::string_view var) const
{
    if (!vars_) throw Error("derivative of polynomial without variable set");
    return derivative(vars_->require(var));
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const
{
    std::size_t n = vars_ ? vars_->size() : 0;
    if (point.size() != n) throw Error("evaluation arity mismatch");
    Rational sum = 0;
    for (const auto& [m, c] : terms_) {
        Rational v = c;
        for (std::size_t i = 0; i < n; ++i) {
            int e = m.exp[i];
            if (e == 0) continue;
            if (point[i] == 0) {
                if (e < 0) throw Error("negative power of zero in evaluation");
                v = 0;
                break;
            }
            Rational p;
            mpz_pow_ui(p.get_num_mpz_t(), point[i].get_num_mpz_t(), static_cast<unsigned long>(std::abs(e)));
            mpz_pow_ui(p.get_den_mpz_t(), point[i].get_den_mpz_t(), static_cast<unsigned long>(std::abs(e)));
            p.canonicalize();
            if (e < 0) p = 1 / p;
            v *= p;
        }
        sum += v;
    }
    return sum;
}

MultiPoly MultiPoly::substitute(std::span<const MultiPoly> images) const
{
    std::size_t n = vars_ ? vars_->size() : 0;
    if (images.size() != n) throw Error("substitution arity mismatch");
    VarSetPtr target;
    for (const auto& im : images)
        if (im.vars_) {
            target = im.vars_;
            break;
        }
    MultiPoly result(target);
    if (terms_.empty()) return result;
    // Powers of each image, built lazily.
    std::vector<std::vector<MultiPoly>> powers(n);
    auto power = [&](std::size_t i, int e) -> const MultiPoly& {
        if (e < 0) throw Error("cannot substitute into a negative power");
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(MultiPoly::constant(target, 1));
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[i]);
        return cache[static_cast<std::size_t>(e)];
    };
    for (const auto& [m, c] : terms_) {
        MultiPoly t = MultiPoly::constant(target, c);
        for (std::size_t i = 0; i < n && !t.is_zero(); ++i)
            if (m.exp[i] != 0) t = t * power(i, m.exp[i]);
        result += t;
    }
    return result;
}

MultiPoly MultiPoly::embed(VarSetPtr target, std::span<const std::size_t> map) const
{
    std::size_t n = vars_ ? vars_->size() : 0;
    if (map.size() != n) throw Error("embedding arity mismatch");
    MultiPoly r(target);
    for (const auto& [m, c] : terms_) {
        Monomial t;
        for (std::size_t i = 0; i < n; ++i) {
            if (map[i] >= target->size()) throw Error("embedding target index out of range");
            t.exp[map[i]] = static_cast<std::int16_t>(t.exp[map[i]] + m.exp[i]);
        }
        r += MultiPoly::term(target, t, c);
    }
    return r;
}

std::optional<int> MultiPoly::homogeneous_degree(std::span<const int> weights) const
{
    std::optional<int> deg;
    for (const auto& t : terms_) {
        int d = t.first.weighted_degree(weights);
        if (deg && *deg != d) return std::nullopt;
        deg = d;
    }
    return deg;
}

std::optional<int> MultiPoly::homogeneous_degree() const
{
    std::vector<int> ones(vars_ ? vars_->size() : 0, 1);
    return homogeneous_degree(ones);
}

int MultiPoly::max_total_degree() const
{
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.first.total_degree());
    return d;
}

bool MultiPoly::operator==(const MultiPoly& other) const
{
    if (terms_.empty() && other.terms_.empty()) return true;
    check_compatible(other);
    return terms_ == other.terms_;
}

std::string MultiPoly::to_string() const
{
    if (terms_.empty()) return "0";
    std::vector<const Term*> order;
    for (const auto& t : terms_) order.push_back(&t);
    std::stable_sort(order.begin(), order.end(), [](const Term* a, const Term* b) {
        int da = a->first.total_degree(), db = b->first.total_degree();
        if (da != db) return da > db;
        return b->first < a->first;
    });
    std::ostringstream os;
    bool first = true;
    for (const Term* t : order) {
        Rational c = t->second;
        bool neg = c < 0;
        if (neg) c = -c;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        bool is_one = t->first == Monomial{};
        if (c != 1 || is_one) {
            os << c.get_str();
            if (!is_one) os << "*";
        }
        bool first_var = true;
        for (std::size_t i = 0; i < vars_->size(); ++i) {
            int e = t->first.exp[i];
            if (e == 0) continue;
            if (!first_var) os << "*";
            first_var = false;
            os << vars_->name(i);
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

}  // namespace bigalg

namespace bigalg {

namespace {

class PolyParser {
public:
    PolyParser(const VarSetPtr& vars, std::string_view text) : vars_(vars), s_(text) {}

    MultiPoly parse()
    {
        MultiPoly p = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return p;
    }

private:
    const VarSetPtr& vars_;
    std::string_view s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const
    {
        throw Error("parse_polynomial: " + what + " at position " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
    }
    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    MultiPoly expr()
    {
        MultiPoly acc(vars_);
        bool neg = eat('-');
        if (!neg) eat('+');
        while (true) {
            MultiPoly t = term();
            if (neg) acc -= t;
            else acc += t;
            if (eat('+')) neg = false;
            else if (eat('-')) neg = true;
            else break;
        }
        return acc;
    }
    MultiPoly term()
    {
        MultiPoly acc = power();
        while (eat('*')) acc = acc * power();
        return acc;
    }
    MultiPoly power()
    {
        MultiPoly base = atom();
        if (eat('^')) {
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            base = base.pow(static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start)))));
        }
        return base;
    }
    MultiPoly atom()
    {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            MultiPoly p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/' || s_[pos_] == '.')) ++pos_;
            return MultiPoly::constant(vars_, parse_rational(s_.substr(start, pos_ - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            return MultiPoly::variable(vars_, s_.substr(start, pos_ - start));
        }
        fail("unexpected character");
    }
};

}  // namespace

MultiPoly primitive_part(const MultiPoly& p)
{
    if (p.is_zero()) return p;
    Integer l = 1, g = 0;
    for (const auto& [m, c] : p.terms()) l = lcm(l, Integer(c.get_den()));
    for (const auto& [m, c] : p.terms()) g = gcd(g, Integer(c.get_num() * (l / c.get_den())));
    Rational s(l, g);
    s.canonicalize();
    if (p.terms().back().second < 0) s = -s;
    return p * s;
}

MultiPoly parse_polynomial(const VarSetPtr& vars, std::string_view text)
{
    return PolyParser(vars, text).parse();
}

}  // namespace bigalg
