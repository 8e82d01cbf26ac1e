#include "bigalg/upoly.hpp"

#include <algorithm>
#include <sstream>

namespace bigalg {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::monomial(const Rational& c, unsigned degree)
{
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return UPoly(std::move(v));
}

void UPoly::trim()
{
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly& UPoly::operator+=(const UPoly& o)
{
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& o)
{
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return UPoly(std::move(r));
}

UPoly operator*(UPoly a, const Rational& c)
{
    for (auto& x : a.c_) x *= c;
    a.trim();
    return a;
}

Rational UPoly::evaluate(const Rational& x) const
{
    Rational r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

int UPoly::sign_at(const Rational& x) const { return sgn(evaluate(x)); }

UPoly UPoly::derivative() const
{
    if (c_.size() <= 1) return {};
    std::vector<Rational> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
    return UPoly(std::move(r));
}

UPoly UPoly::monic() const
{
    if (is_zero()) return {};
    return *this * Rational(1 / leading());
}

QMatrix UPoly::evaluate(const QMatrix& m) const
{
    QMatrix r(m.rows(), m.cols());
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * m + QMatrix::identity(m.rows()) * *it;
    return r;
}

std::string UPoly::to_string(const std::string& var) const
{
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        Rational c = c_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        bool neg = c < 0;
        if (neg) c = -c;
        os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        first = false;
        if (c != 1 || i == 0) os << c.get_str() << (i ? "*" : "");
        if (i) os << var << (i > 1 ? "^" + std::to_string(i) : "");
    }
    return os.str();
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b)
{
    if (b.is_zero()) throw Error("polynomial division by zero");
    std::vector<Rational> r = a.coeffs();
    int db = b.degree();
    if (a.degree() < db) return {UPoly(), a};
    std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1));
    Rational lead_inv = 1 / b.leading();
    for (int i = a.degree(); i >= db; --i) {
        Rational f = r[static_cast<std::size_t>(i)] * lead_inv;
        if (f == 0) continue;
        q[static_cast<std::size_t>(i - db)] = f;
        for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= f * b.coeff(static_cast<std::size_t>(j));
    }
    return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly gcd(const UPoly& a, const UPoly& b)
{
    UPoly x = a, y = b;
    while (!y.is_zero()) {
        UPoly r = divmod(x, y).second;
        x = std::move(y);
        y = r.monic();
    }
    return x.monic();
}

std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& p)
{
    std::vector<std::pair<UPoly, int>> out;
    if (p.degree() <= 0) return out;
    UPoly f = p.monic();
    UPoly fp = f.derivative();
    UPoly a = gcd(f, fp);
    UPoly b = divmod(f, a).first;
    UPoly c = divmod(fp, a).first;
    UPoly d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        UPoly g = gcd(b, d);
        if (g.degree() > 0) out.emplace_back(g, i);
        b = divmod(b, g).first;
        c = divmod(d, g).first;
        d = c - b.derivative();
        ++i;
    }
    return out;
}

bool is_squarefree(const UPoly& p)
{
    if (p.degree() <= 0) return true;
    return gcd(p, p.derivative()).degree() == 0;
}

UPoly charpoly(const QMatrix& m)
{
    if (!m.is_square()) throw Error("charpoly of non-square matrix");
    std::size_t n = m.rows();
    QMatrix h = m;
    // Similarity reduction to upper Hessenberg form.
    for (std::size_t k = 0; k + 2 <= n; ++k) {
        std::size_t p = k + 1;
        while (p < n && h(p, k) == 0) ++p;
        if (p == n) continue;
        if (p != k + 1) {
            for (std::size_t j = 0; j < n; ++j) std::swap(h(p, j), h(k + 1, j));
            for (std::size_t i = 0; i < n; ++i) std::swap(h(i, p), h(i, k + 1));
        }
        for (std::size_t i = k + 2; i < n; ++i) {
            if (h(i, k) == 0) continue;
            Rational f = h(i, k) / h(k + 1, k);
            for (std::size_t j = 0; j < n; ++j) h(i, j) -= f * h(k + 1, j);
            for (std::size_t r = 0; r < n; ++r) h(r, k + 1) += f * h(r, i);
        }
    }
    // Recurrence for the leading principal minors of tI - H.
    std::vector<UPoly> p(n + 1);
    p[0] = UPoly({Rational(1)});
    UPoly t({Rational(0), Rational(1)});
    for (std::size_t k = 1; k <= n; ++k) {
        p[k] = (t - UPoly({h(k - 1, k - 1)})) * p[k - 1];
        Rational prod = 1;
        for (std::size_t i = k - 1; i >= 1; --i) {
            prod *= h(i, i - 1);
            if (prod == 0) break;
            p[k] -= p[i - 1] * Rational(prod * h(i - 1, k - 1));
        }
    }
    return p[n];
}

namespace {

std::vector<UPoly> sturm_sequence(const UPoly& p)
{
    std::vector<UPoly> s{p, p.derivative()};
    while (!s.back().is_zero()) {
        UPoly r = divmod(s[s.size() - 2], s.back()).second;
        if (r.is_zero()) break;
        s.push_back(r * Rational(-1));
    }
    return s;
}

int sign_changes(const std::vector<UPoly>& s, const Rational& x)
{
    int changes = 0, last = 0;
    for (const auto& q : s) {
        int v = q.sign_at(x);
        if (v == 0) continue;
        if (last != 0 && v != last) ++changes;
        last = v;
    }
    return changes;
}

// Cauchy bound on root magnitude.
Rational root_bound(const UPoly& p)
{
    Rational m = 0;
    for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rational(abs(p.coeff(static_cast<std::size_t>(i)) / p.leading())));
    return m + 1;
}

}  // namespace

std::vector<std::pair<Rational, Rational>> isolate_real_roots(const UPoly& p)
{
    std::vector<std::pair<Rational, Rational>> out;
    if (p.degree() <= 0) return out;
    UPoly f = p;
    // Work with the squarefree part so the Sturm count gives distinct roots.
    UPoly g = gcd(f, f.derivative());
    if (g.degree() > 0) f = divmod(f, g).first;
    auto s = sturm_sequence(f);
    Rational b = root_bound(f);
    // Intervals (lo, hi] with lo never a root; the Sturm count is exact on them.
    std::vector<std::pair<Rational, Rational>> work{{-b, b}};
    while (!work.empty()) {
        auto [lo, hi] = work.back();
        work.pop_back();
        int cnt = sign_changes(s, lo) - sign_changes(s, hi);
        if (cnt == 0) continue;
        if (cnt == 1) {
            if (f.sign_at(hi) == 0)
                out.emplace_back(hi, hi);
            else
                out.emplace_back(lo, hi);
            continue;
        }
        Rational mid = (lo + hi) / 2;
        while (f.sign_at(mid) == 0) mid += (hi - mid) / 3;
        work.emplace_back(mid, hi);
        work.emplace_back(lo, mid);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::pair<Rational, Rational> refine_root(const UPoly& p, std::pair<Rational, Rational> iv, const Rational& eps)
{
    auto [lo, hi] = iv;
    if (lo == hi) return iv;
    int shi = p.sign_at(hi);
    while (hi - lo >= eps) {
        Rational mid = (lo + hi) / 2;
        int sm = p.sign_at(mid);
        if (sm == 0) return {mid, mid};
        if (sm == shi)
            hi = mid;
        else
            lo = mid;
    }
    return {lo, hi};
}

std::vector<std::pair<Rational, int>> rational_roots(const UPoly& p)
{
    std::vector<std::pair<Rational, int>> out;
    for (const auto& [f, mult] : squarefree_decomposition(p)) {
        // Primitive integer form: any rational root k/d has d dividing the leading coefficient.
        Integer den_lcm = 1;
        for (const auto& c : f.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
        Integer lead = Rational(f.leading() * den_lcm).get_num();
        if (lead < 0) lead = -lead;
        for (auto iv : isolate_real_roots(f)) {
            if (iv.first == iv.second) {
                out.emplace_back(iv.first, mult);
                continue;
            }
            // Once the interval is shorter than 1/lead it holds at most one fraction k/lead.
            iv = refine_root(f, iv, frac(1, 2) / Rational(lead));
            if (iv.first == iv.second) {
                out.emplace_back(iv.first, mult);
                continue;
            }
            Rational scaled = iv.second * lead;
            Integer k = scaled.get_num() / scaled.get_den();  // truncation
            for (Integer cand : {Integer(k - 1), k, Integer(k + 1)}) {
                Rational x = frac(cand, lead);
                if (x > iv.first && x <= iv.second && f.evaluate(x) == 0) {
                    out.emplace_back(x, mult);
                    break;
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace bigalg
