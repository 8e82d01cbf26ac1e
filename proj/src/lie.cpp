#include "bigalg/lie.hpp"

#include "bigalg/upoly.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace bigalg {

namespace {

QMatrix unit(int n, int i, int j)
{
    QMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = 1;
    return m;
}

std::shared_ptr<SlAlgebra> construct(int n)
{
    auto g = std::make_shared<SlAlgebra>();
    g->n = n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) {
                g->basis.push_back(unit(n, i, j));
                g->names.push_back("E" + std::to_string(i) + std::to_string(j));
            }
    for (int i = 0; i + 1 < n; ++i) {
        g->basis.push_back(unit(n, i, i) - unit(n, i + 1, i + 1));
        g->names.push_back("H" + std::to_string(i));
    }
    std::size_t N = g->basis.size();
    g->dim = N;

    g->bracket.assign(N, std::vector<QVector>(N));
    for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = 0; b < N; ++b) g->bracket[a][b] = g->coords(commutator(g->basis[a], g->basis[b]));

    g->trace_form = QMatrix(N, N);
    for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = 0; b < N; ++b) g->trace_form(a, b) = (g->basis[a] * g->basis[b]).trace();
    g->killing = g->trace_form * Rational(2 * n);
    auto inv = inverse(g->killing);
    if (!inv) throw Error("Killing form is degenerate");
    g->killing_inv = *inv;
    for (std::size_t i = 0; i < N; ++i) g->dual.push_back(g->killing_inv.row(i));

    QMatrix e(static_cast<std::size_t>(n), static_cast<std::size_t>(n)), f = e, h = e;
    for (int i = 0; i + 1 < n; ++i) {
        e(static_cast<std::size_t>(i), static_cast<std::size_t>(i + 1)) = 1;
        f(static_cast<std::size_t>(i + 1), static_cast<std::size_t>(i)) = (i + 1) * (n - i - 1);
    }
    for (int i = 0; i < n; ++i) h(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = n - 1 - 2 * i;
    g->e = g->coords(e);
    g->f = g->coords(f);
    g->h = g->coords(h);

    std::vector<std::string> xs;
    for (std::size_t i = 0; i < N; ++i) xs.push_back("x" + std::to_string(i));
    g->coord_vars = make_vars(xs);

    int r = n - 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            // epsilon_i - epsilon_j evaluated on H_k.
            Weight w(static_cast<std::size_t>(r), 0);
            for (int k = 0; k < r; ++k) w[static_cast<std::size_t>(k)] = (i == k) - (i == k + 1) - (j == k) + (j == k + 1);
            std::vector<int> s(static_cast<std::size_t>(r), 0);
            for (int k = i; k < j; ++k) s[static_cast<std::size_t>(k)] = 1;
            g->positive_roots.push_back(w);
            g->positive_roots_simple.push_back(s);
            if (j == i + 1) g->simple_roots.push_back(w);
        }
    g->rho.assign(static_cast<std::size_t>(r), 1);
    for (int d = 2; d <= n; ++d) g->degrees.push_back(d);
    return g;
}

}  // namespace

QVector SlAlgebra::coords(const QMatrix& x) const
{
    std::size_t nn = static_cast<std::size_t>(n);
    if (x.rows() != nn || x.cols() != nn) throw Error("coords: shape mismatch");
    if (x.trace() != 0) throw Error("coords: matrix is not traceless");
    QVector c(dim);
    std::size_t k = 0;
    for (std::size_t i = 0; i < nn; ++i)
        for (std::size_t j = 0; j < nn; ++j)
            if (i != j) c[k++] = x(i, j);
    Rational run = 0;
    for (std::size_t i = 0; i + 1 < nn; ++i) {
        run += x(i, i);
        c[k++] = run;
    }
    return c;
}

QMatrix SlAlgebra::element(const QVector& c) const
{
    QMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < dim; ++i)
        if (c[i] != 0) m += basis[i] * c[i];
    return m;
}

QVector SlAlgebra::lie_bracket(const QVector& a, const QVector& b) const
{
    QVector r(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < dim; ++j) {
            if (b[j] == 0) continue;
            Rational f = a[i] * b[j];
            for (std::size_t k = 0; k < dim; ++k)
                if (bracket[i][j][k] != 0) r[k] += f * bracket[i][j][k];
        }
    }
    return r;
}

QMatrix SlAlgebra::ad(const QVector& x) const
{
    QMatrix m(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
        QVector ej(dim);
        ej[j] = 1;
        m.set_column(j, lie_bracket(x, ej));
    }
    return m;
}

std::size_t SlAlgebra::index_of(int i, int j) const
{
    if (i == j || i < 0 || j < 0 || i >= n || j >= n) throw Error("index_of: not an off-diagonal position");
    return static_cast<std::size_t>(i * (n - 1) + (j < i ? j : j - 1));
}

std::size_t SlAlgebra::cartan_index(int i) const
{
    return static_cast<std::size_t>(n * (n - 1) + i);
}

PolyMatrix SlAlgebra::generic_element() const
{
    PolyMatrix a(coord_vars, static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < dim; ++i) a.add_product(basis[i], MultiPoly::variable(coord_vars, i));
    return a;
}

SlPtr build_sl(int n)
{
    if (n < 2) throw Error("sl_n needs n >= 2");
    static std::mutex mu;
    static std::map<int, SlPtr> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    SlPtr g = construct(n);
    cache[n] = g;
    return g;
}

QMatrix killing_from_structure(const SlAlgebra& g)
{
    std::vector<QMatrix> ads;
    for (std::size_t i = 0; i < g.dim; ++i) {
        QVector ei(g.dim);
        ei[i] = 1;
        ads.push_back(g.ad(ei));
    }
    QMatrix k(g.dim, g.dim);
    for (std::size_t i = 0; i < g.dim; ++i)
        for (std::size_t j = 0; j < g.dim; ++j) k(i, j) = (ads[i] * ads[j]).trace();
    return k;
}

VarSetPtr c_vars(int n)
{
    static std::mutex mu;
    static std::map<int, VarSetPtr> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<std::string> names;
    for (int k = 2; k <= n; ++k) names.push_back("c" + std::to_string(k));
    auto v = make_vars(names);
    cache[n] = v;
    return v;
}

PolyMatrix kostant_section_companion(int n)
{
    auto cv = c_vars(n);
    std::size_t nn = static_cast<std::size_t>(n);
    PolyMatrix m(cv, nn, nn);
    for (std::size_t i = 0; i + 1 < nn; ++i) m(i + 1, i) = MultiPoly::constant(cv, 1);
    // Last column: entry j carries -c_{n-j}; the diagonal corner is -c_1 = 0.
    for (std::size_t j = 0; j + 1 < nn; ++j) m(j, nn - 1) = -MultiPoly::variable(cv, "c" + std::to_string(n - static_cast<int>(j)));
    return m;
}

QMatrix kostant_section_companion(int n, const std::vector<Rational>& cvals)
{
    if (cvals.size() != static_cast<std::size_t>(n - 1)) throw Error("companion: expected n-1 invariant values");
    return kostant_section_companion(n).evaluate(cvals);
}

std::vector<MultiPoly> section_coordinates(const SlAlgebra& g)
{
    PolyMatrix c = kostant_section_companion(g.n);
    std::size_t nn = static_cast<std::size_t>(g.n);
    std::vector<MultiPoly> out(g.dim, MultiPoly(c.vars()));
    std::size_t k = 0;
    for (std::size_t i = 0; i < nn; ++i)
        for (std::size_t j = 0; j < nn; ++j)
            if (i != j) out[k++] = c(i, j);
    // The companion diagonal is zero, so every H coordinate vanishes.
    return out;
}

std::vector<Rational> char_coefficients(const QMatrix& a)
{
    UPoly chi = charpoly(a);
    int n = static_cast<int>(a.rows());
    std::vector<Rational> out;
    for (int k = 2; k <= n; ++k) out.push_back(chi.coeff(static_cast<std::size_t>(n - k)));
    return out;
}

std::vector<QVector> centralizer(const SlAlgebra& g, const QVector& x) { return kernel(g.ad(x)); }

std::vector<WeylElement> weyl_group(int n)
{
    if (n > 7) throw Error("weyl_group: n! guard exceeded (n <= 7)");
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::vector<WeylElement> out;
    do {
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(j)]) ++inv;
        out.push_back({p, inv % 2 ? -1 : 1});
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

namespace {

std::vector<long> raw_epsilon(const Weight& lambda)
{
    std::size_t n = lambda.size() + 1;
    std::vector<long> a(n, 0);
    for (std::size_t j = n - 1; j-- > 0;) a[j] = a[j + 1] + lambda[j];
    return a;
}

Weight from_raw_epsilon(const std::vector<long>& a)
{
    Weight w(a.size() - 1);
    for (std::size_t i = 0; i + 1 < a.size(); ++i) w[i] = static_cast<int>(a[i] - a[i + 1]);
    return w;
}

}  // namespace

Weight weyl_act(const WeylElement& w, const Weight& lambda)
{
    auto a = raw_epsilon(lambda);
    if (a.size() != w.perm.size()) throw Error("weyl_act: rank mismatch");
    std::vector<long> b(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) b[static_cast<std::size_t>(w.perm[j])] = a[j];
    return from_raw_epsilon(b);
}

std::vector<Rational> to_epsilon(const Weight& lambda)
{
    auto a = raw_epsilon(lambda);
    Rational mean = 0;
    for (auto x : a) mean += x;
    mean /= static_cast<long>(a.size());
    std::vector<Rational> out;
    for (auto x : a) out.push_back(Rational(x) - mean);
    return out;
}

Rational inner_product(const Weight& a, const Weight& b)
{
    auto ea = to_epsilon(a), eb = to_epsilon(b);
    Rational s = 0;
    for (std::size_t i = 0; i < ea.size(); ++i) s += ea[i] * eb[i];
    return s;
}

Weight add(const Weight& a, const Weight& b)
{
    Weight r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Weight sub(const Weight& a, const Weight& b)
{
    Weight r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

bool is_dominant(const Weight& w)
{
    return std::all_of(w.begin(), w.end(), [](int x) { return x >= 0; });
}

std::optional<std::vector<int>> simple_root_coords(const Weight& w)
{
    auto e = to_epsilon(w);
    std::vector<int> out;
    Rational run = 0;
    for (std::size_t i = 0; i + 1 < e.size(); ++i) {
        run += e[i];
        if (!is_integer(run)) return std::nullopt;
        out.push_back(static_cast<int>(run.get_num().get_si()));
    }
    return out;
}

int weight_on_h(const Weight& w)
{
    auto a = raw_epsilon(w);
    long n = static_cast<long>(a.size());
    long s = 0;
    for (long j = 0; j < n; ++j) s += a[static_cast<std::size_t>(j)] * (n - 1 - 2 * j);
    return static_cast<int>(s);
}

Weight minuscule_min(const Weight& mu)
{
    if (!is_dominant(mu)) throw Error("minuscule_min: weight is not dominant");
    int n = static_cast<int>(mu.size()) + 1;
    int cls = 0;
    for (int i = 0; i < n - 1; ++i) cls = (cls + (i + 1) * mu[static_cast<std::size_t>(i)]) % n;
    Weight w(mu.size(), 0);
    if (cls != 0) w[static_cast<std::size_t>(cls - 1)] = 1;
    return w;
}

Integer weyl_dimension(const Weight& mu)
{
    int n = static_cast<int>(mu.size()) + 1;
    auto g = build_sl(n);
    Weight mr = add(mu, g->rho);
    Rational d = 1;
    for (const auto& a : g->positive_roots) d *= inner_product(mr, a) / inner_product(g->rho, a);
    if (!is_integer(d)) throw Error("Weyl dimension is not an integer");
    return d.get_num();
}

Weight parse_weight(const std::string& text, int n)
{
    Weight w;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            int v = std::stoi(item, &pos);
            if (pos != item.size()) throw Error("bad weight entry");
            w.push_back(v);
        } catch (const std::logic_error&) {
            throw Error("malformed weight: " + text);
        }
    }
    if (static_cast<int>(w.size()) != n - 1)
        throw Error("weight " + text + " must have " + std::to_string(n - 1) + " coordinates");
    return w;
}

std::string weight_to_string(const Weight& w)
{
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
    return s;
}

}  // namespace bigalg
