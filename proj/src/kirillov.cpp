#include "bigalg/kirillov.hpp"

#include <map>
#include <mutex>

namespace bigalg {

namespace {

// Newton identities: k a_k = -sum_{j=1..k} a_{k-j} tr(A^j).
std::vector<MultiPoly> char_coefficients_symbolic(const PolyMatrix& a)
{
    std::size_t n = a.rows();
    VarSetPtr vars = a.vars();
    std::vector<MultiPoly> p(n + 1, MultiPoly(vars));
    PolyMatrix pw = a;
    for (std::size_t j = 1; j <= n; ++j) {
        MultiPoly t(vars);
        for (std::size_t i = 0; i < n; ++i) t += pw(i, i);
        p[j] = t;
        if (j < n) pw = pw * a;
    }
    std::vector<MultiPoly> c(n + 1, MultiPoly(vars));
    c[0] = MultiPoly::constant(vars, 1);
    for (std::size_t k = 1; k <= n; ++k) {
        MultiPoly s(vars);
        for (std::size_t j = 1; j <= k; ++j) s += c[k - j] * p[j];
        c[k] = s * Rational(-1, 1) * frac(1, static_cast<long>(k));
    }
    return c;
}

const std::vector<MultiPoly>& sl_invariants(int n)
{
    static std::mutex mu;
    static std::map<int, std::vector<MultiPoly>> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, char_coefficients_symbolic(build_sl(n)->generic_element())).first;
    return it->second;
}

// Gradient of c_k with respect to the trace form, via entries of a generic gl_n matrix,
// substituted back at A = sum x_i X_i: G_ab = dc_k/dy_ba.
PolyMatrix trace_gradient(int n, int k)
{
    auto g = build_sl(n);
    std::size_t nn = static_cast<std::size_t>(n);
    std::vector<std::string> ys;
    for (std::size_t a = 0; a < nn; ++a)
        for (std::size_t b = 0; b < nn; ++b) ys.push_back("y" + std::to_string(a) + "_" + std::to_string(b));
    auto yv = make_vars(ys);
    PolyMatrix y(yv, nn, nn);
    for (std::size_t a = 0; a < nn; ++a)
        for (std::size_t b = 0; b < nn; ++b) y(a, b) = MultiPoly::variable(yv, a * nn + b);
    MultiPoly ck = char_coefficients_symbolic(y)[static_cast<std::size_t>(k)];
    PolyMatrix A = g->generic_element();
    std::vector<MultiPoly> images;
    for (std::size_t a = 0; a < nn; ++a)
        for (std::size_t b = 0; b < nn; ++b) images.push_back(A(a, b));
    PolyMatrix G(g->coord_vars, nn, nn);
    for (std::size_t a = 0; a < nn; ++a)
        for (std::size_t b = 0; b < nn; ++b) G(a, b) = ck.derivative(b * nn + a).substitute(images);
    return G;
}

}  // namespace

const MultiPoly& invariant_ck(int n, int k)
{
    if (k < 2 || k > n) throw Error("invariant_ck: k out of range");
    return sl_invariants(n)[static_cast<std::size_t>(k)];
}

KirillovElement scalar_element(const RepPtr& rep, const MultiPoly& p, std::string label)
{
    auto h = p.homogeneous_degree();
    return {rep, PolyMatrix::scalar(p, rep->dim), p.is_zero() ? std::nullopt : h, std::move(label)};
}

KirillovElement small_operator(const RepPtr& rep)
{
    auto g = rep->algebra();
    PolyMatrix m(g->coord_vars, rep->dim, rep->dim);
    for (std::size_t i = 0; i < g->dim; ++i) m.add_product(rep->rho[i], MultiPoly::variable(g->coord_vars, i));
    return {rep, std::move(m), 1, "M1"};
}

KirillovElement medium_operator(const RepPtr& rep, int k)
{
    int n = rep->n;
    if (k < 2 || k > n) throw Error("medium_operator: k out of range");
    auto g = rep->algebra();
    std::size_t nn = static_cast<std::size_t>(n);
    PolyMatrix G = trace_gradient(n, k);
    MultiPoly tr(g->coord_vars);
    for (std::size_t a = 0; a < nn; ++a) tr += G(a, a);
    for (std::size_t a = 0; a < nn; ++a) G(a, a) -= tr * frac(1, n);
    // Coordinates of the traceless gradient in the Lie basis.
    PolyMatrix m(g->coord_vars, rep->dim, rep->dim);
    for (std::size_t a = 0; a < nn; ++a)
        for (std::size_t b = 0; b < nn; ++b)
            if (a != b) m.add_product(rep->rho[g->index_of(static_cast<int>(a), static_cast<int>(b))], G(a, b));
    MultiPoly run(g->coord_vars);
    for (std::size_t a = 0; a + 1 < nn; ++a) {
        run += G(a, a);
        m.add_product(rep->rho[g->cartan_index(static_cast<int>(a))], run);
    }
    return {rep, std::move(m), k - 1, "M" + std::to_string(k - 1)};
}

KirillovElement wei_D(const KirillovElement& a)
{
    auto g = a.rep->algebra();
    PolyMatrix out(g->coord_vars, a.rep->dim, a.rep->dim);
    for (std::size_t i = 0; i < g->dim; ++i) {
        PolyMatrix d = a.matrix.derivative(i);
        if (d.is_zero()) continue;
        out += a.rep->rho_of(g->dual[i]) * d;
    }
    out *= frac(1, 2);
    std::optional<int> deg;
    if (a.degree && *a.degree > 0 && !out.is_zero()) deg = *a.degree - 1;
    return {a.rep, std::move(out), deg, "D(" + a.label + ")"};
}

KirillovElement wei_D_in_basis(const KirillovElement& a, const QMatrix& T)
{
    auto g = a.rep->algebra();
    std::size_t N = g->dim;
    auto Tinv = inverse(T);
    if (!Tinv) throw Error("wei_D_in_basis: basis change is singular");
    const auto& vars = g->coord_vars;
    // x = T y: substitute x_j -> sum_i T(j,i) y_i (y reuses the variable slots).
    std::vector<MultiPoly> x_of_y(N, MultiPoly(vars)), y_of_x(N, MultiPoly(vars));
    for (std::size_t j = 0; j < N; ++j)
        for (std::size_t i = 0; i < N; ++i) {
            if (T(j, i) != 0) x_of_y[j].add_scaled(MultiPoly::variable(vars, i), T(j, i));
            if ((*Tinv)(j, i) != 0) y_of_x[j].add_scaled(MultiPoly::variable(vars, i), (*Tinv)(j, i));
        }
    PolyMatrix Fy = a.matrix.substitute(x_of_y);
    QMatrix kY = T.transpose() * g->killing * T;
    auto kYinv = inverse(kY);
    PolyMatrix out(vars, a.rep->dim, a.rep->dim);
    for (std::size_t i = 0; i < N; ++i) {
        PolyMatrix d = Fy.derivative(i);
        if (d.is_zero()) continue;
        // Y^i = sum_j kYinv(i,j) Y_j, in X-coordinates: sum_j kYinv(i,j) T(:, j).
        QVector dual(N);
        for (std::size_t j = 0; j < N; ++j)
            for (std::size_t l = 0; l < N; ++l) dual[l] += (*kYinv)(i, j) * T(l, j);
        out += a.rep->rho_of(dual) * d;
    }
    out *= frac(1, 2);
    PolyMatrix back = out.substitute(y_of_x);
    std::optional<int> deg;
    if (a.degree && *a.degree > 0 && !back.is_zero()) deg = *a.degree - 1;
    return {a.rep, std::move(back), deg, "D(" + a.label + ")"};
}

KirillovElement big_operator(const RepPtr& rep, int i, int k)
{
    if (!(0 < i && i < k && k <= rep->n)) throw Error("big_operator: need 0 < i < k <= n");
    KirillovElement cur = scalar_element(rep, invariant_ck(rep->n, k), "c" + std::to_string(k));
    for (int s = 0; s < i; ++s) cur = wei_D(cur);
    cur.label = "B" + std::to_string(i) + "_" + std::to_string(k - i);
    cur.degree = k - i;
    return cur;
}

bool equivariance_check(const KirillovElement& a)
{
    auto g = a.rep->algebra();
    std::size_t N = g->dim;
    std::vector<PolyMatrix> partials;
    for (std::size_t i = 0; i < N; ++i) partials.push_back(a.matrix.derivative(i));
    for (std::size_t s = 0; s < N; ++s) {
        PolyMatrix lhs(g->coord_vars, a.rep->dim, a.rep->dim);
        for (std::size_t i = 0; i < N; ++i) {
            if (partials[i].is_zero()) continue;
            // i-th coordinate of [X_s, x] = sum_j x_j bracket[s][j][i].
            MultiPoly coord(g->coord_vars);
            for (std::size_t j = 0; j < N; ++j)
                if (g->bracket[s][j][i] != 0) coord.add_scaled(MultiPoly::variable(g->coord_vars, j), g->bracket[s][j][i]);
            if (!coord.is_zero()) lhs += coord * partials[i];
        }
        PolyMatrix rhs = a.rep->rho[s] * a.matrix - a.matrix * a.rep->rho[s];
        if (!(lhs == rhs)) return false;
    }
    return true;
}

KirillovElement commutator(const KirillovElement& a, const KirillovElement& b)
{
    if (a.rep != b.rep) throw Error("commutator: representation mismatch");
    return {a.rep, commutator(a.matrix, b.matrix), std::nullopt, "[" + a.label + "," + b.label + "]"};
}

KirillovElement product(const KirillovElement& a, const KirillovElement& b)
{
    if (a.rep != b.rep) throw Error("product: representation mismatch");
    std::optional<int> deg;
    if (a.degree && b.degree) deg = *a.degree + *b.degree;
    return {a.rep, a.matrix * b.matrix, deg, a.label + "*" + b.label};
}

std::optional<Rational> proportionality(const PolyMatrix& a, const PolyMatrix& b)
{
    auto pos = b.first_nonzero();
    if (!pos) throw Error("proportionality: reference matrix is zero");
    const MultiPoly& ref = b(pos->first, pos->second);
    const auto& lead = ref.terms().front();
    Rational r = a(pos->first, pos->second).coefficient(lead.first) / lead.second;
    if (a == b * r) return r;
    return std::nullopt;
}

}  // namespace bigalg
