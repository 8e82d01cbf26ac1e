#include "bigalg/multiplicity.hpp"

#include "bigalg/linalg.hpp"

#include <algorithm>

namespace bigalg {

namespace {

QVector unit(std::size_t dim, std::size_t i)
{
    QVector v(dim);
    v[i] = 1;
    return v;
}

QMatrix unflatten(const QVector& v, std::size_t dim)
{
    QMatrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) m(i, j) = v[i * dim + j];
    return m;
}

Rational rational_pow(const Rational& z, int k)
{
    Rational r = 1;
    Rational b = k >= 0 ? z : Rational(1) / z;
    for (int i = 0; i < std::abs(k); ++i) r *= b;
    return r;
}

bool is_scalar(const QMatrix& m)
{
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != (i == j ? m(0, 0) : Rational(0))) return false;
    return true;
}

Integer shift_of(const Weight& mu, const Weight& lambda)
{
    auto g = build_sl(static_cast<int>(mu.size()) + 1);
    Rational s = inner_product(sub(mu, lambda), g->rho);
    if (!is_integer(s)) throw Error("lambda is not in the root class of mu");
    return s.get_num();
}

}  // namespace

QPolynomial qkostant_partition(const Weight& pi, int n)
{
    if (n > 5) throw Error("qkostant_partition: rank guard n <= 5 exceeded");
    if (static_cast<int>(pi.size()) != n - 1) throw Error("qkostant_partition: weight length mismatch");
    auto b = simple_root_coords(pi);
    if (!b) return {};
    for (int x : *b)
        if (x < 0) return {};
    auto g = build_sl(n);
    std::size_t r = b->size();
    std::vector<std::size_t> stride(r);
    std::size_t total = 1;
    for (std::size_t i = r; i-- > 0;) {
        stride[i] = total;
        total *= static_cast<std::size_t>((*b)[i] + 1);
    }
    std::vector<QPolynomial> cur(total);
    cur[0] = QPolynomial::one();
    QPolynomial q = QPolynomial::monomial(1, 1);
    std::vector<int> v(r);
    for (const auto& alpha : g->positive_roots_simple) {
        // Multiply by 1 / (1 - q e^alpha): in increasing order, cur[v] += q * cur[v - alpha].
        for (std::size_t idx = 0; idx < total; ++idx) {
            std::size_t rem = idx;
            bool fits = true;
            std::size_t back = idx;
            for (std::size_t i = 0; i < r; ++i) {
                v[i] = static_cast<int>(rem / stride[i]);
                rem %= stride[i];
                if (v[i] < alpha[i]) fits = false;
            }
            if (!fits) continue;
            for (std::size_t i = 0; i < r; ++i) back -= static_cast<std::size_t>(alpha[i]) * stride[i];
            if (!cur[back].is_zero()) cur[idx] += q * cur[back];
        }
    }
    return cur[total - 1];
}

QPolynomial lusztig_m(const Weight& mu, const Weight& lambda)
{
    int n = static_cast<int>(mu.size()) + 1;
    if (!is_dominant(mu) || !is_dominant(lambda)) throw Error("lusztig_m: weights must be dominant");
    auto g = build_sl(n);
    Weight mr = add(mu, g->rho), lr = add(lambda, g->rho);
    QPolynomial acc;
    for (const auto& w : weyl_group(n)) {
        QPolynomial p = qkostant_partition(sub(weyl_act(w, mr), lr), n);
        if (w.sign > 0) acc += p;
        else acc -= p;
    }
    return acc;
}

Torus parse_torus(const std::string& text)
{
    if (text == "standard") return Torus::standard;
    if (text == "h_plus_e" || text == "h+e") return Torus::h_plus_e;
    throw Error("unknown torus: " + text);
}

std::string torus_name(Torus t) { return t == Torus::standard ? "standard" : "h_plus_e"; }

QMatrix unipotent_twist(const Representation& rep)
{
    auto g = rep.algebra();
    QMatrix x = rep.rho_of(g->e) * frac(-1, 2);
    QMatrix acc = QMatrix::identity(rep.dim), term = acc;
    for (long k = 1; k <= static_cast<long>(rep.dim); ++k) {
        term = term * x * frac(1, k);
        if (term.is_zero()) break;
        acc += term;
    }
    return acc;
}

std::vector<QVector> torus_weight_space(const Representation& rep, const Weight& lambda, Torus torus)
{
    auto it = rep.weight_table.find(lambda);
    if (it == rep.weight_table.end()) throw Error("not a weight of the representation: " + weight_to_string(lambda));
    std::vector<QVector> out;
    QMatrix twist = torus == Torus::h_plus_e ? unipotent_twist(rep) : QMatrix::identity(rep.dim);
    for (std::size_t i : it->second) out.push_back(twist.column(i));
    return out;
}

BrylinskiFiltration brylinski_filtration(const Representation& rep, const Weight& lambda, Torus torus)
{
    BrylinskiFiltration bf;
    bf.lambda = lambda;
    bf.torus = torus;
    bf.ambient = torus_weight_space(rep, lambda, torus);
    auto g = rep.algebra();
    QMatrix e = rep.rho_of(g->e);
    QMatrix pw = e;
    std::size_t prev = 0;
    for (int p = 0; prev < bf.ambient.size(); ++p) {
        if (p > static_cast<int>(rep.dim)) throw Error("brylinski_filtration: filtration does not exhaust");
        auto fp = matrix_kernel_on(pw, bf.ambient);
        bf.dims.push_back(fp.size());
        if (fp.size() > prev) bf.jump_series.add(p, static_cast<long>(fp.size() - prev));
        prev = fp.size();
        bf.F.push_back(std::move(fp));
        pw = pw * e;
    }
    return bf;
}

std::vector<QVector> e_limit(const Representation& rep, const Weight& lambda, LimitMethod method)
{
    auto g = rep.algebra();
    if (method == LimitMethod::filtration_sum) {
        auto bf = brylinski_filtration(rep, lambda, Torus::h_plus_e);
        QMatrix e = rep.rho_of(g->e);
        std::vector<QVector> gens;
        QMatrix pw = QMatrix::identity(rep.dim);
        for (const auto& fp : bf.F) {
            for (const auto& v : fp) gens.push_back(pw.apply(v));
            pw = pw * e;
        }
        return span_basis(gens, rep.dim);
    }
    // H^z scales an h-weight m component by w^{-m}, w = z^{1/2}.
    auto basis = torus_weight_space(rep, lambda, Torus::h_plus_e);
    auto wv = make_vars({"w"}, "w");
    PolyMatrix cols(wv, rep.dim, basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t a = 0; a < rep.dim; ++a) {
            if (basis[j][a] == 0) continue;
            Monomial m;
            m.exp[0] = static_cast<std::int16_t>(-weight_on_h(rep.weights[a]));
            cols(a, j) = MultiPoly::term(wv, m, basis[j][a]);
        }
    return limit_of_span(cols, 0);
}

std::vector<QVector> centralizer_invariants(const Representation& rep)
{
    auto g = rep.algebra();
    std::vector<QVector> rows;
    for (const auto& x : centralizer(*g, g->e)) {
        QMatrix m = rep.rho_of(x);
        for (std::size_t i = 0; i < rep.dim; ++i) rows.push_back(m.row(i));
    }
    if (rows.empty()) {
        std::vector<QVector> all;
        for (std::size_t i = 0; i < rep.dim; ++i) all.push_back(unit(rep.dim, i));
        return all;
    }
    return kernel(QMatrix::from_rows(rows));
}

bool twisted_weight_space_check(const Representation& rep, const Weight& lambda, const Rational& z)
{
    if (z == 0) throw Error("twisted_weight_space_check: z must be nonzero");
    auto g = rep.algebra();
    auto basis = torus_weight_space(rep, lambda, Torus::h_plus_e);
    // Weights in one module share parity, so w^{-(m - m_top)} is an integer power of z.
    int top = weight_on_h(rep.mu);
    for (auto& v : basis)
        for (std::size_t a = 0; a < rep.dim; ++a)
            if (v[a] != 0) v[a] *= rational_pow(z, (top - weight_on_h(rep.weights[a])) / 2);
    QVector hz = g->e;
    for (std::size_t i = 0; i < hz.size(); ++i) hz[i] += z * g->h[i];
    for (const auto& x : centralizer(*g, hz)) {
        try {
            if (!is_scalar(restrict_to(rep.rho_of(x), basis))) return false;
        } catch (const Error&) {
            return false;
        }
    }
    return true;
}

GeneratorsAtE generators_at_e(const Calibration& cal)
{
    GeneratorsAtE out;
    auto g = cal.rep->algebra();
    for (const auto& gen : cal.generators) {
        out.labels.push_back(gen.section.label);
        out.degrees.push_back(gen.section.degree);
        out.matrices.push_back(gen.element.evaluate(g->e));
        out.medium.push_back(gen.i == 1);
    }
    return out;
}

MultiplicityAlgebra multiplicity_algebra(const Representation& rep, const GeneratorsAtE& gens, const Weight& lambda)
{
    MultiplicityAlgebra qa;
    qa.lambda = lambda;
    qa.labels = gens.labels;
    qa.limit_space = e_limit(rep, lambda, LimitMethod::filtration_sum);
    std::size_t d = qa.limit_space.size();
    try {
        for (const auto& m : gens.matrices) qa.operators.push_back(restrict_to(m, qa.limit_space));
    } catch (const Error&) {
        throw Error("multiplicity_algebra: limit space is not invariant under the generators");
    }
    qa.invariant = true;

    // Q^i = span of restricted monomials of generator degree i.
    int maxdeg = 1;
    for (int x : gens.degrees) maxdeg = std::max(maxdeg, x);
    std::vector<std::vector<QMatrix>> levels;
    levels.push_back({QMatrix::identity(d)});
    EchelonBasis total(d * d);
    total.add(QMatrix::identity(d).data());
    int empty_run = 0;
    for (int i = 1; empty_run < maxdeg; ++i) {
        EchelonBasis eb(d * d);
        std::vector<QMatrix> level;
        for (std::size_t j = 0; j < qa.operators.size(); ++j) {
            int dj = gens.degrees[j];
            if (dj > i) continue;
            for (const auto& b : levels[static_cast<std::size_t>(i - dj)]) {
                QMatrix p = qa.operators[j] * b;
                if (eb.add(p.data())) level.push_back(std::move(p));
            }
        }
        for (const auto& m : level)
            if (!total.add(m.data())) throw Error("multiplicity_algebra: grading is not direct");
        empty_run = level.empty() ? empty_run + 1 : 0;
        levels.push_back(std::move(level));
        if (i > static_cast<int>(d * d) + maxdeg) throw Error("multiplicity_algebra: grading does not terminate");
    }
    while (!levels.empty() && levels.back().empty()) levels.pop_back();
    Integer shift = shift_of(rep.mu, lambda);
    for (std::size_t i = 0; i < levels.size(); ++i) {
        qa.graded_dims.push_back(levels[i].size());
        if (!levels[i].empty()) qa.hilbert.add(Rational(shift - static_cast<long>(i)), static_cast<long>(levels[i].size()));
    }
    qa.graded_basis = std::move(levels);
    for (const auto& op : qa.operators) {
        int k = 0;
        QMatrix pw = QMatrix::identity(d);
        for (int s = 1; s <= static_cast<int>(d) + 1; ++s) {
            pw = pw * op;
            if (pw.is_zero()) {
                k = s;
                break;
            }
        }
        qa.nilpotency.push_back(k);
    }
    return qa;
}

QuotientReport quotient_chain_check(const Representation& rep, const GeneratorsAtE& gens, const Weight& lambda)
{
    QuotientReport out;
    Weight mmin = minuscule_min(rep.mu);
    auto lmin = e_limit(rep, mmin, LimitMethod::filtration_sum);
    auto llam = e_limit(rep, lambda, LimitMethod::filtration_sum);
    out.chain = subspace_contains(lmin, llam, rep.dim);
    // Q_min -> Q_lambda: restricting through lim V_min must keep lim V_lambda stable.
    if (out.chain) {
        try {
            for (const auto& m : gens.matrices) {
                QMatrix r = restrict_to(m, lmin);
                std::vector<QVector> coords;
                EchelonBasis eb(rep.dim, true);
                for (const auto& b : lmin) eb.add(b);
                for (const auto& v : llam) coords.push_back(*eb.coordinates(v));
                restrict_to(r, coords);
            }
        } catch (const Error&) {
            out.chain = false;
        }
    }
    auto fiber = generated_algebra(gens.matrices, rep.dim);
    out.fiber_dimension = fiber.size();
    std::vector<QVector> ideal;
    for (std::size_t j = 0; j < gens.matrices.size(); ++j) {
        if (!gens.medium[j]) continue;
        for (const auto& b : fiber) ideal.push_back((unflatten(b, rep.dim) * gens.matrices[j]).data());
    }
    out.quotient_dimension = fiber.size() - span_basis(ideal, rep.dim * rep.dim).size();
    std::vector<QVector> restricted;
    for (const auto& b : fiber) restricted.push_back(restrict_to(unflatten(b, rep.dim), lmin).data());
    out.minimal_dimension = span_basis(restricted, lmin.size() * lmin.size()).size();
    out.medium_annihilates = true;
    for (std::size_t j = 0; j < gens.matrices.size(); ++j)
        if (gens.medium[j] && !restrict_to(gens.matrices[j], lmin).is_zero()) out.medium_annihilates = false;
    return out;
}

}  // namespace bigalg
