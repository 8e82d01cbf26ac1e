#include "bigalg/big_algebra.hpp"

#include "bigalg/linalg.hpp"
#include "bigalg/random.hpp"
#include "bigalg/upoly.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace bigalg {

namespace {

QMatrix unflatten(const QVector& v, std::size_t dim)
{
    QMatrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) m(i, j) = v[i * dim + j];
    return m;
}

QVector flatten(const QMatrix& m) { return m.data(); }

// Eigenvalue of m on the highest weight vector; nullopt if that vector is not an eigenvector.
std::optional<Rational> top_eigenvalue(const Representation& rep, const QMatrix& m)
{
    std::size_t top = rep.weight_table.at(rep.mu).front();
    QVector v(rep.dim);
    v[top] = 1;
    QVector w = m.apply(v);
    Rational lambda = w[top];
    for (std::size_t i = 0; i < rep.dim; ++i)
        if (w[i] != (i == top ? lambda : Rational(0))) return std::nullopt;
    return lambda;
}

// Integer multiple with coprime integer coefficients and positive leading coefficient.

std::vector<int> hilbert_weights(const Representation& rep)
{
    std::vector<int> hw(rep.dim);
    for (std::size_t a = 0; a < rep.dim; ++a) hw[a] = weight_on_h(rep.weights[a]);
    return hw;
}

}  // namespace

QMatrix SectionOperator::evaluate(const QVector& cvals) const { return evaluate_at(*this, cvals); }

SectionOperator restrict_to_section(const KirillovElement& a)
{
    auto g = a.rep->algebra();
    auto coords = section_coordinates(*g);
    return {a.label, a.degree.value_or(0), a.matrix.substitute(coords)};
}

QMatrix evaluate_at(const SectionOperator& op, const QVector& cvals)
{
    if (cvals.size() != op.matrix.vars()->size())
        throw Error("evaluate_at: expected " + std::to_string(op.matrix.vars()->size()) + " invariant values, got " +
                    std::to_string(cvals.size()));
    return op.matrix.evaluate(cvals);
}

SectionOperator invariant_section(int n, std::size_t dim, int k)
{
    auto cv = c_vars(n);
    return {"c" + std::to_string(k), k, PolyMatrix::scalar(MultiPoly::variable(cv, static_cast<std::size_t>(k - 2)), dim)};
}

std::string generator_label(int n, int i, int k)
{
    if (i == 1) return "M" + std::to_string(k - 1);
    if (n == 3 && i == 2 && k == 3) return "N1";
    return "B" + std::to_string(i) + "_" + std::to_string(k - i);
}

std::vector<SectionOperator> Calibration::sections() const
{
    std::vector<SectionOperator> out;
    for (const auto& g : generators) out.push_back(g.section);
    return out;
}

const CalibratedGenerator& Calibration::get(const std::string& label) const
{
    for (const auto& g : generators)
        if (g.section.label == label) return g;
    throw Error("no generator named " + label);
}

bool Calibration::ok() const
{
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

Calibration calibrate_generators(const RepPtr& rep)
{
    int n = rep->n;
    auto g = rep->algebra();
    Calibration cal;
    cal.rep = rep;
    // Order: i ascending, then k ascending, which lists M's before higher D-powers.
    for (int i = 1; i < n; ++i)
        for (int k = i + 1; k <= n; ++k) {
            CalibratedGenerator cg;
            cg.i = i;
            cg.k = k;
            Integer base = -4 * n;
            Integer s;
            mpz_pow_ui(s.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(i));
            cg.scalar = Rational(s);
            cg.element = big_operator(rep, i, k);
            cg.element.matrix *= cg.scalar;
            cg.element.label = generator_label(n, i, k);
            cg.section = restrict_to_section(cg.element);
            cal.generators.push_back(std::move(cg));
        }

    auto anchor = [&](const std::string& label, const Rational& expected) {
        const auto& gen = cal.get(label);
        QMatrix at_h = gen.element.evaluate(g->h);
        if (at_h.is_zero() && expected != 0) throw Error("calibrate_generators: degenerate generator " + label);
        auto lambda = top_eigenvalue(*rep, at_h);
        CalibrationCheck c{label + " on the highest weight at h", expected, lambda.value_or(Rational(0)), false};
        c.passed = lambda && *lambda == expected;
        cal.checks.push_back(c);
    };
    anchor("M1", weight_on_h(rep->mu));
    if (n == 3) {
        auto eps = to_epsilon(rep->mu);
        anchor("M2", -4 * eps[1]);  // 4Y, where Y = -eps_2 since h = diag(2, 0, -2)
    }
    if (n == 3 && rep->mu == Weight{1, 1}) {
        auto ring = presentation_ring(cal.sections(), n);
        RelationEvaluator ev(ring, cal.sections(), rep->dim);
        bool zero = ev.evaluate(parse_polynomial(ring.vars, "3*M1^2 + N1^2 + 12*c2")).is_zero();
        cal.checks.push_back({"3*M1^2 + N1^2 + 12*c2 vanishes", 1, zero ? 1 : 0, zero});
    }
    return cal;
}

PresentationRing presentation_ring(const std::vector<SectionOperator>& gens, int n)
{
    PresentationRing r;
    r.n = n;
    std::vector<std::string> names;
    for (const auto& gop : gens) {
        names.push_back(gop.label);
        r.weights.push_back(gop.degree);
    }
    r.num_generators = gens.size();
    for (int k = 2; k <= n; ++k) {
        names.push_back("c" + std::to_string(k));
        r.weights.push_back(k);
    }
    r.vars = make_vars(names);
    return r;
}

std::vector<Monomial> monomials_of_degree(const PresentationRing& ring, int d)
{
    std::vector<Monomial> out;
    Monomial cur;
    std::size_t nv = ring.weights.size();
    std::function<void(std::size_t, int)> rec = [&](std::size_t v, int left) {
        if (v == nv) {
            if (left == 0) out.push_back(cur);
            return;
        }
        int w = ring.weights[v];
        if (w <= 0) throw Error("monomials_of_degree: nonpositive variable weight");
        for (int e = left / w; e >= 0; --e) {
            cur.exp[v] = static_cast<std::int16_t>(e);
            rec(v + 1, left - e * w);
        }
        cur.exp[v] = 0;
    };
    rec(0, d);
    return out;
}

RelationEvaluator::RelationEvaluator(const PresentationRing& ring, const std::vector<SectionOperator>& gens,
                                     std::size_t dim)
    : ring_(ring), gens_(gens), dim_(dim), cvars_(c_vars(ring.n))
{
    if (gens.size() != ring.num_generators) throw Error("RelationEvaluator: generator count mismatch");
}

const PolyMatrix& RelationEvaluator::monomial(const Monomial& m)
{
    auto it = memo_.find(m);
    if (it != memo_.end()) return it->second;
    PolyMatrix val;
    std::size_t j = 0;
    while (j < ring_.num_generators && m.exp[j] == 0) ++j;
    if (j == ring_.num_generators) {
        Monomial cm;
        for (std::size_t k = 0; k + ring_.num_generators < ring_.weights.size(); ++k)
            cm.exp[k] = m.exp[k + ring_.num_generators];
        val = PolyMatrix::scalar(MultiPoly::term(cvars_, cm, 1), dim_);
    } else {
        Monomial rest = m;
        rest.exp[j] -= 1;
        val = monomial(rest) * gens_[j].matrix;
    }
    return memo_.emplace(m, std::move(val)).first->second;
}

PolyMatrix RelationEvaluator::evaluate(const MultiPoly& relation)
{
    PolyMatrix acc(cvars_, dim_, dim_);
    for (const auto& [m, c] : relation.terms()) acc += monomial(m) * c;
    return acc;
}

QPolynomial hilbert_numerator_formula(const Weight& mu)
{
    int n = static_cast<int>(mu.size()) + 1;
    auto g = build_sl(n);
    Weight shifted = add(mu, g->rho);
    std::vector<int> num, den;
    for (const auto& a : g->positive_roots) {
        Rational x = inner_product(shifted, a), y = inner_product(g->rho, a);
        num.push_back(static_cast<int>(x.get_num().get_si()));
        den.push_back(static_cast<int>(y.get_num().get_si()));
    }
    return product_quotient(num, den);
}

std::vector<QVector> generated_algebra(const std::vector<QMatrix>& gens, std::size_t dim)
{
    EchelonBasis eb(dim * dim);
    std::vector<QMatrix> elems;
    QMatrix id = QMatrix::identity(dim);
    eb.add(flatten(id));
    elems.push_back(id);
    for (std::size_t idx = 0; idx < elems.size(); ++idx)
        for (const auto& gm : gens) {
            QMatrix p = gm * elems[idx];
            if (eb.add(flatten(p))) elems.push_back(std::move(p));
        }
    return eb.basis();
}

HilbertSeries hilbert_series(const RepPtr& rep, const std::vector<SectionOperator>& gens)
{
    HilbertSeries hs;
    std::size_t dim = rep->dim;
    hs.rep_dimension = dim;
    int n = rep->n;
    for (int k = 2; k <= n; ++k) hs.denominator_exponents.push_back(k);
    QVector zero(static_cast<std::size_t>(n - 1));
    std::vector<QMatrix> at_e;
    for (const auto& gop : gens) at_e.push_back(gop.evaluate(zero));
    auto hw = hilbert_weights(*rep);

    for (std::size_t t = 0; t < gens.size(); ++t)
        for (std::size_t a = 0; a < dim; ++a)
            for (std::size_t b = 0; b < dim; ++b)
                if (at_e[t](a, b) != 0 && hw[a] - hw[b] != -2 * gens[t].degree) hs.homogeneous = false;

    auto span = generated_algebra(at_e, dim);
    hs.fiber_dimension = span.size();
    // The section meets the nilpotent cone at the lowering element, so degree d sits in
    // ad rho(h) weight -2d. Split the span into weight components; it is stable under them.
    std::map<int, std::vector<QVector>> parts;
    for (const auto& v : span) {
        std::map<int, QVector> comp;
        for (std::size_t a = 0; a < dim; ++a)
            for (std::size_t b = 0; b < dim; ++b) {
                const Rational& x = v[a * dim + b];
                if (x == 0) continue;
                auto& c = comp[hw[a] - hw[b]];
                if (c.empty()) c.assign(dim * dim, Rational(0));
                c[a * dim + b] = x;
            }
        for (auto& [w, c] : comp) parts[w].push_back(std::move(c));
    }
    std::size_t total = 0;
    for (const auto& [w, vs] : parts) {
        std::size_t r = span_basis(vs, dim * dim).size();
        total += r;
        if (w % 2 != 0 || w > 0) hs.homogeneous = false;
        hs.numerator.add(Rational(-w, 2), static_cast<long>(r));
    }
    if (total != hs.fiber_dimension) hs.homogeneous = false;
    hs.formula = hilbert_numerator_formula(rep->mu);
    hs.agree = hs.homogeneous && hs.numerator == hs.formula && hs.numerator.at_one() == Integer(static_cast<long>(dim)) &&
               hs.fiber_dimension == dim;
    return hs;
}

namespace {

// Kernel of the evaluation map on degree-d monomials.
std::vector<QVector> relation_kernel(RelationEvaluator& ev, const std::vector<Monomial>& monos)
{
    std::map<std::pair<std::size_t, Monomial>, std::size_t> key_index;
    std::vector<std::vector<std::pair<std::size_t, Rational>>> cols(monos.size());
    for (std::size_t j = 0; j < monos.size(); ++j) {
        const PolyMatrix& m = ev.monomial(monos[j]);
        const auto& entries = m.entries();
        for (std::size_t e = 0; e < entries.size(); ++e)
            for (const auto& [cm, c] : entries[e].terms()) {
                auto [it, fresh] = key_index.emplace(std::make_pair(e, cm), key_index.size());
                cols[j].emplace_back(it->second, c);
            }
    }
    QMatrix a(key_index.size(), monos.size());
    for (std::size_t j = 0; j < monos.size(); ++j)
        for (const auto& [r, c] : cols[j]) a(r, j) = c;
    if (key_index.empty()) {
        std::vector<QVector> all;
        for (std::size_t j = 0; j < monos.size(); ++j) {
            QVector v(monos.size());
            v[j] = 1;
            all.push_back(v);
        }
        return all;
    }
    return kernel(a);
}

void add_ideal_multiples(const PresentationRing& ring, const std::vector<MultiPoly>& relations, int d,
                         const std::map<Monomial, std::size_t>& index, EchelonBasis& eb)
{
    for (const auto& r : relations) {
        auto rd = r.homogeneous_degree(ring.weights);
        if (!rd) throw Error("relation is not weighted homogeneous: " + r.to_string());
        if (*rd > d) continue;
        for (const auto& u : monomials_of_degree(ring, d - *rd)) {
            QVector v(index.size());
            for (const auto& [m, c] : r.terms()) v[index.at(m + u)] += c;
            eb.add(v);
        }
    }
}

MultiPoly vector_to_poly(const PresentationRing& ring, const std::vector<Monomial>& monos, const QVector& v)
{
    MultiPoly p(ring.vars);
    for (std::size_t j = 0; j < monos.size(); ++j)
        if (v[j] != 0) p += MultiPoly::term(ring.vars, monos[j], v[j]);
    return p;
}

std::map<Monomial, std::size_t> index_of_monomials(const std::vector<Monomial>& monos)
{
    std::map<Monomial, std::size_t> idx;
    for (std::size_t j = 0; j < monos.size(); ++j) idx[monos[j]] = j;
    return idx;
}

}  // namespace

std::vector<MultiPoly> derive_relations(const PresentationRing& ring, const std::vector<SectionOperator>& gens,
                                        std::size_t dim, int max_degree)
{
    RelationEvaluator ev(ring, gens, dim);
    std::vector<MultiPoly> rels;
    for (int d = 1; d <= max_degree; ++d) {
        auto monos = monomials_of_degree(ring, d);
        if (monos.empty()) continue;
        auto idx = index_of_monomials(monos);
        EchelonBasis ideal(monos.size());
        add_ideal_multiples(ring, rels, d, idx, ideal);
        std::vector<MultiPoly> fresh;
        for (const auto& v : relation_kernel(ev, monos))
            if (ideal.add(v)) fresh.push_back(primitive_part(vector_to_poly(ring, monos, v)));
        rels.insert(rels.end(), fresh.begin(), fresh.end());
    }
    return rels;
}

std::size_t ideal_dimension(const PresentationRing& ring, const std::vector<MultiPoly>& relations, int d)
{
    auto monos = monomials_of_degree(ring, d);
    auto idx = index_of_monomials(monos);
    EchelonBasis eb(monos.size());
    add_ideal_multiples(ring, relations, d, idx, eb);
    return eb.size();
}

std::size_t relation_space_dimension(const PresentationRing& ring, RelationEvaluator& ev, int d)
{
    auto monos = monomials_of_degree(ring, d);
    if (monos.empty()) return 0;
    return relation_kernel(ev, monos).size();
}

PresentationReport verify_presentation(const PresentationRing& ring, const std::vector<SectionOperator>& gens,
                                       std::size_t dim, const std::vector<MultiPoly>& relations, int max_degree)
{
    PresentationReport rep;
    RelationEvaluator ev(ring, gens, dim);
    rep.annihilates = true;
    for (const auto& r : relations) {
        RelationCheck c;
        c.relation = r.to_string();
        PolyMatrix val = ev.evaluate(r);
        c.zero = val.is_zero();
        if (!c.zero) {
            auto pos = val.first_nonzero();
            c.first_nonzero = "entry (" + std::to_string(pos->first) + "," + std::to_string(pos->second) +
                              "): " + val(pos->first, pos->second).to_string();
            rep.annihilates = false;
        }
        rep.relations.push_back(std::move(c));
    }
    rep.graded_dims_match = true;
    for (int d = 0; d <= max_degree; ++d) {
        rep.ideal_dims.push_back(ideal_dimension(ring, relations, d));
        rep.kernel_dims.push_back(relation_space_dimension(ring, ev, d));
        if (rep.ideal_dims.back() != rep.kernel_dims.back()) rep.graded_dims_match = false;
    }
    return rep;
}

bool FreenessReport::passed() const
{
    if (random_points.empty()) return false;
    for (const auto& p : random_points)
        if (p.span_dimension != rep_dimension || !p.cyclic || !p.simple) return false;
    return nilpotent_point.span_dimension == rep_dimension && nilpotent_point.cyclic;
}

FreenessReport freeness_and_rank_check(const RepPtr& rep, const std::vector<SectionOperator>& gens, std::uint64_t seed,
                                       int points)
{
    Rng rng(seed);
    std::size_t dim = rep->dim;
    std::size_t nc = static_cast<std::size_t>(rep->n - 1);
    FreenessReport out;
    out.rep_dimension = dim;
    auto check = [&](const QVector& cvals) {
        PointCheck pc;
        pc.cvals = cvals;
        std::vector<QMatrix> mats;
        for (const auto& gop : gens) mats.push_back(gop.evaluate(cvals));
        auto span = generated_algebra(mats, dim);
        pc.span_dimension = span.size();
        QVector v(dim);
        for (auto& x : v) x = rng.small_nonzero();
        std::vector<QVector> orbit;
        for (const auto& b : span) orbit.push_back(unflatten(b, dim).apply(v));
        pc.cyclic = span_basis(orbit, dim).size() == dim;
        QMatrix combo(dim, dim);
        for (const auto& m : mats) combo += m * rng.small_nonzero();
        pc.simple = is_squarefree(charpoly(combo));
        return pc;
    };
    for (int p = 0; p < points; ++p) {
        QVector c(nc);
        for (auto& x : c) x = rng.small_nonzero();
        out.random_points.push_back(check(c));
    }
    out.nilpotent_point = check(QVector(nc));
    return out;
}

}  // namespace bigalg
