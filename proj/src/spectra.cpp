#include "bigalg/spectra.hpp"

#include "bigalg/upoly.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace bigalg {

SkeletonRecipe default_recipe(int n)
{
    if (n == 2) return SkeletonRecipe::identity;
    if (n == 3) return SkeletonRecipe::set_c3_zero;
    return SkeletonRecipe::pullback_along_e_plus_tf;
}

std::string recipe_name(SkeletonRecipe r)
{
    switch (r) {
    case SkeletonRecipe::identity: return "identity";
    case SkeletonRecipe::set_c3_zero: return "set_c3_zero";
    case SkeletonRecipe::pullback_along_e_plus_tf: return "pullback_along_e_plus_tf";
    }
    return "";
}

Skeleton principal_restriction(const Calibration& cal, SkeletonRecipe recipe)
{
    int n = cal.rep->n;
    Skeleton sk;
    sk.recipe = recipe;
    for (const auto& g : cal.generators) sk.labels.push_back(g.section.label);
    auto cv = c_vars(n);
    switch (recipe) {
    case SkeletonRecipe::identity: {
        if (n != 2) throw Error("identity skeleton needs n = 2");
        sk.parameter = "c2";
        for (const auto& g : cal.generators) sk.operators.push_back(g.section.matrix);
        sk.invariants.push_back(MultiPoly::variable(cv, 0));
        break;
    }
    case SkeletonRecipe::set_c3_zero: {
        if (n != 3) throw Error("set_c3_zero skeleton needs n = 3");
        sk.parameter = "c2";
        auto pv = make_vars({"c2"});
        std::vector<MultiPoly> images{MultiPoly::variable(pv, 0), MultiPoly(pv)};
        for (const auto& g : cal.generators) sk.operators.push_back(g.section.matrix.substitute(images));
        sk.invariants = images;
        break;
    }
    case SkeletonRecipe::pullback_along_e_plus_tf: {
        sk.parameter = "t";
        auto tv = make_vars({"t"});
        auto g = cal.rep->algebra();
        std::vector<MultiPoly> images;
        MultiPoly t = MultiPoly::variable(tv, 0);
        for (std::size_t i = 0; i < g->dim; ++i)
            images.push_back(MultiPoly::constant(tv, g->e[i]) + t * g->f[i]);
        for (const auto& gen : cal.generators) sk.operators.push_back(gen.element.matrix.substitute(images));
        for (int k = 2; k <= n; ++k) sk.invariants.push_back(invariant_ck(n, k).substitute(images));
        break;
    }
    }
    return sk;
}

PrincipalSpectrum principal_spectrum(const Calibration& cal)
{
    const auto& rep = *cal.rep;
    auto g = rep.algebra();
    PrincipalSpectrum ps;
    auto cs = char_coefficients(g->element(g->h));
    ps.point.assign(cs.begin(), cs.end());
    std::vector<QMatrix> medium, big;
    for (const auto& gen : cal.generators) {
        QMatrix at_h = gen.element.evaluate(g->h);
        ps.big_labels.push_back(gen.section.label);
        big.push_back(at_h);
        if (gen.i == 1) {
            ps.medium_labels.push_back(gen.section.label);
            medium.push_back(at_h);
        }
    }
    for (const auto& [lambda, idx] : rep.weight_table) {
        std::vector<Rational> tuple;
        for (const auto& m : medium) {
            Rational s = m(idx[0], idx[0]);
            for (std::size_t j : idx)
                for (std::size_t a = 0; a < rep.dim; ++a)
                    if (m(a, j) != (a == j ? s : Rational(0)))
                        throw Error("principal_spectrum: medium operator is not scalar on weight " + weight_to_string(lambda));
            tuple.push_back(s);
        }
        ps.medium_eigen[lambda] = tuple;
    }
    std::set<std::vector<Rational>> seen;
    for (const auto& [lambda, t] : ps.medium_eigen) seen.insert(t);
    ps.injective = seen.size() == ps.medium_eigen.size();
    ps.big_blocks = joint_invariant_decomposition(big);
    return ps;
}

QMatrix evaluate_matrix_polynomial(const MultiPoly& p, const std::vector<QMatrix>& values)
{
    if (values.empty()) throw Error("evaluate_matrix_polynomial: no values");
    std::size_t d = values[0].rows();
    QMatrix acc(d, d);
    for (const auto& [m, c] : p.terms()) {
        QMatrix term = QMatrix::identity(d);
        for (std::size_t v = 0; v < values.size(); ++v)
            for (int e = 0; e < m.exp[v]; ++e) term = term * values[v];
        acc += term * c;
    }
    return acc;
}

std::vector<IdentityCheck> verify_quantum_number_identities(const Calibration& cal,
                                                            const std::vector<std::string>& identities)
{
    if (cal.rep->n != 3) throw Error("quantum number identities are defined for sl_3");
    auto g = cal.rep->algebra();
    QMatrix i3 = cal.get("M1").element.evaluate(g->h) * frac(1, 4);
    QMatrix y = cal.get("M2").element.evaluate(g->h) * frac(1, 4);
    auto vars = make_vars({"I3", "Y"});
    std::vector<IdentityCheck> out;
    for (const auto& text : identities)
        out.push_back({text, evaluate_matrix_polynomial(parse_polynomial(vars, text), {i3, y}).is_zero()});
    return out;
}

std::vector<Rational> parse_grid(const std::string& text)
{
    auto p1 = text.find(':');
    auto p2 = text.find(':', p1 == std::string::npos ? 0 : p1 + 1);
    if (p1 == std::string::npos || p2 == std::string::npos) throw Error("grid must look like a:b:steps");
    Rational a = parse_rational(text.substr(0, p1));
    Rational b = parse_rational(text.substr(p1 + 1, p2 - p1 - 1));
    long steps = std::stol(text.substr(p2 + 1));
    if (steps < 1 || b < a) throw Error("grid needs a <= b and steps >= 1");
    std::vector<Rational> out;
    for (long i = 0; i <= steps; ++i) out.push_back(a + (b - a) * frac(i, steps));
    return out;
}

std::vector<Rational> real_eigenvalues(const QMatrix& m, const Rational& eps)
{
    std::vector<Rational> out;
    for (const auto& [factor, mult] : squarefree_decomposition(charpoly(m))) {
        UPoly rest = factor;
        for (const auto& [r, k] : rational_roots(factor)) {
            for (int i = 0; i < mult; ++i) out.push_back(r);
            rest = divmod(rest, UPoly({-r, Rational(1)})).first;
        }
        for (auto iv : isolate_real_roots(rest)) {
            auto fine = refine_root(rest, iv, eps);
            Rational mid = (fine.first + fine.second) / 2;
            for (int i = 0; i < mult; ++i) out.push_back(mid);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string format_decimal(const Rational& r, int digits)
{
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    Rational a = abs(r) * scale + frac(1, 2);
    Integer q = a.get_num() / a.get_den();
    std::string s = q.get_str();
    if (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
    if (r < 0 && s != "0") s.insert(0, "-");
    return s;
}

namespace {

void emit_rows(const std::string& param, const std::vector<std::string>& labels, const std::vector<QMatrix>& mats,
               std::ostream& out, CsvReport& rep)
{
    // Large characteristic-polynomial slopes need many digits to keep the residual small.
    const int digits = 30;
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits + 4);
    const Rational eps = Rational(1) / Rational(scale);
    for (std::size_t gi = 0; gi < mats.size(); ++gi) {
        UPoly chi = charpoly(mats[gi]);
        auto vals = real_eigenvalues(mats[gi], eps);
        for (std::size_t b = 0; b < vals.size(); ++b) {
            std::string text = format_decimal(vals[b], digits);
            double res = std::fabs(chi.evaluate(parse_rational(text)).get_d());
            rep.max_residual = std::max(rep.max_residual, res);
            out << param << ',' << labels[gi] << ',' << b << ',' << text << '\n';
            ++rep.rows;
        }
    }
}

}  // namespace

CsvReport emit_skeleton_points(const Skeleton& sk, const std::vector<Rational>& grid, std::ostream& out)
{
    CsvReport rep;
    out << "param,generator,branch,value\n";
    for (const auto& p : grid) {
        std::vector<QMatrix> mats;
        for (const auto& op : sk.operators) mats.push_back(op.evaluate(std::vector<Rational>{p}));
        emit_rows(format_decimal(p), sk.labels, mats, out, rep);
    }
    rep.passed = rep.max_residual < 1e-9;
    return rep;
}

CsvReport emit_principal_points(const Calibration& cal, std::ostream& out)
{
    CsvReport rep;
    out << "param,generator,branch,value\n";
    auto g = cal.rep->algebra();
    auto cs = char_coefficients(g->element(g->h));
    QVector point(cs.begin(), cs.end());
    std::vector<QMatrix> mats;
    std::vector<std::string> labels;
    for (const auto& gen : cal.generators) {
        mats.push_back(gen.section.evaluate(point));
        labels.push_back(gen.section.label);
    }
    emit_rows(format_decimal(point[0]), labels, mats, out, rep);
    rep.passed = rep.max_residual < 1e-9;
    return rep;
}

SigmaData sigma_automorphism(const RepPtr& rep)
{
    const auto& mu = rep->mu;
    if (!std::equal(mu.begin(), mu.end(), mu.rbegin())) throw Error("sigma_automorphism: weight is not sigma-invariant");
    auto g = rep->algebra();
    std::size_t n = static_cast<std::size_t>(rep->n);
    QMatrix J(n, n), Jinv(n, n);
    for (std::size_t i = 0; i < n; ++i) J(i, n - 1 - i) = (i % 2 == 0) ? 1 : -1;
    Jinv = *inverse(J);
    SigmaData s;
    s.on_lie = QMatrix(g->dim, g->dim);
    for (std::size_t a = 0; a < g->dim; ++a)
        s.on_lie.set_column(a, g->coords(-(J * g->basis[a].transpose() * Jinv)));
    s.fixes_triple = s.on_lie.apply(g->e) == g->e && s.on_lie.apply(g->f) == g->f && s.on_lie.apply(g->h) == g->h;

    // Basis vectors are lowering words on the highest weight vector; S replays the words through sigma.
    std::size_t top = rep->weight_table.at(mu).front();
    std::vector<QMatrix> lowered;
    for (int i = 0; i + 1 < rep->n; ++i)
        lowered.push_back(rep->rho_of(s.on_lie.column(g->index_of(i + 1, i))));
    s.intertwiner = QMatrix(rep->dim, rep->dim);
    for (std::size_t j = 0; j < rep->dim; ++j) {
        QVector v(rep->dim);
        v[top] = 1;
        const auto& word = rep->words[j];
        for (auto it = word.rbegin(); it != word.rend(); ++it) v = lowered[static_cast<std::size_t>(*it)].apply(v);
        s.intertwiner.set_column(j, v);
    }
    s.intertwines = true;
    for (std::size_t a = 0; a < g->dim && s.intertwines; ++a)
        if (!(s.intertwiner * rep->rho[a] == rep->rho_of(s.on_lie.column(a)) * s.intertwiner)) s.intertwines = false;
    return s;
}

PolyMatrix apply_sigma(const SigmaData& s, const KirillovElement& f)
{
    auto g = f.rep->algebra();
    std::vector<MultiPoly> images(g->dim, MultiPoly(g->coord_vars));
    for (std::size_t i = 0; i < g->dim; ++i)
        for (std::size_t j = 0; j < g->dim; ++j)
            if (s.on_lie(i, j) != 0) images[i].add_scaled(MultiPoly::variable(g->coord_vars, j), s.on_lie(i, j));
    auto sinv = inverse(s.intertwiner);
    if (!sinv) throw Error("apply_sigma: intertwiner is singular");
    return s.intertwiner * f.matrix.substitute(images) * *sinv;
}

int sigma_eigenvalue(const SigmaData& s, const KirillovElement& f)
{
    PolyMatrix t = apply_sigma(s, f);
    if (t == f.matrix) return 1;
    if (t == f.matrix * Rational(-1)) return -1;
    return 0;
}

namespace {

using SparseKeyed = std::map<std::pair<std::size_t, Monomial>, Rational>;

QVector dense_image(const PolyMatrix& m, std::map<std::pair<std::size_t, Monomial>, std::size_t>& keys,
                    std::size_t reserve)
{
    QVector v(reserve);
    const auto& entries = m.entries();
    for (std::size_t e = 0; e < entries.size(); ++e)
        for (const auto& [cm, c] : entries[e].terms()) {
            auto it = keys.find({e, cm});
            if (it == keys.end()) throw Error("dense_image: unexpected coefficient key");
            v[it->second] = c;
        }
    return v;
}

void collect_keys(const PolyMatrix& m, std::map<std::pair<std::size_t, Monomial>, std::size_t>& keys)
{
    const auto& entries = m.entries();
    for (std::size_t e = 0; e < entries.size(); ++e)
        for (const auto& [cm, c] : entries[e].terms()) keys.emplace(std::make_pair(e, cm), keys.size());
}


}  // namespace

CoinvariantReport coinvariant_algebra(const Calibration& octet, int max_degree)
{
    if (octet.rep->n != 3 || octet.rep->mu != Weight{1, 1})
        throw Error("coinvariant_algebra: implemented for the sl_3 adjoint representation");
    CoinvariantReport rep;
    auto sigma = sigma_automorphism(octet.rep);
    if (!sigma.fixes_triple || !sigma.intertwines) throw Error("coinvariant_algebra: sigma data inconsistent");
    auto g = octet.rep->algebra();
    for (const auto& gen : octet.generators)
        rep.sigma_on_generators[gen.section.label] = sigma_eigenvalue(sigma, gen.element);
    for (int k = 2; k <= 3; ++k) {
        const auto& ck = invariant_ck(3, k);
        std::vector<MultiPoly> images(g->dim, MultiPoly(g->coord_vars));
        for (std::size_t i = 0; i < g->dim; ++i)
            for (std::size_t j = 0; j < g->dim; ++j)
                if (sigma.on_lie(i, j) != 0) images[i].add_scaled(MultiPoly::variable(g->coord_vars, j), sigma.on_lie(i, j));
        MultiPoly t = ck.substitute(images);
        rep.sigma_on_invariants["c" + std::to_string(k)] = t == ck ? 1 : (t == ck * Rational(-1) ? -1 : 0);
    }

    auto gens = octet.sections();
    auto ring = presentation_ring(gens, 3);
    std::vector<bool> odd(ring.weights.size(), false);
    for (std::size_t v = 0; v < ring.weights.size(); ++v) {
        const auto& name = ring.vars->name(v);
        int ev = v < ring.num_generators ? rep.sigma_on_generators.at(name) : rep.sigma_on_invariants.at(name);
        if (ev == 0) throw Error("coinvariant_algebra: sigma does not act diagonally on " + name);
        odd[v] = ev < 0;
    }
    // Even ring: fixed generators and fixed invariants.
    std::vector<std::string> even_names;
    std::vector<int> even_weights;
    std::vector<std::size_t> even_of;
    for (std::size_t v = 0; v < ring.weights.size(); ++v)
        if (!odd[v]) {
            even_of.push_back(v);
            even_names.push_back(ring.vars->name(v));
            even_weights.push_back(ring.weights[v]);
        }
    PresentationRing even{make_vars(even_names), even_weights, 0, 3};
    for (const auto& name : even_names)
        if (name[0] != 'c') ++even.num_generators;

    RelationEvaluator ev(ring, gens, octet.rep->dim);
    for (int d = 0; d <= max_degree; ++d) {
        auto monos = monomials_of_degree(ring, d);
        std::map<std::pair<std::size_t, Monomial>, std::size_t> keys;
        for (const auto& m : monos) collect_keys(ev.monomial(m), keys);
        EchelonBasis all(keys.size()), ideal(keys.size());
        for (const auto& m : monos) {
            QVector v = dense_image(ev.monomial(m), keys, keys.size());
            all.add(v);
            bool has_odd = false;
            for (std::size_t x = 0; x < odd.size(); ++x)
                if (odd[x] && m.exp[x] > 0) has_odd = true;
            if (has_odd) ideal.add(v);
        }
        rep.coinvariant_dims.push_back(all.size() - ideal.size());

        // Relations among even monomials modulo the odd ideal.
        auto emonos = monomials_of_degree(even, d);
        if (emonos.empty()) continue;
        QMatrix red(keys.size(), emonos.size());
        for (std::size_t j = 0; j < emonos.size(); ++j) {
            Monomial full;
            for (std::size_t x = 0; x < even_of.size(); ++x) full.exp[even_of[x]] = emonos[j].exp[x];
            QVector v = ideal.reduce(dense_image(ev.monomial(full), keys, keys.size()));
            for (std::size_t r = 0; r < keys.size(); ++r) red(r, j) = v[r];
        }
        auto ker = keys.empty() ? std::vector<QVector>{} : kernel(red);
        for (const auto& k : ker) {
            MultiPoly p(even.vars);
            for (std::size_t j = 0; j < emonos.size(); ++j)
                if (k[j] != 0) p += MultiPoly::term(even.vars, emonos[j], k[j]);
            auto with = rep.even_relations;
            with.push_back(p);
            if (ideal_dimension(even, with, d) > ideal_dimension(even, rep.even_relations, d))
                rep.even_relations.push_back(primitive_part(p));
        }
    }

    // Folded side: B^{w1}(sl_2).
    auto target_rep = build_irrep({1});
    auto target = calibrate_generators(target_rep);
    auto tgens = target.sections();
    auto tring = presentation_ring(tgens, 2);
    RelationEvaluator tev(tring, tgens, target_rep->dim);
    for (int d = 0; d <= max_degree; ++d) {
        auto monos = monomials_of_degree(tring, d);
        rep.target_dims.push_back(monos.size() - relation_space_dimension(tring, tev, d));
    }
    for (const auto& r : derive_relations(tring, tgens, target_rep->dim, max_degree))
        rep.target_relations.push_back(primitive_part(r));
    rep.hilbert_match = rep.coinvariant_dims == rep.target_dims;

    // Dictionary along the principal embedding: c2 = 4 c2', M1 = 4 M1'.
    for (const auto& r : rep.even_relations) {
        std::vector<MultiPoly> images;
        for (const auto& name : even_names) images.push_back(MultiPoly::variable(tring.vars, name) * Rational(4));
        rep.translated.push_back(primitive_part(r.substitute(images)));
    }
    rep.relations_match = rep.translated == rep.target_relations;

    // Fixed scheme: N1 = M2 = c3 = 0 in the displayed octet relations.
    const char* displayed[] = {"3*M1^2 + N1^2 + 12*c2", "M1^3*N1 + c2*M1*N1 - 9*c3*M1",
                               "M1^2*M2 + c2*M2 + 3*c3*M1", "M1^4 + 4*c2*M1^2 + 3*M2^2",
                               "3*M1*M2^2 + 9*c3*M2 - c2*M1^3 - 4*c2^2*M1"};
    std::vector<MultiPoly> to_even(ring.weights.size(), MultiPoly(even.vars));
    for (std::size_t x = 0; x < even_of.size(); ++x) to_even[even_of[x]] = MultiPoly::variable(even.vars, x);
    bool all_in = rep.even_relations.size() == 1;
    int nonzero = 0;
    for (const char* text : displayed) {
        MultiPoly s = parse_polynomial(ring.vars, text).substitute(to_even);
        if (s.is_zero()) continue;
        ++nonzero;
        if (all_in) {
            auto d = *s.homogeneous_degree(even.weights);
            auto with = rep.even_relations;
            with.push_back(s);
            if (ideal_dimension(even, with, d) != ideal_dimension(even, rep.even_relations, d)) all_in = false;
        }
    }
    rep.fixed_scheme_single = all_in && nonzero > 0;

    // Twining traces on sigma-fixed dominant weights (a, a) against weight a of the folded module.
    rep.jantzen_match = true;
    for (const auto& lambda : octet.rep->dominant_weights()) {
        if (lambda[0] != lambda[1]) continue;
        std::vector<QVector> basis;
        for (std::size_t j : octet.rep->weight_table.at(lambda)) {
            QVector v(octet.rep->dim);
            v[j] = 1;
            basis.push_back(v);
        }
        Rational tr = restrict_to(sigma.intertwiner, basis).trace();
        auto it = target_rep->weight_table.find(Weight{lambda[0]});
        std::size_t dim = it == target_rep->weight_table.end() ? 0 : it->second.size();
        rep.jantzen_traces.emplace_back(lambda, tr);
        rep.target_weight_dims.emplace_back(Weight{lambda[0]}, dim);
        if (tr != Rational(static_cast<long>(dim))) rep.jantzen_match = false;
    }
    return rep;
}

}  // namespace bigalg
