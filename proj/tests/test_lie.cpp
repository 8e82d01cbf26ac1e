#include "bigalg/lie.hpp"
#include "bigalg/random.hpp"
#include "bigalg/upoly.hpp"

#include "doctest.h"

using namespace bigalg;

TEST_CASE("build_sl structure")
{
    for (int n : {2, 3, 4}) {
        auto g = build_sl(n);
        CHECK(g->dim == static_cast<std::size_t>(n * n - 1));
        CHECK(g->positive_roots.size() == static_cast<std::size_t>(n * (n - 1) / 2));
        // Killing form from structure constants equals 2n * trace form.
        CHECK(killing_from_structure(*g) == g->killing);
        // Antisymmetry and Jacobi on all basis triples.
        for (std::size_t a = 0; a < g->dim; ++a)
            for (std::size_t b = 0; b < g->dim; ++b) {
                QVector s = g->bracket[a][b];
                for (std::size_t k = 0; k < g->dim; ++k) s[k] += g->bracket[b][a][k];
                CHECK(is_zero(s));
            }
        for (std::size_t a = 0; a < g->dim; ++a)
            for (std::size_t b = 0; b < g->dim; ++b)
                for (std::size_t c = 0; c < g->dim; ++c) {
                    QVector ea(g->dim), eb(g->dim), ec(g->dim);
                    ea[a] = eb[b] = ec[c] = 1;
                    QVector j1 = g->lie_bracket(ea, g->lie_bracket(eb, ec));
                    QVector j2 = g->lie_bracket(eb, g->lie_bracket(ec, ea));
                    QVector j3 = g->lie_bracket(ec, g->lie_bracket(ea, eb));
                    for (std::size_t k = 0; k < g->dim; ++k) j1[k] += j2[k] + j3[k];
                    CHECK(is_zero(j1));
                }
        // Principal triple relations.
        auto he = g->lie_bracket(g->h, g->e), hf = g->lie_bracket(g->h, g->f), ef = g->lie_bracket(g->e, g->f);
        for (std::size_t k = 0; k < g->dim; ++k) {
            CHECK(he[k] == 2 * g->e[k]);
            CHECK(hf[k] == -2 * g->f[k]);
            CHECK(ef[k] == g->h[k]);
        }
        CHECK(centralizer(*g, g->e).size() == static_cast<std::size_t>(n - 1));
        for (std::size_t i = 0; i + 1 < g->simple_roots.size() + 1; ++i)
            CHECK(inner_product(g->rho, g->simple_roots[i]) == 1);
    }
    CHECK_THROWS_AS(build_sl(1), Error);
}

TEST_CASE("sl2 Killing value and sl3 data")
{
    auto g2 = build_sl(2);
    QMatrix adh = g2->ad(g2->h);
    CHECK((adh * adh).trace() == 8);

    auto g3 = build_sl(3);
    Weight a12 = add(g3->simple_roots[0], g3->simple_roots[1]);
    CHECK(inner_product(g3->rho, a12) == 2);
    QMatrix h = g3->element(g3->h);
    CHECK(h == QMatrix::from_rows({{Rational(2), Rational(0), Rational(0)},
                                   {Rational(0), Rational(0), Rational(0)},
                                   {Rational(0), Rational(0), Rational(-2)}}));
}

TEST_CASE("weyl group")
{
    auto w2 = weyl_group(2);
    CHECK(w2.size() == 2);
    CHECK(w2[0].sign + w2[1].sign == 0);
    auto w3 = weyl_group(3);
    CHECK(w3.size() == 6);
    int s = 0;
    for (const auto& w : w3) s += w.sign;
    CHECK(s == 0);
    // Longest element sends rho to -rho.
    auto g3 = build_sl(3);
    bool found = false;
    for (const auto& w : w3)
        if (weyl_act(w, g3->rho) == Weight{-1, -1}) found = true;
    CHECK(found);
    // Inner-product invariance.
    Weight l{2, -1}, m{1, 3};
    for (const auto& w : w3) CHECK(inner_product(weyl_act(w, l), weyl_act(w, m)) == inner_product(l, m));
    CHECK_THROWS_AS(weyl_group(8), Error);
}

TEST_CASE("kostant section companion")
{
    PolyMatrix c2 = kostant_section_companion(2);
    CHECK(c2.to_string() == "[[0, -c2],\n [1, 0]]");
    // Direct 2x2 determinant of tI - C at a point: t^2 + c2.
    QMatrix p = kostant_section_companion(2, {Rational(5)});
    CHECK(charpoly(p) == UPoly({Rational(5), Rational(0), Rational(1)}));

    QMatrix z = kostant_section_companion(3, {Rational(0), Rational(0)});
    CHECK(rank(z) == 2);
    CHECK(power(z, 3).is_zero());

    QMatrix q = kostant_section_companion(3, {Rational(-7), Rational(4)});
    CHECK(charpoly(q) == UPoly({Rational(4), Rational(-7), Rational(0), Rational(1)}));
    CHECK(char_coefficients(q) == std::vector<Rational>{Rational(-7), Rational(4)});

    // Regularity at random points.
    Rng rng(11);
    for (int n : {2, 3, 4}) {
        auto g = build_sl(n);
        std::vector<Rational> c;
        for (int k = 2; k <= n; ++k) c.push_back(rng.small_nonzero());
        CHECK(centralizer(*g, g->coords(kostant_section_companion(n, c))).size() == static_cast<std::size_t>(n - 1));
    }
    // Section coordinates reproduce the companion.
    auto g3 = build_sl(3);
    auto sc = section_coordinates(*g3);
    std::vector<Rational> pt{Rational(-7), Rational(4)};
    QVector co;
    for (const auto& p3 : sc) co.push_back(p3.evaluate(pt));
    CHECK(g3->element(co) == q);
}

TEST_CASE("centralizer")
{
    auto g = build_sl(3);
    auto ch = centralizer(*g, g->h);
    CHECK(ch.size() == 2);
    for (const auto& v : ch) CHECK(g->element(v) == g->element(v).transpose());  // diagonal
    CHECK(centralizer(*g, QVector(g->dim)).size() == g->dim);
    auto ce = centralizer(*g, g->e);
    CHECK(ce.size() == 2);
    for (const auto& v : ce) CHECK(is_zero(g->lie_bracket(g->e, v)));
}

TEST_CASE("minuscule_min and lattice data")
{
    CHECK(minuscule_min({1, 1}) == Weight{0, 0});
    CHECK(minuscule_min({3, 0}) == Weight{0, 0});
    CHECK(minuscule_min({5}) == Weight{1});
    CHECK(minuscule_min({0, 1}) == Weight{0, 1});
    CHECK(weyl_dimension({3, 0}) == 10);
    CHECK(weyl_dimension({1, 1}) == 8);
    CHECK(weyl_dimension({0, 1, 0}) == 6);
    CHECK(simple_root_coords({1, 1}) == std::vector<int>{1, 1});
    CHECK_FALSE(simple_root_coords({1, 0}).has_value());
    CHECK(weight_on_h({1, 1}) == 4);
    CHECK(parse_weight("1,1", 3) == Weight{1, 1});
    CHECK_THROWS_AS(parse_weight("1", 3), Error);
}
