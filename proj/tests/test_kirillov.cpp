#include "doctest.h"

#include "bigalg/kirillov.hpp"
#include "bigalg/random.hpp"
#include "bigalg/upoly.hpp"

using namespace bigalg;

namespace {

QVector random_point(Rng& rng, std::size_t n)
{
    QVector x(n);
    for (auto& v : x) v = rng.small_nonzero();
    return x;
}

}  // namespace

TEST_CASE("invariant polynomials agree with the characteristic polynomial")
{
    Rng rng(7);
    for (int n = 2; n <= 4; ++n) {
        auto g = build_sl(n);
        for (int trial = 0; trial < 3; ++trial) {
            QVector x = random_point(rng, g->dim);
            QMatrix A = g->element(x);
            UPoly chi = charpoly(A);
            for (int k = 2; k <= n; ++k)
                CHECK(invariant_ck(n, k).evaluate(x) == chi.coeff(static_cast<std::size_t>(n - k)));
        }
    }
    auto g2 = build_sl(2);
    CHECK(invariant_ck(2, 2).evaluate(g2->h) == -1);
    auto g3 = build_sl(3);
    CHECK(invariant_ck(3, 2).evaluate(g3->h) == -4);
    CHECK(invariant_ck(3, 3).evaluate(g3->h) == 0);
    CHECK(invariant_ck(3, 2).homogeneous_degree() == 2);
    CHECK_THROWS_AS(invariant_ck(3, 4), Error);
}

TEST_CASE("small and medium operators")
{
    auto rep = build_irrep({3, 0});
    auto small = small_operator(rep);
    CHECK(small.degree == 1);
    CHECK(medium_operator(rep, 2).matrix == small.matrix * Rational(-1));
    auto g = rep->algebra();
    QMatrix m1 = small.evaluate(g->h);
    QMatrix m2 = medium_operator(rep, 3).evaluate(g->h);
    // Highest weight vector sits at index 0.
    QVector top(rep->dim);
    top[0] = 1;
    CHECK(m1.apply(top)[0] == 6);
    CHECK(m2.apply(top)[0] == -4);
    CHECK(equivariance_check(small));
    CHECK(equivariance_check(medium_operator(rep, 3)));
}

TEST_CASE("D(c_k) is proportional to the medium operator")
{
    for (auto mu : std::vector<Weight>{{2}, {1, 0}, {1, 1}, {0, 1, 0}}) {
        auto rep = build_irrep(mu);
        int n = rep->n;
        for (int k = 2; k <= n; ++k) {
            auto d = wei_D(scalar_element(rep, invariant_ck(n, k)));
            auto ratio = proportionality(d.matrix, medium_operator(rep, k).matrix);
            REQUIRE(ratio);
            CHECK(*ratio == frac(1, 4 * n));
            CHECK(d.degree == k - 1);
        }
    }
}

TEST_CASE("big operators are equivariant and homogeneous")
{
    for (auto mu : std::vector<Weight>{{3, 0}, {1, 1}, {0, 1, 0}}) {
        auto rep = build_irrep(mu);
        int n = rep->n;
        for (int k = 2; k <= n; ++k)
            for (int i = 1; i < k; ++i) {
                auto b = big_operator(rep, i, k);
                CHECK(equivariance_check(b));
                if (!b.matrix.is_zero()) {
                    std::vector<int> w(rep->algebra()->dim, 1);
                    CHECK(b.matrix.homogeneous_degree(w) == k - i);
                }
            }
    }
    auto rep = build_irrep({1, 1});
    auto bad = scalar_element(rep, MultiPoly::variable(rep->algebra()->coord_vars, 0));
    CHECK_FALSE(equivariance_check(bad));
    CHECK_THROWS_AS(big_operator(rep, 3, 3), Error);
}

TEST_CASE("D does not depend on the basis")
{
    Rng rng(11);
    auto rep = build_irrep({1, 1});
    auto g = rep->algebra();
    QMatrix T(g->dim, g->dim);
    for (std::size_t i = 0; i < g->dim; ++i)
        for (std::size_t j = 0; j < g->dim; ++j) T(i, j) = (i == j ? 3 : 0) + (rng.small_nonzero() > 5 ? 1 : 0);
    REQUIRE(inverse(T));
    for (auto f : {scalar_element(rep, invariant_ck(3, 3)), small_operator(rep), medium_operator(rep, 3)}) {
        auto a = wei_D(f);
        auto b = wei_D_in_basis(f, T);
        CHECK(a.matrix == b.matrix);
    }
}

TEST_CASE("products and commutators of Kirillov elements")
{
    auto rep = build_irrep({1, 1});
    auto m1 = small_operator(rep);
    auto m2 = medium_operator(rep, 3);
    CHECK(commutator(m1, m2).matrix.is_zero());
    auto p = product(m1, m2);
    CHECK(p.degree == 3);
    CHECK(equivariance_check(p));
    auto other = build_irrep({2, 0});
    CHECK_THROWS_AS(product(m1, small_operator(other)), Error);
}
