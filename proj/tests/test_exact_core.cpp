#include "bigalg/linalg.hpp"
#include "bigalg/multipoly.hpp"
#include "bigalg/qpoly.hpp"
#include "bigalg/random.hpp"
#include "bigalg/upoly.hpp"

#include "doctest.h"

using namespace bigalg;

namespace {

QMatrix diag(std::vector<int> d)
{
    QMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

}  // namespace

TEST_CASE("rational serialization")
{
    CHECK(to_string(Rational(3)) == "3");
    CHECK(to_string(frac(-6, 4)) == "-3/2");
    CHECK(parse_rational("-1.25") == frac(-5, 4));
    CHECK(parse_rational("7/21") == frac(1, 3));
    CHECK_THROWS_AS(parse_rational("x"), Error);
}

TEST_CASE("poly arithmetic")
{
    auto vars = make_vars({"x", "c2", "c3"});
    auto x = MultiPoly::variable(vars, "x");
    auto c2 = MultiPoly::variable(vars, "c2");
    auto c3 = MultiPoly::variable(vars, "c3");
    auto one = MultiPoly::constant(vars, 1);

    CHECK((x + one) * (x - one) == x * x - one);
    auto z = (x + one) * MultiPoly(vars);
    CHECK(z.is_zero());
    CHECK(z.terms().empty());
    CHECK((c2 + c3).pow(2) == c2 * c2 + Rational(2) * c2 * c3 + c3 * c3);

    auto other = make_vars({"y"});
    CHECK_THROWS_AS(x + MultiPoly::variable(other, "y"), Error);
    CHECK((x * x).to_string() == "x^2");
}

TEST_CASE("polynomial parser and primitive part")
{
    auto vars = make_vars({"M1", "N1", "c2"});
    auto m = MultiPoly::variable(vars, "M1");
    auto nn = MultiPoly::variable(vars, "N1");
    auto c2 = MultiPoly::variable(vars, "c2");
    auto p = parse_polynomial(vars, "3*M1^2 + N1^2 - (1/2)*(c2 - 2*M1)*2");
    CHECK(p == Rational(3) * m * m + nn * nn - c2 + Rational(2) * m);
    CHECK(parse_polynomial(vars, "-0.5*c2") == frac(-1, 2) * c2);
    CHECK_THROWS_AS(parse_polynomial(vars, "M1 + x"), Error);
    CHECK_THROWS_AS(parse_polynomial(vars, "M1 +"), Error);
    auto q = frac(-2, 3) * m * m + frac(4, 9) * c2;
    auto r = primitive_part(q);
    CHECK((r == Rational(3) * m * m - Rational(2) * c2 || r == Rational(-3) * m * m + Rational(2) * c2));
    CHECK(primitive_part(r) == r);
}

TEST_CASE("partial derivative")
{
    auto vars = make_vars({"x1", "x2", "c2", "c3"});
    auto x1 = MultiPoly::variable(vars, "x1");
    auto x2 = MultiPoly::variable(vars, "x2");
    CHECK((x1 * x1 * x2).derivative("x1") == Rational(2) * x1 * x2);
    CHECK(MultiPoly::variable(vars, "c2").derivative("c3").is_zero());
    CHECK(x1.pow(3).derivative("x1") == Rational(3) * x1 * x1);
    CHECK_THROWS_AS(x1.derivative("nope"), Error);
}

TEST_CASE("negative exponents only on the limit variable")
{
    auto vars = make_vars({"w", "x"}, "w");
    Monomial m;
    m.exp[0] = -3;
    CHECK_NOTHROW(MultiPoly::term(vars, m, 1));
    Monomial bad;
    bad.exp[1] = -1;
    CHECK_THROWS_AS(MultiPoly::term(vars, bad, 1), Error);
}

TEST_CASE("kernel")
{
    CHECK(kernel(QMatrix::identity(3)).empty());
    CHECK(kernel(QMatrix(2, 3)).size() == 3);

    // Random 5x8 matrix; the oracle is m * v == 0 and the rank-nullity count.
    Rng rng(7);
    QMatrix m(5, 8);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 8; ++j) m(i, j) = rng.small_nonzero();
    auto k = kernel(m);
    CHECK(rank(m) + k.size() == 8);
    CHECK(span_basis(k, 8).size() == k.size());
    for (const auto& v : k) CHECK(is_zero(m.apply(v)));
}

TEST_CASE("charpoly and squarefree test")
{
    QMatrix m = QMatrix::from_rows({{Rational(0), Rational(-48)}, {Rational(1), Rational(0)}});
    CHECK(charpoly(m) == UPoly({Rational(48), Rational(0), Rational(1)}));
    CHECK_FALSE(simple_spectrum_check(QMatrix::identity(2)));
    CHECK(simple_spectrum_check(diag({1, 2, 3})));

    // Cross-check Hessenberg charpoly against determinant at sample points.
    Rng rng(3);
    QMatrix a(5, 5);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) a(i, j) = rng.small_nonzero();
    UPoly chi = charpoly(a);
    for (int t : {-2, 0, 3}) CHECK(chi.evaluate(Rational(t)) == determinant(QMatrix::identity(5) * Rational(t) - a));
}

TEST_CASE("squarefree decomposition and roots")
{
    // (t-1)^2 (t+2) (t^2-3)
    UPoly p = UPoly({Rational(-1), Rational(1)}) * UPoly({Rational(-1), Rational(1)}) * UPoly({Rational(2), Rational(1)}) *
              UPoly({Rational(-3), Rational(0), Rational(1)});
    auto sq = squarefree_decomposition(p);
    REQUIRE(sq.size() == 2);
    CHECK(sq[0].second == 1);
    CHECK(sq[0].first.degree() == 3);
    CHECK(sq[1] == std::make_pair(UPoly({Rational(-1), Rational(1)}), 2));

    auto rr = rational_roots(p);
    REQUIRE(rr.size() == 2);
    CHECK(rr[0] == std::make_pair(Rational(-2), 1));
    CHECK(rr[1] == std::make_pair(Rational(1), 2));

    CHECK(isolate_real_roots(p).size() == 4);
    auto r = refine_root(sq[0].first, isolate_real_roots(sq[0].first).back(), frac(1, 1000000));
    CHECK(r.first * r.first <= 3);
    CHECK(r.second * r.second >= 3);

    UPoly q({frac(-1, 3), Rational(0), Rational(3)});  // roots +-1/3
    auto qr = rational_roots(q);
    REQUIRE(qr.size() == 2);
    CHECK(qr[0].first == frac(-1, 3));
}

TEST_CASE("joint invariant decomposition")
{
    auto blocks = joint_invariant_decomposition({diag({1, 2}), diag({3, 3})});
    REQUIRE(blocks.size() == 2);
    CHECK(blocks[0].eigenvalues == std::vector<std::optional<Rational>>{Rational(1), Rational(3)});
    CHECK(blocks[1].eigenvalues == std::vector<std::optional<Rational>>{Rational(2), Rational(3)});
    CHECK(blocks[0].basis.size() == 1);

    // Companion block of t^2 - 48, the octet N1 spectrum over the origin.
    QMatrix m = QMatrix::from_rows({{Rational(0), Rational(48)}, {Rational(1), Rational(0)}});
    auto irr = joint_invariant_decomposition({m});
    REQUIRE(irr.size() == 1);
    CHECK(irr[0].basis.size() == 2);
    CHECK_FALSE(irr[0].eigenvalues[0].has_value());
    CHECK(irr[0].factors[0] == UPoly({Rational(-48), Rational(0), Rational(1)}));
    // Irreducibility over Q: no rational roots and degree 2.
    CHECK(rational_roots(irr[0].factors[0]).empty());

    QMatrix a = QMatrix::from_rows({{Rational(0), Rational(1)}, {Rational(0), Rational(0)}});
    CHECK_THROWS_AS(joint_invariant_decomposition({a, a.transpose()}), Error);
}

TEST_CASE("limit of span")
{
    auto vars = make_vars({"w"}, "w");
    auto w = MultiPoly::variable(vars, "w");
    auto one = MultiPoly::constant(vars, 1);

    PolyMatrix single(vars, 2, 1);
    single(0, 0) = w;
    single(1, 0) = w.pow(3);
    auto l1 = limit_of_span(single, 0);
    CHECK(subspace_equal(l1, {{Rational(1), Rational(0)}}, 2));

    PolyMatrix two(vars, 2, 2);
    two(0, 0) = one;
    two(1, 0) = w;
    two(0, 1) = one;
    two(1, 1) = -w;
    auto l2 = limit_of_span(two, 0);
    CHECK(l2.size() == 2);
    CHECK(subspace_equal(l2, {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}}, 2));

    PolyMatrix constant = PolyMatrix::constant(vars, QMatrix::from_rows({{Rational(1), Rational(2)}, {Rational(3), Rational(4)}, {Rational(0), Rational(1)}}));
    auto l3 = limit_of_span(constant, 0);
    CHECK(subspace_equal(l3, constant.evaluate(std::vector<Rational>{Rational(0)}).columns(), 3));

    PolyMatrix dep(vars, 2, 2);
    dep(0, 0) = w;
    dep(0, 1) = Rational(2) * w;
    CHECK_THROWS_AS(limit_of_span(dep, 0), Error);
}

TEST_CASE("q-polynomials")
{
    auto p = product_quotient({4, 5}, {1, 2});
    CHECK(p.at_one() == 10);
    auto hs = QPolynomial::monomial(1, frac(1, 2)) + QPolynomial::monomial(2, 1);
    CHECK(hs.to_string() == "q^(1/2) + 2*q");
    CHECK(hs.shifted(frac(-1, 2)).coeff(0) == 1);
}

TEST_CASE("seeded generator is deterministic")
{
    Rng a(5), b(5);
    for (int i = 0; i < 20; ++i) {
        auto x = a.small_nonzero();
        CHECK(x == b.small_nonzero());
        CHECK(x != 0);
        CHECK(abs(x) <= 9);
    }
}
