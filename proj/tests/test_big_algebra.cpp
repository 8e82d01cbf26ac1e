#include "doctest.h"

#include "bigalg/big_algebra.hpp"
#include "bigalg/upoly.hpp"

using namespace bigalg;

namespace {

// Whether p lies in the ideal generated by rels, tested in its own degree.
bool in_ideal(const PresentationRing& ring, const std::vector<MultiPoly>& rels, const MultiPoly& p)
{
    int d = *p.homogeneous_degree(ring.weights);
    auto with = rels;
    with.push_back(p);
    return ideal_dimension(ring, rels, d) == ideal_dimension(ring, with, d);
}

QPolynomial from_coeffs(const std::vector<long>& cs)
{
    QPolynomial q;
    for (std::size_t i = 0; i < cs.size(); ++i) q.add(static_cast<long>(i), cs[i]);
    return q;
}

}  // namespace

TEST_CASE("restriction to the companion section")
{
    auto std2 = build_irrep({1});
    auto m1 = restrict_to_section(small_operator(std2));
    auto cv = c_vars(2);
    PolyMatrix expected(cv, 2, 2);
    expected(0, 1) = parse_polynomial(cv, "-c2");
    expected(1, 0) = parse_polynomial(cv, "1");
    CHECK(m1.matrix == expected);
    CHECK(m1.degree == 1);

    auto std3 = build_irrep({1, 0});
    auto s3 = restrict_to_section(small_operator(std3));
    CHECK(s3.matrix == kostant_section_companion(3));
    QMatrix at = s3.evaluate({Rational(2), Rational(-5)});
    CHECK(char_coefficients(at) == std::vector<Rational>{2, -5});

    auto c2 = restrict_to_section(scalar_element(std3, invariant_ck(3, 2)));
    CHECK(c2.matrix == invariant_section(3, 3, 2).matrix);
    CHECK(evaluate_at(c2, {Rational(5), Rational(0)}) == QMatrix::identity(3) * Rational(5));
    CHECK_THROWS_AS(evaluate_at(c2, {Rational(5)}), Error);

    auto octet = build_irrep({1, 1});
    QMatrix m = restrict_to_section(small_operator(octet)).evaluate({Rational(-4), Rational(0)});
    // Adjoint weights at h = diag(2,0,-2).
    UPoly expect = UPoly({0, 0, 1}) * UPoly({-16, 0, 1}) * UPoly({-4, 0, 1}) * UPoly({-4, 0, 1});
    CHECK(charpoly(m) == expect);
}

TEST_CASE("calibration anchors")
{
    auto dec = calibrate_generators(build_irrep({3, 0}));
    CHECK(dec.ok());
    CHECK(dec.checks.at(0).actual == 6);
    CHECK(dec.checks.at(1).actual == 4);
    CHECK(dec.get("M1").scalar == -12);
    CHECK(dec.get("N1").scalar == 144);

    auto std3 = build_irrep({1, 0});
    auto cal = calibrate_generators(std3);
    CHECK(cal.ok());
    CHECK(cal.get("M1").section.matrix == restrict_to_section(small_operator(std3)).matrix);

    auto octet = calibrate_generators(build_irrep({1, 1}));
    CHECK(octet.ok());
    CHECK(octet.checks.size() == 3);

    auto sl2 = calibrate_generators(build_irrep({4}));
    CHECK(sl2.generators.size() == 1);
    CHECK(sl2.ok());
}

TEST_CASE("Hilbert series by the fiber at e")
{
    auto check = [](const Weight& mu, const QPolynomial& expected) {
        auto rep = build_irrep(mu);
        auto hs = hilbert_series(rep, calibrate_generators(rep).sections());
        CHECK(hs.homogeneous);
        CHECK(hs.numerator == expected);
        CHECK(hs.formula == expected);
        CHECK(hs.agree);
    };
    check({3, 0}, from_coeffs({1, 1, 2, 2, 2, 1, 1}));
    check({1, 1}, from_coeffs({1, 2, 2, 2, 1}));
    for (int n = 1; n <= 4; ++n) check({n}, from_coeffs(std::vector<long>(static_cast<std::size_t>(n + 1), 1)));
    check({0, 1, 0}, hilbert_numerator_formula({0, 1, 0}));
}

TEST_CASE("derived relations")
{
    auto rep = build_irrep({4});
    auto gens = calibrate_generators(rep).sections();
    auto ring = presentation_ring(gens, 2);
    auto rels = derive_relations(ring, gens, rep->dim, 6);
    REQUIRE(rels.size() == 1);
    CHECK(rels[0] == parse_polynomial(ring.vars, "M1*(M1^2 + 4*c2)*(M1^2 + 16*c2)"));

    auto std3 = build_irrep({1, 0});
    auto g3 = calibrate_generators(std3).sections();
    auto r3 = presentation_ring(g3, 3);
    auto rels3 = derive_relations(r3, g3, 3, 6);
    CHECK(in_ideal(r3, rels3, parse_polynomial(r3.vars, "M1^3 + c2*M1 + c3")));
    CHECK_FALSE(in_ideal(r3, rels3, parse_polynomial(r3.vars, "M1^3 + c2*M1 - c3")));

    auto oct = build_irrep({1, 1});
    auto go = calibrate_generators(oct).sections();
    auto ro = presentation_ring(go, 3);
    auto relso = derive_relations(ro, go, 8, 2);
    CHECK(in_ideal(ro, relso, parse_polynomial(ro.vars, "3*M1^2 + N1^2 + 12*c2")));
}

TEST_CASE("verify_presentation reports failures")
{
    auto rep = build_irrep({3, 0});
    auto gens = calibrate_generators(rep).sections();
    std::vector<SectionOperator> medium{gens[0], gens[1]};
    auto ring = presentation_ring(medium, 3);
    std::vector<MultiPoly> rels{
        parse_polynomial(ring.vars, "M1^4 - 6*M1^2*M2 + 4*M1^2*c2 - 18*M1*c3 + 3*M2^2 - 6*M2*c2"),
        parse_polynomial(ring.vars,
                         "M1^3*M2 + M1^3*c2 + 3*M1^2*c3 - 3*M1*M2^2 + M1*M2*c2 + 4*M1*c2^2 - 9*M2*c3")};
    auto ok = verify_presentation(ring, medium, rep->dim, rels, 6);
    CHECK(ok.annihilates);
    CHECK(ok.graded_dims_match);
    CHECK(ok.passed());

    rels[0] = parse_polynomial(ring.vars, "M1^4 + 6*M1^2*M2 + 4*M1^2*c2 - 18*M1*c3 + 3*M2^2 - 6*M2*c2");
    auto bad = verify_presentation(ring, medium, rep->dim, rels, 4);
    CHECK_FALSE(bad.passed());
    CHECK_FALSE(bad.relations[0].zero);
    CHECK(bad.relations[0].first_nonzero.rfind("entry (", 0) == 0);
    CHECK(bad.relations[1].zero);
}

TEST_CASE("freeness, cyclicity and simplicity")
{
    for (auto mu : std::vector<Weight>{{3, 0}, {1, 1}, {3}}) {
        auto rep = build_irrep(mu);
        auto report = freeness_and_rank_check(rep, calibrate_generators(rep).sections(), 0);
        CHECK(report.random_points.size() == 3);
        CHECK(report.passed());
        CHECK(report.nilpotent_point.span_dimension == rep->dim);
    }
}

TEST_CASE("decuplet relations derived from the medium generators")
{
    auto rep = build_irrep({3, 0});
    auto gens = calibrate_generators(rep).sections();
    std::vector<SectionOperator> medium{gens[0], gens[1]};
    auto ring = presentation_ring(medium, 3);
    auto derived = derive_relations(ring, medium, rep->dim, 6);
    std::vector<MultiPoly> given{
        parse_polynomial(ring.vars, "M1^4 - 6*M1^2*M2 + 4*M1^2*c2 - 18*M1*c3 + 3*M2^2 - 6*M2*c2"),
        parse_polynomial(ring.vars,
                         "M1^3*M2 + M1^3*c2 + 3*M1^2*c3 - 3*M1*M2^2 + M1*M2*c2 + 4*M1*c2^2 - 9*M2*c3")};
    CHECK(derived.size() == 2);
    for (int d = 0; d <= 6; ++d) CHECK(ideal_dimension(ring, derived, d) == ideal_dimension(ring, given, d));
}
