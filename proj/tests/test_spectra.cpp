#include "doctest.h"

#include "bigalg/spectra.hpp"
#include "bigalg/upoly.hpp"

#include <sstream>

using namespace bigalg;

namespace {

std::vector<std::vector<std::string>> read_csv(const std::string& text)
{
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string c;
        while (std::getline(ls, c, ',')) cells.push_back(c);
        rows.push_back(cells);
    }
    return rows;
}

}  // namespace

TEST_CASE("skeletons along the principal line")
{
    auto dec = calibrate_generators(build_irrep({3, 0}));
    auto sk = principal_restriction(dec, SkeletonRecipe::set_c3_zero);
    CHECK(sk.parameter == "c2");
    auto pv = make_vars({"M1", "M2", "c2"});
    auto r1 = parse_polynomial(pv, "M1^4 - 6*M1^2*M2 + 4*M1^2*c2 + 3*M2^2 - 6*M2*c2");
    auto r2 = parse_polynomial(pv, "M1^3*M2 + M1^3*c2 - 3*M1*M2^2 + M1*M2*c2 + 4*M1*c2^2");
    for (Rational c : {Rational(-4), Rational(3), frac(1, 2)}) {
        QMatrix m1 = sk.operators[0].evaluate(std::vector<Rational>{c});
        QMatrix m2 = sk.operators[1].evaluate(std::vector<Rational>{c});
        QMatrix cc = QMatrix::identity(10) * c;
        CHECK(evaluate_matrix_polynomial(r1, {m1, m2, cc}).is_zero());
        CHECK(evaluate_matrix_polynomial(r2, {m1, m2, cc}).is_zero());
        CHECK((m1 * m2 == m2 * m1));
    }

    auto pb = principal_restriction(dec, SkeletonRecipe::pullback_along_e_plus_tf);
    auto tv = pb.invariants[0].vars();
    CHECK(pb.invariants[0] == parse_polynomial(tv, "-4*t"));
    CHECK(pb.invariants[1].is_zero());
    // Same spectra as the c3 = 0 recipe at c2 = -4t.
    for (Rational t : {Rational(1), Rational(-2)}) {
        for (std::size_t j = 0; j < pb.operators.size(); ++j)
            CHECK(charpoly(pb.operators[j].evaluate(std::vector<Rational>{t})) ==
                  charpoly(sk.operators[j].evaluate(std::vector<Rational>{-4 * t})));
    }

    auto sl2 = calibrate_generators(build_irrep({4}));
    auto id = principal_restriction(sl2, SkeletonRecipe::identity);
    CHECK(id.operators[0] == sl2.generators[0].section.matrix);
    CHECK_THROWS_AS(principal_restriction(sl2, SkeletonRecipe::set_c3_zero), Error);
}

TEST_CASE("principal spectra")
{
    auto dec = principal_spectrum(calibrate_generators(build_irrep({3, 0})));
    CHECK(dec.injective);
    CHECK(dec.medium_eigen.size() == 10);
    CHECK(dec.medium_eigen.at({3, 0}) == std::vector<Rational>{6, 4});
    CHECK(dec.point == QVector{-4, 0});

    auto octet = calibrate_generators(build_irrep({1, 1}));
    auto oct = principal_spectrum(octet);
    CHECK(oct.injective);
    CHECK(oct.medium_eigen.size() == 7);
    bool found = false;
    for (const auto& b : oct.big_blocks) {
        if (b.basis.size() != 2) continue;
        found = true;
        auto g = octet.rep->algebra();
        QMatrix n1 = restrict_to(octet.get("N1").element.evaluate(g->h), b.basis);
        CHECK(n1 * n1 == QMatrix::identity(2) * Rational(48));
    }
    CHECK(found);

    auto std2 = principal_spectrum(calibrate_generators(build_irrep({1})));
    CHECK(std2.medium_eigen.at({1}) == std::vector<Rational>{1});
    CHECK(std2.medium_eigen.at({-1}) == std::vector<Rational>{-1});
}

TEST_CASE("quantum number identities")
{
    auto dec = calibrate_generators(build_irrep({3, 0}));
    auto r = verify_quantum_number_identities(
        dec, {"I3*(Y - 1)*(4*I3^2 - 3*Y - 4)", "16*I3^4 - 24*I3^2*Y - 16*I3^2 + 3*Y^2 + 6*Y",
              "I3*(Y - 1)*(5*I3^2 - 3*Y - 4)"});
    CHECK(r[0].zero);
    CHECK(r[1].zero);
    CHECK_FALSE(r[2].zero);
    auto oct = calibrate_generators(build_irrep({1, 1}));
    for (const auto& c : verify_quantum_number_identities(
             oct, {"Y*(2*I3 - 1)*(2*I3 + 1)", "4*I3^3 + 3*I3*Y^2 - 4*I3", "16*I3^4 - 16*I3^2 + 3*Y^2"}))
        CHECK(c.zero);
}

TEST_CASE("decimal output and real eigenvalues")
{
    CHECK(format_decimal(Rational(2)) == "2");
    CHECK(format_decimal(frac(-7, 2)) == "-3.5");
    CHECK(format_decimal(frac(1, 3), 4) == "0.3333");
    CHECK(format_decimal(frac(2, 3), 4) == "0.6667");
    QMatrix m = QMatrix::from_rows({{0, 2}, {1, 0}});
    auto ev = real_eigenvalues(m, frac(1, 1000000000));
    REQUIRE(ev.size() == 2);
    CHECK(abs(ev[1] - Rational(14142135623, 10000000000)) < frac(1, 100000000));
    CHECK(real_eigenvalues(QMatrix::from_rows({{0, -1}, {1, 0}}), frac(1, 100)).empty());
    CHECK(real_eigenvalues(QMatrix(3, 3), frac(1, 100)) == std::vector<Rational>{0, 0, 0});
    CHECK(parse_grid("-4:1:5").size() == 6);
    CHECK(parse_grid("0:1:3")[1] == frac(1, 3));
    CHECK_THROWS_AS(parse_grid("1:0:3"), Error);
}

TEST_CASE("skeleton CSV")
{
    auto sl2 = calibrate_generators(build_irrep({4}));
    auto sk = principal_restriction(sl2, SkeletonRecipe::identity);
    std::ostringstream out;
    auto rep = emit_skeleton_points(sk, parse_grid("-4:1:5"), out);
    CHECK(rep.passed);
    auto rows = read_csv(out.str());
    CHECK(rows[0] == std::vector<std::string>{"param", "generator", "branch", "value"});
    CHECK(rep.rows == 26);  // only M1 = 0 is real at c2 = 1
    std::vector<std::string> at_minus_one, at_zero;
    for (const auto& r : rows) {
        if (r[0] == "-1") at_minus_one.push_back(r[3]);
        if (r[0] == "0") at_zero.push_back(r[3]);
    }
    CHECK(at_minus_one == std::vector<std::string>{"-4", "-2", "0", "2", "4"});
    CHECK(at_zero == std::vector<std::string>(5, "0"));

    auto octet = calibrate_generators(build_irrep({1, 1}));
    std::ostringstream o2;
    auto rep2 = emit_skeleton_points(principal_restriction(octet, SkeletonRecipe::set_c3_zero), {Rational(-4)}, o2);
    CHECK(rep2.passed);
    bool root48 = false;
    for (const auto& r : read_csv(o2.str()))
        if (r.size() == 4 && r[1] == "N1" && r[3].rfind("6.928203230275509", 0) == 0) root48 = true;
    CHECK(root48);
}

TEST_CASE("twining automorphism")
{
    auto octet = calibrate_generators(build_irrep({1, 1}));
    auto s = sigma_automorphism(octet.rep);
    CHECK(s.fixes_triple);
    CHECK(s.intertwines);
    CHECK(s.on_lie * s.on_lie == QMatrix::identity(8));
    CHECK(sigma_eigenvalue(s, octet.get("M1").element) == 1);
    CHECK(sigma_eigenvalue(s, octet.get("N1").element) == -1);
    CHECK(sigma_eigenvalue(s, octet.get("M2").element) == -1);
    CHECK_THROWS_AS(sigma_automorphism(build_irrep({3, 0})), Error);

    auto sl4 = build_irrep({0, 1, 0});
    auto s4 = sigma_automorphism(sl4);
    CHECK(s4.fixes_triple);
    CHECK(s4.intertwines);

    auto rep = coinvariant_algebra(octet, 6);
    CHECK(rep.sigma_on_invariants.at("c2") == 1);
    CHECK(rep.sigma_on_invariants.at("c3") == -1);
    CHECK(rep.coinvariant_dims == std::vector<std::size_t>(7, 1));
    CHECK(rep.hilbert_match);
    REQUIRE(rep.even_relations.size() == 1);
    CHECK(rep.even_relations[0] == parse_polynomial(rep.even_relations[0].vars(), "M1^2 + 4*c2"));
    CHECK(rep.relations_match);
    CHECK(rep.fixed_scheme_single);
    CHECK(rep.jantzen_match);
    CHECK(rep.passed());
}
