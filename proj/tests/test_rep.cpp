#include "bigalg/rep.hpp"

#include "doctest.h"

#include <filesystem>

using namespace bigalg;

namespace {

// Weight multiplicities by Freudenthal-free brute force: count semistandard-like
// data is overkill here, so use the Weyl orbit symmetry plus the q=1 Kostant count
// computed independently in the multiplicity tests. This helper only checks symmetry.
bool weyl_symmetric(const Representation& rep)
{
    for (const auto& w : weyl_group(rep.n))
        for (const auto& [lam, idx] : rep.weight_table) {
            auto it = rep.weight_table.find(weyl_act(w, lam));
            if (it == rep.weight_table.end() || it->second.size() != idx.size()) return false;
        }
    return true;
}

}  // namespace

TEST_CASE("fundamental representations")
{
    CHECK(fundamental_rep(3, 1)->dim == 3);
    auto l2 = fundamental_rep(3, 2);
    CHECK(l2->dim == 3);
    CHECK(l2->weight_table.count(Weight{0, 1}) == 1);
    CHECK(fundamental_rep(4, 2)->dim == 6);
    CHECK_THROWS_AS(fundamental_rep(3, 3), Error);
    for (auto [n, k] : {std::pair{3, 1}, {3, 2}, {4, 2}, {5, 3}}) CHECK(check_bracket_fidelity(*fundamental_rep(n, k)));
}

TEST_CASE("irreducible representations")
{
    auto p4 = build_irrep({4});
    CHECK(p4->dim == 5);
    auto dec = build_irrep({3, 0});
    CHECK(dec->dim == 10);
    auto oct = build_irrep({1, 1});
    CHECK(oct->dim == 8);
    CHECK(oct->weight_table.at(Weight{0, 0}).size() == 2);
    for (const auto& mu : std::vector<Weight>{{0}, {1}, {4}, {3, 0}, {1, 1}, {2, 1}, {0, 1, 0}, {1, 0, 1}}) {
        auto r = build_irrep(mu);
        CHECK(check_bracket_fidelity(*r));
        CHECK(Integer(static_cast<unsigned long>(r->dim)) == weyl_dimension(mu));
        CHECK(weyl_symmetric(*r));
        std::size_t total = 0;
        for (const auto& [w, idx] : r->weight_table) total += idx.size();
        CHECK(total == r->dim);
    }
    CHECK_THROWS_AS(build_irrep({-1, 0}), Error);
    CHECK_THROWS_AS(build_irrep({10, 10}), Error);  // dim 1331 > 400
}

TEST_CASE("weight spaces")
{
    auto g = build_sl(3);
    std::vector<QVector> cartan{QVector(g->dim), QVector(g->dim)};
    cartan[0][g->cartan_index(0)] = 1;
    cartan[1][g->cartan_index(1)] = 1;

    auto oct = build_irrep({1, 1});
    auto ws = weight_spaces(*oct, cartan);
    CHECK(ws.size() == 7);
    int ones = 0, twos = 0;
    for (const auto& w : ws) {
        if (w.basis.size() == 1) ++ones;
        if (w.basis.size() == 2) {
            ++twos;
            CHECK(w.label == std::vector<Rational>{Rational(0), Rational(0)});
        }
    }
    CHECK(ones == 6);
    CHECK(twos == 1);

    auto dec = build_irrep({3, 0});
    auto wd = weight_spaces(*dec, cartan);
    CHECK(wd.size() == 10);

    auto triv = build_irrep({0, 0});
    auto wt = weight_spaces(*triv, cartan);
    REQUIRE(wt.size() == 1);
    CHECK(wt[0].label == std::vector<Rational>{Rational(0), Rational(0)});

    std::vector<QVector> bad{g->e, g->f};
    CHECK_THROWS_AS(weight_spaces(*oct, bad), Error);
}

TEST_CASE("cache round trip")
{
    auto dir = std::filesystem::temp_directory_path() / "bigalg_rep_cache_test";
    std::filesystem::remove_all(dir);
    auto a = build_irrep_cached({2, 1}, dir.string());
    auto b = build_irrep_cached({2, 1}, dir.string());
    CHECK(b->log.back() == "loaded from cache");
    CHECK(a->rho == b->rho);
    CHECK(a->words == b->words);
    CHECK(a->weights == b->weights);
    auto c = rep_from_json(rep_to_json(*a));
    CHECK(c->rho == a->rho);
    std::filesystem::remove_all(dir);
}
