#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dlcodes/projgeom.hpp"

using namespace dlcodes;
using gf::Field;
using projgeom::HomogPoly;
using projgeom::ProjPoint;

namespace {

ProjPoint pt(std::vector<int> coords) { return ProjPoint{std::move(coords)}; }

HomogPoly random_poly(int nvars, int degree, const gf::FieldPtr& f, std::mt19937_64& rng) {
    HomogPoly p(nvars, degree, f);
    const auto monos = projgeom::monomial_basis(nvars, degree);
    for (const auto& e : monos)
        p.set_term(e, static_cast<int>(rng() % static_cast<uint64_t>(f->q())));
    return p;
}

}  // namespace

TEST_CASE("projective line over GF(2): points and order") {
    auto f = Field::canonical(2);
    const auto pts = projgeom::enumerate_projective(1, *f);
    REQUIRE(pts.size() == 3);
    CHECK(pts[0] == pt({1, 0}));
    CHECK(pts[1] == pt({0, 1}));
    CHECK(pts[2] == pt({1, 1}));
}

TEST_CASE("projective plane and P^4 counts") {
    CHECK(projgeom::enumerate_projective(2, *Field::canonical(2)).size() == 7);
    CHECK(projgeom::enumerate_projective(4, *Field::canonical(4)).size() == 341);
}

TEST_CASE("point counts match the closed form for q <= 16, d <= 4") {
    for (long long q : {2, 3, 4, 8, 9, 16}) {
        auto f = Field::canonical(q);
        for (int d = 1; d <= 4; ++d)
            CHECK(static_cast<long long>(projgeom::enumerate_projective(d, *f).size()) ==
                  projgeom::projective_count(d, q));
    }
}

TEST_CASE("points are normalized and strictly ordered") {
    auto f = Field::canonical(9);
    const auto pts = projgeom::enumerate_projective(2, *f);
    long long prev = -1;
    for (const auto& p : pts) {
        size_t lead = 0;
        while (p.coords[lead] == 0) ++lead;
        CHECK(p.coords[lead] == 1);
        const long long v = projgeom::point_value(p, *f);
        CHECK(v > prev);
        prev = v;
    }
}

TEST_CASE("eval_poly basics") {
    auto f = Field::canonical(2);
    HomogPoly x0cubed(3, 3, f);
    x0cubed.set_term({3, 0, 0}, 1);
    CHECK(projgeom::eval_poly(x0cubed, pt({1, 0, 0})) == 1);

    HomogPoly zero(3, 3, f);
    CHECK(projgeom::eval_poly(zero, pt({1, 1, 1})) == 0);

    CHECK_THROWS_AS(projgeom::eval_poly(x0cubed, pt({1, 0})), ArityMismatch);
}

TEST_CASE("Hermitian surface equation vanishes at [1:a:0:0] over GF(4)") {
    auto f = Field::canonical(4);
    HomogPoly h(4, 3, f);
    for (int i = 0; i < 4; ++i) {
        std::vector<int> e(4, 0);
        e[static_cast<size_t>(i)] = 3;
        h.set_term(e, 1);
    }
    const int alpha = f->parse_digits("01");
    // alpha^3 = 1, so the value is 1 + 1 = 0: the point lies on the surface.
    CHECK(projgeom::eval_poly(h, pt({1, alpha, 0, 0})) == 0);
    CHECK(projgeom::eval_poly(h, pt({1, 0, 0, 0})) == 1);
}

TEST_CASE("monomial bases") {
    const auto m33 = projgeom::monomial_basis(3, 3);
    REQUIRE(m33.size() == 10);
    CHECK(m33.front() == std::vector<int>{3, 0, 0});
    CHECK(m33[1] == std::vector<int>{2, 1, 0});
    CHECK(m33.back() == std::vector<int>{0, 0, 3});
    CHECK(projgeom::monomial_basis(5, 8).size() == 495);
    const auto m20 = projgeom::monomial_basis(2, 0);
    REQUIRE(m20.size() == 1);
    CHECK(m20[0] == std::vector<int>{0, 0});
}

TEST_CASE("Hermitian surface in P^3(F_4) has 45 points") {
    auto f = Field::canonical(4);
    HomogPoly h(4, 3, f);
    for (int i = 0; i < 4; ++i) {
        std::vector<int> e(4, 0);
        e[static_cast<size_t>(i)] = 3;
        h.set_term(e, 1);
    }
    const auto variety = projgeom::enumerate_variety({h}, 3, *f);
    CHECK(variety.size() == 45);

    // Independent oracle: raw loop over all nonzero coordinate vectors,
    // counting normalized representatives whose cubes sum to zero.
    long long count = 0;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c)
                for (int d = 0; d < 4; ++d) {
                    if (a == 0 && b == 0 && c == 0 && d == 0) continue;
                    int lead = a != 0 ? a : b != 0 ? b : c != 0 ? c : d;
                    if (lead != 1) continue;  // one representative per class
                    int sum = 0;
                    for (int x : {a, b, c, d}) sum = f->add(sum, f->pow(x, 3));
                    if (sum == 0) ++count;
                }
    CHECK(count == 45);
}

TEST_CASE("empty equation list enumerates the whole space") {
    auto f = Field::canonical(3);
    CHECK(projgeom::enumerate_variety({}, 2, *f).size() == 13);
}

TEST_CASE("variety of two equations is the intersection of the singletons") {
    auto f = Field::canonical(3);
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const HomogPoly g1 = random_poly(3, 2, f, rng);
        const HomogPoly g2 = random_poly(3, 3, f, rng);
        const auto both = projgeom::enumerate_variety({g1, g2}, 2, *f);
        const auto v1 = projgeom::enumerate_variety({g1}, 2, *f);
        std::vector<ProjPoint> expect;
        for (const auto& p : v1)
            if (projgeom::eval_poly(g2, p) == 0) expect.push_back(p);
        CHECK(both.size() == expect.size());
        for (size_t i = 0; i < both.size(); ++i) CHECK(both[i] == expect[i]);
    }
}

TEST_CASE("evaluation is multiplicative on random data") {
    for (long long q : {2, 3, 4}) {
        auto f = Field::canonical(q);
        std::mt19937_64 rng(42 + q);
        const auto pts = projgeom::enumerate_projective(2, *f);
        for (int trial = 0; trial < 100; ++trial) {
            const HomogPoly a = random_poly(3, 2, f, rng);
            const HomogPoly b = random_poly(3, 1 + static_cast<int>(rng() % 2), f, rng);
            const HomogPoly ab = projgeom::poly_mul(a, b);
            const ProjPoint& p = pts[rng() % pts.size()];
            CHECK(projgeom::eval_poly(ab, p) ==
                  f->mul(projgeom::eval_poly(a, p), projgeom::eval_poly(b, p)));
        }
    }
}

TEST_CASE("term bookkeeping never stores zeros and respects degree") {
    auto f = Field::canonical(2);
    HomogPoly p(3, 2, f);
    p.set_term({1, 1, 0}, 1);
    p.add_term({1, 1, 0}, 1);  // cancels in characteristic 2
    CHECK(p.is_zero());
    CHECK_THROWS_AS(p.set_term({1, 0, 0}, 1), DegreeMismatch);
    CHECK_THROWS_AS(p.set_term({1, 1}, 1), ArityMismatch);
}
