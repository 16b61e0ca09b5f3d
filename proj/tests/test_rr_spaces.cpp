#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dlcodes/rr_spaces.hpp"

using namespace dlcodes;
using dl_surfaces::SurfacePointA2;
using gf::Field;
using projgeom::HomogPoly;
using projgeom::ProjPoint;
using rr_spaces::LineBundleA2;

namespace {

std::vector<int> mvec(std::initializer_list<int> head, size_t len) {
    std::vector<int> m(head);
    m.resize(len, 0);
    return m;
}

SurfacePointA2 surface_point(const gf::Field& f, std::vector<int> base, std::vector<int> line) {
    return {projgeom::normalize(std::move(base), f), projgeom::normalize(std::move(line), f)};
}

}  // namespace

TEST_CASE("vanishing matrix shapes") {
    auto f = Field::canonical(2);
    CHECK(rr_spaces::vanishing_matrix({3, mvec({1, 1, 1}, 7)}, *f).rows == 3);
    CHECK(rr_spaces::vanishing_matrix({3, mvec({1, 1, 1}, 7)}, *f).cols == 10);
    CHECK(rr_spaces::vanishing_matrix({3, mvec({}, 7)}, *f).rows == 0);
    CHECK(rr_spaces::vanishing_matrix({3, mvec({}, 7)}, *f).cols == 10);
    const auto fat = rr_spaces::vanishing_matrix({2, mvec({2}, 7)}, *f);
    CHECK(fat.rows == 3);  // value plus the two first-order coefficients
    CHECK(fat.cols == 6);
}

TEST_CASE("section space dimensions") {
    auto f = Field::canonical(2);
    CHECK(rr_spaces::section_basis({3, mvec({1, 1, 1}, 7)}, f).dim == 7);
    CHECK(rr_spaces::section_basis({3, mvec({}, 7)}, f).dim == 10);
    // Four base points, not all collinear: no linear form through all of them.
    CHECK(rr_spaces::section_basis({1, mvec({1, 1, 1, 1}, 7)}, f).dim == 0);
}

TEST_CASE("closed-form dimension formula") {
    CHECK(rr_spaces::h0_formula({3, mvec({1, 1, 1}, 7)}) == 7);
    CHECK(rr_spaces::h0_formula({3, mvec({}, 7)}) == 10);
    const LineBundleA2 big{6, std::vector<int>(7, 1)};
    CHECK(rr_spaces::h0_formula(big) == 21);
    // The arithmetic value matches the kernel dimension here even though the
    // degree cap fails for q = 2.
    CHECK(rr_spaces::section_basis(big, Field::canonical(2)).dim == 21);
}

TEST_CASE("basis sections satisfy their vanishing orders everywhere") {
    for (long long q : {2, 3}) {
        auto f = Field::canonical(q);
        const size_t len = static_cast<size_t>(q * q + q + 1);
        const LineBundleA2 bundle{3, mvec({2, 1, 1}, len)};
        const auto basis = rr_spaces::section_basis(bundle, f);
        const auto pts = projgeom::enumerate_projective(2, *f);
        const auto surface = dl_surfaces::a2_points(static_cast<int>(q), *f);
        for (const auto& g : basis.polys) {
            for (size_t si = 0; si < surface.size(); ++si) {
                const int mult = bundle.m[si / static_cast<size_t>(q + 1)];
                // Throws InsufficientVanishing if any lower-order term survives.
                (void)rr_spaces::eval_section(g, surface[si], mult, *f);
            }
        }
        (void)pts;
    }
}

TEST_CASE("eval_section directional examples") {
    auto f = Field::canonical(2);
    HomogPoly x1(3, 1, f);
    x1.set_term({0, 1, 0}, 1);

    // Base [1:0:0]; the line { X1 = 0 } continues through [0:0:1].
    const auto toward_z = surface_point(*f, {1, 0, 0}, {0, 1, 0});
    CHECK(rr_spaces::second_point_on_line(toward_z.line, toward_z.base, *f) ==
          projgeom::normalize({0, 0, 1}, *f));
    CHECK(rr_spaces::eval_section(x1, toward_z, 1, *f) == 0);

    // The line { X2 = 0 } continues through [0:1:0]; X1 picks up the direction.
    const auto toward_y = surface_point(*f, {1, 0, 0}, {0, 0, 1});
    CHECK(rr_spaces::second_point_on_line(toward_y.line, toward_y.base, *f) ==
          projgeom::normalize({0, 1, 0}, *f));
    CHECK(rr_spaces::eval_section(x1, toward_y, 1, *f) == 1);
}

TEST_CASE("a section vanishing on the whole exceptional curve evaluates to zero") {
    auto f = Field::canonical(2);
    // X1 X2 (X1 + X2) vanishes to order 3 at [1:0:0]: every direction gives 0.
    HomogPoly s(3, 3, f);
    s.set_term({0, 2, 1}, 1);
    s.set_term({0, 1, 2}, 1);
    for (const auto& line : std::vector<std::vector<int>>{{0, 1, 0}, {0, 0, 1}, {0, 1, 1}}) {
        const auto pt = surface_point(*f, {1, 0, 0}, line);
        CHECK(rr_spaces::eval_section(s, pt, 1, *f) == 0);
    }
}

TEST_CASE("insufficient vanishing is detected") {
    auto f = Field::canonical(2);
    HomogPoly x1(3, 1, f);
    x1.set_term({0, 1, 0}, 1);
    const auto pt = surface_point(*f, {1, 0, 0}, {0, 0, 1});
    CHECK_THROWS_AS(rr_spaces::eval_section(x1, pt, 2, *f), InsufficientVanishing);

    HomogPoly x0(3, 1, f);
    x0.set_term({1, 0, 0}, 1);
    CHECK_THROWS_AS(rr_spaces::eval_section(x0, pt, 1, *f), InsufficientVanishing);
}

TEST_CASE("eval_section is linear in the section") {
    for (long long q : {2, 3}) {
        auto f = Field::canonical(q);
        const size_t len = static_cast<size_t>(q * q + q + 1);
        const LineBundleA2 bundle{3, mvec({1, 1}, len)};
        const auto basis = rr_spaces::section_basis(bundle, f);
        REQUIRE(basis.dim >= 2);
        const auto surface = dl_surfaces::a2_points(static_cast<int>(q), *f);
        std::mt19937_64 rng(5);
        for (int trial = 0; trial < 50; ++trial) {
            const auto& s1 = basis.polys[rng() % basis.polys.size()];
            const auto& s2 = basis.polys[rng() % basis.polys.size()];
            const int c = 1 + static_cast<int>(rng() % static_cast<uint64_t>(q - 1 ? q - 1 : 1));
            const size_t si = rng() % surface.size();
            const int mult = bundle.m[si / static_cast<size_t>(q + 1)];
            const int lhs = rr_spaces::eval_section(projgeom::poly_add(s1, s2), surface[si], mult, *f);
            CHECK(lhs == f->add(rr_spaces::eval_section(s1, surface[si], mult, *f),
                                rr_spaces::eval_section(s2, surface[si], mult, *f)));
            const int scaled =
                rr_spaces::eval_section(projgeom::poly_scale(s1, c), surface[si], mult, *f);
            CHECK(scaled == f->mul(c, rr_spaces::eval_section(s1, surface[si], mult, *f)));
        }
    }
}

TEST_CASE("changing projective representatives scales the value, zero-status invariant") {
    for (long long q : {2, 3}) {
        auto f = Field::canonical(q);
        const size_t len = static_cast<size_t>(q * q + q + 1);
        const LineBundleA2 bundle{3, mvec({1, 1, 1}, len)};
        const auto basis = rr_spaces::section_basis(bundle, f);
        const auto surface = dl_surfaces::a2_points(static_cast<int>(q), *f);
        for (const auto& g : basis.polys) {
            for (size_t si = 0; si < surface.size(); ++si) {
                const int mult = bundle.m[si / static_cast<size_t>(q + 1)];
                if (mult == 0) continue;
                const auto& base = surface[si].base;
                const auto dir = rr_spaces::second_point_on_line(surface[si].line, base, *f);
                const int ref =
                    rr_spaces::line_expansion(g, base.coords, dir.coords, mult)[static_cast<size_t>(mult)];
                for (int c = 1; c < q; ++c) {
                    for (int d = 1; d < q; ++d) {
                        std::vector<int> sb = base.coords, sd = dir.coords;
                        for (auto& x : sb) x = f->mul(x, c);
                        for (auto& x : sd) x = f->mul(x, d);
                        const int got =
                            rr_spaces::line_expansion(g, sb, sd, mult)[static_cast<size_t>(mult)];
                        const int scale = f->mul(f->pow(c, bundle.n - mult), f->pow(d, mult));
                        CHECK(got == f->mul(scale, ref));
                        CHECK((got == 0) == (ref == 0));
                    }
                }
            }
        }
    }
}

TEST_CASE("formula equals kernel dimension on the hypothesis-passing grid, q = 2") {
    auto f = Field::canonical(2);
    int checked = 0;
    for (int n = 0; n <= 3; ++n) {
        // All multiplicity vectors with entries <= 2 supported on the first
        // four canonical points.
        for (int m0 = 0; m0 <= 2; ++m0)
            for (int m1 = 0; m1 <= 2; ++m1)
                for (int m2 = 0; m2 <= 2; ++m2)
                    for (int m3 = 0; m3 <= 2; ++m3) {
                        std::vector<int> m = {m0, m1, m2, m3, 0, 0, 0};
                        if (!rr_spaces::all_pass(rr_spaces::excellence_conditions(n, m, 2))) continue;
                        const LineBundleA2 bundle{n, m};
                        CHECK(rr_spaces::h0_formula(bundle) ==
                              rr_spaces::section_basis(bundle, f).dim);
                        ++checked;
                    }
    }
    CHECK(checked > 5);
}

TEST_CASE("excellence conditions match the worked example") {
    const auto conds = rr_spaces::excellence_conditions(3, mvec({1, 1, 1}, 7), 2);
    REQUIRE(conds.size() == 4);
    for (const auto& c : conds) CHECK(c.pass);
    CHECK(conds[0].detail == "3 <= 3");
    CHECK(conds[1].detail == "3 >= 3");
    CHECK(conds[3].detail == "9 > 3");

    // Degree 4 breaks the cap at q = 2.
    CHECK_FALSE(rr_spaces::all_pass(rr_spaces::excellence_conditions(4, mvec({1, 1, 1}, 7), 2)));
}

TEST_CASE("bundle validation") {
    auto f = Field::canonical(2);
    CHECK_THROWS_AS(rr_spaces::vanishing_matrix({3, {1, 1, 1}}, *f), IndexOutOfRange);
    CHECK_THROWS_AS(rr_spaces::vanishing_matrix({3, mvec({-1}, 7)}, *f), IndexOutOfRange);
}
