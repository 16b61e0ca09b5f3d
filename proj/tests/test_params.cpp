#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dlcodes/params.hpp"

using namespace dlcodes;
using dl_surfaces::Family;
using dl_surfaces::SurfaceFamily;

namespace {
std::vector<int> mvec(std::initializer_list<int> head, size_t len) {
    std::vector<int> m(head);
    m.resize(len, 0);
    return m;
}
}  // namespace

TEST_CASE("hansen bound") {
    CHECK(params::hansen_bound(63, 0, 3, 21) == 42);
    CHECK(params::hansen_bound(100, 0, 5, 0) == 100);
    CHECK(params::hansen_bound_uniform(63, 7, 3, 21, 1) == 28);
    CHECK_THROWS_AS(params::hansen_bound(-1, 0, 0, 0), IndexOutOfRange);
}

TEST_CASE("nef l bound") {
    CHECK(params::nef_l_bound(5, 2) == 2);
    CHECK(params::nef_l_bound(1, 3) == 0);
    CHECK(params::nef_l_bound(0, 1) == 0);
    CHECK(params::nef_l_bound(-4, 2) == 0);
    CHECK_THROWS_AS(params::nef_l_bound(5, 0), DivisionByZero);
}

TEST_CASE("general bound on the A2 family") {
    params::BoundInputs in{SurfaceFamily(Family::A2, 2), 0, 1, 0, {}, {}, {}};
    const auto rep = params::general_bound(in);
    CHECK(rep.n.value == 63);
    CHECK(rep.d_lower.value == 42);
    CHECK(rep.branch == "otherwise");
    CHECK_FALSE(rep.k.has_value());
    CHECK(rep.k_note == "requires construction");
    CHECK(rep.n.provenance == "closed-form");

    // Negative minimal subbundle degree pushes the excess branch.
    in.c1_W1 = -1;
    const auto rep2 = params::general_bound(in);
    CHECK(rep2.branch == "excess");
    CHECK(rep2.d_lower.value == 63 - 7 * 3 - (21 - 7) * 1);
    CHECK(rep2.d_lower.value == 28);
}

TEST_CASE("general bound on 2A4 and the derived families") {
    params::BoundInputs in{SurfaceFamily(Family::TwoA4, 2), 0, 2, 0, {}, {}, {}};
    const auto rep = params::general_bound(in);
    CHECK(rep.n.value == 7425);
    CHECK(rep.d_lower.value == 4455);

    params::BoundInputs a3{SurfaceFamily(Family::TwoA3, 2), 0, 1, 0, {}, {}, {}};
    const auto rep3 = params::general_bound(a3);
    CHECK(rep3.n.value == 225 * 5);
    CHECK(rep3.n.provenance == "derived");
    CHECK(rep3.d_lower.value == 225 * 5 - 225);

    params::BoundInputs c2{SurfaceFamily(Family::C2, 2), 0, 1, 0, {}, {}, {}};
    CHECK(params::general_bound(c2).n.value == 45 * 3);
}

TEST_CASE("missing intersection number is only required when a > 0") {
    params::BoundInputs in{SurfaceFamily(Family::A2, 2), 1, 1, 0, {}, {}, {}};
    CHECK_THROWS_AS(params::general_bound(in), MissingIntersectionNumber);
    in.dj_dot_di = 2;
    const auto rep = params::general_bound(in);
    CHECK(rep.branch == "excess");  // E = 0 + 1*2 > 0
    CHECK(rep.d_lower.value == 63 - 2 * 3 - (21 - 2) * 1);
}

TEST_CASE("ties take the otherwise branch") {
    // E = -b*c1*B + a*DjDi = -1*1*7 + 1*7 = 0: not strictly positive.
    params::BoundInputs in{SurfaceFamily(Family::A2, 2), 1, 1, 1, 7, {}, {}};
    const auto rep = params::general_bound(in);
    CHECK(rep.branch == "otherwise");
    CHECK(rep.d_lower.value == 42);
}

TEST_CASE("corollary A2 closed forms") {
    const auto m1 = mvec({1, 1, 1}, 7);
    const auto rep = params::corollary_a2_params(2, 1, {3, 3}, {m1, m1});
    CHECK(rep.n.value == 63);
    REQUIRE(rep.k.has_value());
    CHECK(rep.k->value == 14);
    CHECK(rep.d_lower.value == 42);
    CHECK(rep.hypotheses.all_pass);
    CHECK(rep.k_note.empty());

    const auto zero = mvec({}, 7);
    const auto rep2 = params::corollary_a2_params(2, 1, {3, 3}, {zero, zero});
    CHECK(rep2.k->value == 20);
    CHECK(rep2.hypotheses.all_pass);

    const auto m13 = mvec({1, 1, 1}, 13);
    const auto rep3 = params::corollary_a2_params(3, 1, {3, 3}, {m13, m13});
    CHECK(rep3.n.value == 208);
    CHECK(rep3.k->value == 14);
    CHECK(rep3.d_lower.value == 156);
}

TEST_CASE("corollary A2 reports hypothesis failures in-band") {
    const auto m1 = mvec({1, 1, 1}, 7);
    const auto rep = params::corollary_a2_params(2, 9, {3, 3}, {m1, m1});
    CHECK_FALSE(rep.hypotheses.all_pass);
    CHECK(rep.k_note == "formula unverified (hypotheses failed)");
    CHECK(rep.n.value == 63);
}

TEST_CASE("corollary 2A4 closed forms") {
    const auto rep = params::corollary_2a4_params(2, 2, 4, 4);
    CHECK(rep.n.value == 7425);
    CHECK(rep.k->value == 1107);
    CHECK(rep.d_lower.value == 4455);

    // b = 1 still decomposes into two summands; both hit degree 4 here, so
    // the per-degree value C(8,4) - C(5,1) = 65 is counted twice.
    const auto rep2 = params::corollary_2a4_params(2, 1, 4, 4);
    CHECK(rep2.k->value == 2 * 65);
    CHECK(rep2.n.value == 7425);
    CHECK(rep2.d_lower.value == 7425 - 1485);

    CHECK_THROWS_AS(params::corollary_2a4_params(2, 1, 1, 1), HypothesisViolation);
    CHECK_THROWS_AS(params::corollary_2a4_params(2, 9, 4, 4), HypothesisViolation);
}

TEST_CASE("corollary and general bound agree for every small A2 configuration") {
    for (int q : {2, 3, 4, 5}) {
        const size_t len = static_cast<size_t>(q) * q + q + 1;
        for (int b = 1; b < q + 1; ++b) {
            const auto zero = mvec({}, len);
            const auto cor = params::corollary_a2_params(q, b, {1, 1}, {zero, zero});
            params::BoundInputs in{SurfaceFamily(Family::A2, q), 0, b, 0, {}, {}, {}};
            const auto gen = params::general_bound(in);
            CHECK(cor.d_lower.value == gen.d_lower.value);
            CHECK(cor.n.value == gen.n.value);
            CHECK(gen.branch == "otherwise");
            // Both specialize Hansen with l = 0 and the full fiber sum.
            const long long s_count = (static_cast<long long>(q) * q + q + 1) * (q + 1);
            CHECK(cor.d_lower.value == params::hansen_bound(cor.n.value, 0, q + 1, s_count * b));
        }
    }
}

TEST_CASE("2A4 k formula is monotone in each twist over the admissible grid") {
    for (int q : {2, 3}) {
        const int lo = q + 1, hi = q * q * q + 1;
        for (int b = 1; b < q * q + 1 && b <= 3; ++b) {
            auto admissible = [&](int t1, int t2) {
                for (int i1 = 0; i1 <= b; ++i1) {
                    const int t = i1 * t1 + (b - i1) * t2;
                    if (t <= lo || t >= hi) return false;
                }
                return true;
            };
            for (int t1 = 1; t1 <= hi; ++t1) {
                for (int t2 = 1; t2 <= hi; ++t2) {
                    if (!admissible(t1, t2) || !admissible(t1 + 1, t2)) continue;
                    const auto a = params::corollary_2a4_params(q, b, t1, t2);
                    const auto bigger = params::corollary_2a4_params(q, b, t1 + 1, t2);
                    CHECK(bigger.k->value >= a.k->value);
                }
            }
        }
    }
}

TEST_CASE("d_lower never exceeds n") {
    for (int q : {2, 3}) {
        const size_t len = static_cast<size_t>(q) * q + q + 1;
        for (int b = 1; b < q + 1; ++b) {
            const auto zero = mvec({}, len);
            const auto rep = params::corollary_a2_params(q, b, {1, 1}, {zero, zero});
            CHECK(rep.d_lower.value <= rep.n.value);
        }
    }
}
