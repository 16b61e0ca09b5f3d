#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dlcodes/linalg.hpp"

using namespace dlcodes;
using gf::Field;
using linalg::Mat;

namespace {
Mat make(int rows, int cols, std::vector<int> vals) {
    Mat m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.at(r, c) = static_cast<uint8_t>(vals[static_cast<size_t>(r * cols + c)]);
    return m;
}
}  // namespace

TEST_CASE("rank over GF(2)") {
    auto f = Field::canonical(2);
    CHECK(linalg::rank(make(2, 3, {1, 0, 1, 0, 1, 1}), *f) == 2);
    CHECK(linalg::rank(make(3, 3, {1, 0, 1, 0, 1, 1, 1, 1, 0}), *f) == 2);  // row3 = row1 + row2
    CHECK(linalg::rank(make(2, 2, {0, 0, 0, 0}), *f) == 0);
}

TEST_CASE("reduced echelon form over GF(3)") {
    auto f = Field::canonical(3);
    Mat m = make(2, 3, {2, 1, 0, 1, 2, 1});
    const auto pivots = linalg::rref_in_place(m, *f);
    // Second column is 2x the first, so the pivots land on columns 0 and 2.
    REQUIRE(pivots == std::vector<int>{0, 2});
    CHECK(m.at(0, 0) == 1);
    CHECK(m.at(0, 1) == 2);
    CHECK(m.at(0, 2) == 0);
    CHECK(m.at(1, 0) == 0);
    CHECK(m.at(1, 1) == 0);
    CHECK(m.at(1, 2) == 1);
    // Verify the row space is unchanged: original rows are combinations.
    // 2x + y = 0, x + 2y + z = 0 over GF(3) has solution space of dim 1.
    Mat k = linalg::kernel_basis(make(2, 3, {2, 1, 0, 1, 2, 1}), *f);
    REQUIRE(k.rows == 1);
    // Check the kernel vector satisfies both equations.
    const int x = k.at(0, 0), y = k.at(0, 1), z = k.at(0, 2);
    CHECK(f->add(f->mul(2, x), y) == 0);
    CHECK(f->add(f->add(x, f->mul(2, y)), z) == 0);
}

TEST_CASE("kernel of the zero and identity matrices") {
    auto f = Field::canonical(2);
    CHECK(linalg::kernel_basis(Mat(0, 4), *f).rows == 4);
    CHECK(linalg::kernel_basis(make(2, 2, {1, 0, 0, 1}), *f).rows == 0);
}

TEST_CASE("kernel basis is in reduced echelon form") {
    auto f = Field::canonical(2);
    Mat k = linalg::kernel_basis(make(1, 4, {1, 1, 1, 1}), *f);
    REQUIRE(k.rows == 3);
    Mat copy = k;
    linalg::rref_in_place(copy, *f);
    CHECK(copy == k);
}

TEST_CASE("independent row selection keeps the first spanning subset") {
    auto f = Field::canonical(2);
    const Mat m = make(4, 3, {1, 1, 0, 1, 1, 0, 0, 1, 1, 1, 0, 1});
    const auto idx = linalg::independent_rows(m, *f);
    CHECK(idx == std::vector<int>{0, 2});  // row1 duplicates row0; row3 = row0+row2
    const Mat sel = linalg::select_rows(m, idx);
    CHECK(sel.rows == 2);
    CHECK(linalg::rank(sel, *f) == 2);
}

TEST_CASE("matrix ops agree between GF(4) table arithmetic and rank facts") {
    auto f = Field::canonical(4);
    // Vandermonde-style rows at distinct points are independent.
    Mat m(3, 4);
    const int pts[4] = {0, 1, 2, 3};
    for (int c = 0; c < 4; ++c) {
        m.at(0, c) = 1;
        m.at(1, c) = static_cast<uint8_t>(pts[c]);
        m.at(2, c) = static_cast<uint8_t>(f->mul(pts[c], pts[c]));
    }
    CHECK(linalg::rank(m, *f) == 3);
}
