#pragma once

#include <cstdint>
#include <vector>

#include "dlcodes/gf.hpp"

namespace dlcodes::linalg {

/// Dense row-major matrix of field element codes.  Restricted to fields with
/// q <= 256 so entries fit in a byte; that covers every field this project
/// enumerates over.
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<uint8_t> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * static_cast<size_t>(c), 0) {}

    uint8_t& at(int r, int c) { return a[static_cast<size_t>(r) * static_cast<size_t>(cols) + static_cast<size_t>(c)]; }
    uint8_t at(int r, int c) const { return a[static_cast<size_t>(r) * static_cast<size_t>(cols) + static_cast<size_t>(c)]; }
    uint8_t* row(int r) { return a.data() + static_cast<size_t>(r) * static_cast<size_t>(cols); }
    const uint8_t* row(int r) const { return a.data() + static_cast<size_t>(r) * static_cast<size_t>(cols); }

    bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

/// In-place reduced row echelon form; returns the pivot column of each of the
/// first rank rows.
std::vector<int> rref_in_place(Mat& m, const gf::Field& f);

int rank(Mat m, const gf::Field& f);

/// Basis of the right kernel (one vector per row of the result), itself in
/// reduced row echelon form with respect to the column order.
Mat kernel_basis(const Mat& m, const gf::Field& f);

/// Indices of a maximal linearly independent subset of rows, scanned in
/// order.  The index list is what generator-matrix builders keep.
std::vector<int> independent_rows(const Mat& m, const gf::Field& f);

Mat select_rows(const Mat& m, const std::vector<int>& idx);

}  // namespace dlcodes::linalg
