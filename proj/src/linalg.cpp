#include "dlcodes/linalg.hpp"

namespace dlcodes::linalg {

namespace {

void check_field(const Mat& m, const gf::Field& f) {
    (void)m;
    if (f.q() > 256) throw IndexOutOfRange("matrix arithmetic requires q <= 256");
}

// row_r -= factor * row_s, from column `from` on.
void axpy(Mat& m, int r, int s, int factor, int from, const gf::Field& f) {
    if (factor == 0) return;
    uint8_t* rr = m.row(r);
    const uint8_t* rs = m.row(s);
    for (int c = from; c < m.cols; ++c)
        rr[c] = static_cast<uint8_t>(f.sub(rr[c], f.mul(factor, rs[c])));
}

}  // namespace

std::vector<int> rref_in_place(Mat& m, const gf::Field& f) {
    check_field(m, f);
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int pr = -1;
        for (int r = row; r < m.rows; ++r) {
            if (m.at(r, col) != 0) {
                pr = r;
                break;
            }
        }
        if (pr < 0) continue;
        if (pr != row)
            for (int c = col; c < m.cols; ++c) std::swap(m.at(row, c), m.at(pr, c));
        const int scale = f.inv(m.at(row, col));
        if (scale != 1) {
            uint8_t* rr = m.row(row);
            for (int c = col; c < m.cols; ++c) rr[c] = static_cast<uint8_t>(f.mul(rr[c], scale));
        }
        for (int r = 0; r < m.rows; ++r)
            if (r != row) axpy(m, r, row, m.at(r, col), col, f);
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int rank(Mat m, const gf::Field& f) {
    check_field(m, f);
    // Forward elimination only; enough for the rank.
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int pr = -1;
        for (int r = row; r < m.rows; ++r) {
            if (m.at(r, col) != 0) {
                pr = r;
                break;
            }
        }
        if (pr < 0) continue;
        if (pr != row)
            for (int c = col; c < m.cols; ++c) std::swap(m.at(row, c), m.at(pr, c));
        const int pinv = f.inv(m.at(row, col));
        for (int r = row + 1; r < m.rows; ++r)
            axpy(m, r, row, f.mul(m.at(r, col), pinv), col, f);
        ++row;
    }
    return row;
}

Mat kernel_basis(const Mat& m, const gf::Field& f) {
    Mat r = m;
    const std::vector<int> pivots = rref_in_place(r, f);
    std::vector<bool> is_pivot(static_cast<size_t>(m.cols), false);
    for (int c : pivots) is_pivot[static_cast<size_t>(c)] = true;

    Mat ker(m.cols - static_cast<int>(pivots.size()), m.cols);
    int out = 0;
    for (int free = 0; free < m.cols; ++free) {
        if (is_pivot[static_cast<size_t>(free)]) continue;
        ker.at(out, free) = 1;
        for (size_t i = 0; i < pivots.size(); ++i)
            ker.at(out, pivots[i]) = static_cast<uint8_t>(f.neg(r.at(static_cast<int>(i), free)));
        ++out;
    }
    rref_in_place(ker, f);
    return ker;
}

std::vector<int> independent_rows(const Mat& m, const gf::Field& f) {
    check_field(m, f);
    std::vector<int> kept;
    Mat basis(0, m.cols);          // echelon rows with normalized pivots
    std::vector<int> pivot_col;
    std::vector<uint8_t> work(static_cast<size_t>(m.cols));
    for (int r = 0; r < m.rows; ++r) {
        std::copy(m.row(r), m.row(r) + m.cols, work.begin());
        for (size_t i = 0; i < pivot_col.size(); ++i) {
            const int factor = work[static_cast<size_t>(pivot_col[i])];
            if (factor == 0) continue;
            const uint8_t* bs = basis.row(static_cast<int>(i));
            for (int c = pivot_col[i]; c < m.cols; ++c)
                work[static_cast<size_t>(c)] = static_cast<uint8_t>(f.sub(work[static_cast<size_t>(c)], f.mul(factor, bs[c])));
        }
        int lead = -1;
        for (int c = 0; c < m.cols; ++c) {
            if (work[static_cast<size_t>(c)] != 0) {
                lead = c;
                break;
            }
        }
        if (lead < 0) continue;
        const int scale = f.inv(work[static_cast<size_t>(lead)]);
        if (scale != 1)
            for (int c = lead; c < m.cols; ++c)
                work[static_cast<size_t>(c)] = static_cast<uint8_t>(f.mul(work[static_cast<size_t>(c)], scale));
        basis.rows += 1;
        basis.a.insert(basis.a.end(), work.begin(), work.end());
        pivot_col.push_back(lead);
        kept.push_back(r);
    }
    return kept;
}

Mat select_rows(const Mat& m, const std::vector<int>& idx) {
    Mat out(static_cast<int>(idx.size()), m.cols);
    for (size_t i = 0; i < idx.size(); ++i)
        std::copy(m.row(idx[i]), m.row(idx[i]) + m.cols, out.row(static_cast<int>(i)));
    return out;
}

}  // namespace dlcodes::linalg
