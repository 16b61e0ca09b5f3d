#include "dlcodes/rr_spaces.hpp"

#include <numeric>
#include <sstream>

namespace dlcodes::rr_spaces {

using projgeom::HomogPoly;
using projgeom::ProjPoint;

void validate_bundle(const LineBundleA2& bundle, const gf::Field& f) {
    const long long q = f.q();
    const long long expected = q * q + q + 1;
    if (static_cast<long long>(bundle.m.size()) != expected)
        throw IndexOutOfRange("multiplicity vector must have q^2+q+1 entries");
    if (bundle.n < 0) throw IndexOutOfRange("bundle degree must be >= 0");
    for (int mj : bundle.m)
        if (mj < 0) throw IndexOutOfRange("multiplicities must be >= 0");
}

namespace {

// Completes the base point to a coordinate frame: returns the two standard
// basis indices j1 < j2 distinct from the leading index of P.
std::pair<int, int> frame_indices(const ProjPoint& p) {
    int lead = 0;
    while (p.coords[static_cast<size_t>(lead)] == 0) ++lead;
    int j1 = lead == 0 ? 1 : 0;
    int j2 = lead == 2 ? 1 : 2;
    return {j1, j2};
}

int binom_mod(const gf::Field& f, int a, int b) {
    return f.from_integer(projgeom::binomial(a, b));
}

}  // namespace

linalg::Mat vanishing_matrix(const LineBundleA2& bundle, const gf::Field& f) {
    validate_bundle(bundle, f);
    const std::vector<std::vector<int>> monos = projgeom::monomial_basis(3, bundle.n);
    const std::vector<ProjPoint> pts = projgeom::enumerate_projective(2, f);

    long long nrows = 0;
    for (int mj : bundle.m) nrows += static_cast<long long>(mj) * (mj + 1) / 2;

    linalg::Mat mat(static_cast<int>(nrows), static_cast<int>(monos.size()));
    int row = 0;
    for (size_t j = 0; j < pts.size(); ++j) {
        const int mult = bundle.m[j];
        if (mult == 0) continue;
        const ProjPoint& P = pts[j];
        const auto [j1, j2] = frame_indices(P);
        // After the coordinate change Y -> Y0*P + Y1*e_{j1} + Y2*e_{j2} and
        // dehomogenization at Y0 = 1, the coefficient of y1^d1 y2^d2 in the
        // pullback of the monomial X^a is
        //   prod_{i not in {j1,j2}} P_i^{a_i}
        //   * C(a_{j1}, d1) P_{j1}^{a_{j1}-d1} * C(a_{j2}, d2) P_{j2}^{a_{j2}-d2}.
        for (int order = 0; order < mult; ++order) {
            for (int d1 = order; d1 >= 0; --d1) {
                const int d2 = order - d1;
                for (size_t c = 0; c < monos.size(); ++c) {
                    const std::vector<int>& a = monos[c];
                    const int a1 = a[static_cast<size_t>(j1)];
                    const int a2 = a[static_cast<size_t>(j2)];
                    if (a1 < d1 || a2 < d2) continue;
                    int v = f.one();
                    for (int i = 0; i < 3; ++i) {
                        if (i == j1 || i == j2) continue;
                        v = f.mul(v, f.pow(P.coords[static_cast<size_t>(i)], a[static_cast<size_t>(i)]));
                    }
                    v = f.mul(v, binom_mod(f, a1, d1));
                    v = f.mul(v, f.pow(P.coords[static_cast<size_t>(j1)], a1 - d1));
                    v = f.mul(v, binom_mod(f, a2, d2));
                    v = f.mul(v, f.pow(P.coords[static_cast<size_t>(j2)], a2 - d2));
                    mat.at(row, static_cast<int>(c)) = static_cast<uint8_t>(v);
                }
                ++row;
            }
        }
    }
    return mat;
}

SectionBasis section_basis(const LineBundleA2& bundle, const gf::FieldPtr& f) {
    const linalg::Mat conditions = vanishing_matrix(bundle, *f);
    const linalg::Mat ker = linalg::kernel_basis(conditions, *f);
    const std::vector<std::vector<int>> monos = projgeom::monomial_basis(3, bundle.n);

    SectionBasis out;
    out.bundle = bundle;
    out.dim = ker.rows;
    out.polys.reserve(static_cast<size_t>(ker.rows));
    for (int r = 0; r < ker.rows; ++r) {
        HomogPoly poly(3, bundle.n, f);
        for (size_t c = 0; c < monos.size(); ++c)
            if (ker.at(r, static_cast<int>(c)) != 0) poly.set_term(monos[c], ker.at(r, static_cast<int>(c)));
        out.polys.push_back(std::move(poly));
    }
    return out;
}

long long h0_formula(const LineBundleA2& bundle) {
    long long s = 0;
    for (int mj : bundle.m) s += static_cast<long long>(mj) * (mj + 1);
    const long long n = bundle.n;
    return (n * (n + 3) - s) / 2 + 1;
}

std::vector<int> line_expansion(const HomogPoly& s, const std::vector<int>& base,
                                const std::vector<int>& dir, int upto) {
    if (s.nvars() != static_cast<int>(base.size()) || base.size() != dir.size())
        throw ArityMismatch("line_expansion: arity mismatch");
    const gf::Field& f = s.field();
    std::vector<int> acc(static_cast<size_t>(upto) + 1, 0);
    std::vector<int> term, next;
    for (const auto& [expo, coeff] : s.terms()) {
        // Truncated product of (base_i + t dir_i)^{e_i} over the coordinates.
        term.assign(static_cast<size_t>(upto) + 1, 0);
        term[0] = coeff;
        for (size_t i = 0; i < expo.size(); ++i) {
            const int e = expo[i];
            if (e == 0) continue;
            // Coefficients of (B + tD)^e up to t^upto: C(e,d) B^{e-d} D^d.
            next.assign(static_cast<size_t>(upto) + 1, 0);
            for (int d = 0; d <= std::min(e, upto); ++d) {
                const int w = f.mul(binom_mod(f, e, d),
                                    f.mul(f.pow(base[i], e - d), f.pow(dir[i], d)));
                if (w == 0) continue;
                for (int t = 0; t + d <= upto; ++t) {
                    if (term[static_cast<size_t>(t)] == 0) continue;
                    next[static_cast<size_t>(t + d)] =
                        f.add(next[static_cast<size_t>(t + d)], f.mul(term[static_cast<size_t>(t)], w));
                }
            }
            term.swap(next);
        }
        for (int t = 0; t <= upto; ++t) acc[static_cast<size_t>(t)] = f.add(acc[static_cast<size_t>(t)], term[static_cast<size_t>(t)]);
    }
    return acc;
}

ProjPoint second_point_on_line(const ProjPoint& line, const ProjPoint& base, const gf::Field& f) {
    for (const ProjPoint& r : projgeom::enumerate_projective(2, f)) {
        if (r == base) continue;
        int dot = 0;
        for (int i = 0; i < 3; ++i)
            dot = f.add(dot, f.mul(line.coords[static_cast<size_t>(i)], r.coords[static_cast<size_t>(i)]));
        if (dot == 0) return r;
    }
    throw IndexOutOfRange("line has no second rational point");
}

int eval_section(const HomogPoly& s, const dl_surfaces::SurfacePointA2& pt, int mult,
                 const gf::Field& f) {
    if (mult == 0) return projgeom::eval_poly(s, pt.base);
    const ProjPoint q = second_point_on_line(pt.line, pt.base, f);
    const std::vector<int> coeffs = line_expansion(s, pt.base.coords, q.coords, mult);
    for (int t = 0; t < mult; ++t) {
        if (coeffs[static_cast<size_t>(t)] != 0) {
            std::ostringstream os;
            os << "section does not vanish to order " << mult << " at the base point"
               << " (order-" << t << " coefficient is nonzero)";
            throw InsufficientVanishing(os.str());
        }
    }
    return coeffs[static_cast<size_t>(mult)];
}

std::vector<Condition> excellence_conditions(int n, const std::vector<int>& m, int q) {
    std::vector<Condition> out;
    std::ostringstream d;

    const bool c1 = n <= 3 * (q - 1);
    d << n << " <= " << 3 * (q - 1);
    out.push_back({"degree-cap", c1, d.str()});

    // The first q+1 canonical base points lie on one rational line, so with
    // the ordering condition below this bounds the multiplicity load that
    // any rational line can carry.
    long long head = 0;
    for (size_t j = 0; j < m.size() && j < static_cast<size_t>(q) + 1; ++j) head += m[j];
    d.str("");
    d << n << " >= " << head;
    out.push_back({"head-sum", n >= head, d.str()});

    bool sorted = true;
    for (size_t j = 0; j + 1 < m.size(); ++j)
        if (m[j] < m[j + 1]) sorted = false;
    out.push_back({"non-increasing", sorted, sorted ? "multiplicities non-increasing"
                                                    : "multiplicities increase somewhere"});

    const long long total = std::accumulate(m.begin(), m.end(), 0LL);
    d.str("");
    d << 3LL * n << " > " << total;
    out.push_back({"total-sum", 3LL * n > total, d.str()});
    return out;
}

bool all_pass(const std::vector<Condition>& conds) {
    for (const Condition& c : conds)
        if (!c.pass) return false;
    return true;
}

}  // namespace dlcodes::rr_spaces
