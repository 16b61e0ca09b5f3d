#pragma once

#include <string>
#include <vector>

#include "dlcodes/dl_surfaces.hpp"
#include "dlcodes/linalg.hpp"
#include "dlcodes/projgeom.hpp"

namespace dlcodes::rr_spaces {

/// Divisor data on the blown-up plane: degree n of the hyperplane part and
/// one vanishing multiplicity per canonical base point of P^2(F_q).
struct LineBundleA2 {
    int n = 0;
    std::vector<int> m;

    LineBundleA2() = default;
    LineBundleA2(int n_, std::vector<int> m_) : n(n_), m(std::move(m_)) {}
};

struct SectionBasis {
    LineBundleA2 bundle;
    std::vector<projgeom::HomogPoly> polys;
    int dim = 0;
};

/// Checks that the multiplicity vector has one entry per point of P^2(F_q),
/// all non-negative.
void validate_bundle(const LineBundleA2& bundle, const gf::Field& f);

/// Matrix of the vanishing conditions: one row per Taylor coefficient of
/// order < m_j at base point j (after moving the point to [1:0:0] and
/// dehomogenizing), columns indexed by monomial_basis(3, n).  Row count is
/// sum_j C(m_j+1, 2).
linalg::Mat vanishing_matrix(const LineBundleA2& bundle, const gf::Field& f);

/// Basis of the kernel of the vanishing conditions, in reduced echelon form
/// with respect to the canonical monomial order.
SectionBasis section_basis(const LineBundleA2& bundle, const gf::FieldPtr& f);

/// The closed-form dimension 1/2 (n(n+3) - sum_j m_j(m_j+1)) + 1.  Valid
/// when the bundle is excellent for its configuration; the arithmetic value
/// is returned regardless and can be negative.
long long h0_formula(const LineBundleA2& bundle);

/// Coefficients of t^0 .. t^upto in s(base + t * dir), taken at the given
/// coordinate representatives.  The canonical evaluation uses normalized
/// representatives; other representatives scale the coefficients.
std::vector<int> line_expansion(const projgeom::HomogPoly& s, const std::vector<int>& base,
                                const std::vector<int>& dir, int upto);

/// First point in canonical order on the line distinct from the base; this
/// pins the fiber trivialization.
projgeom::ProjPoint second_point_on_line(const projgeom::ProjPoint& line,
                                         const projgeom::ProjPoint& base, const gf::Field& f);

/// Value of the section at a surface point: plain evaluation when mult = 0,
/// otherwise the order-mult coefficient of the line parametrization through
/// the canonical second point.  Throws InsufficientVanishing when a
/// coefficient of order < mult is nonzero.
int eval_section(const projgeom::HomogPoly& s, const dl_surfaces::SurfacePointA2& pt, int mult,
                 const gf::Field& f);

/// One named inequality of the excellence check.
struct Condition {
    std::string name;
    bool pass;
    std::string detail;
};

/// The four conditions a combined class (n, m) must satisfy for the
/// closed-form dimension to be guaranteed, for base points in canonical
/// order: degree cap, head-sum bound, non-increasing multiplicities, and
/// the total-sum bound.
std::vector<Condition> excellence_conditions(int n, const std::vector<int>& m, int q);

bool all_pass(const std::vector<Condition>& conds);

}  // namespace dlcodes::rr_spaces
