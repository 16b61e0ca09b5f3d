#pragma once

#include <map>
#include <vector>

#include "dlcodes/gf.hpp"

namespace dlcodes::projgeom {

/// A point of projective space, stored as element codes of the homogeneous
/// coordinates.  Normalized form: the first nonzero coordinate equals 1, so
/// two points are equal iff their coordinate vectors are.
struct ProjPoint {
    std::vector<int> coords;

    int dim() const { return static_cast<int>(coords.size()) - 1; }
    bool operator==(const ProjPoint& o) const { return coords == o.coords; }
    bool operator!=(const ProjPoint& o) const { return !(*this == o); }
};

/// Scales a coordinate vector so the first nonzero entry is 1.
ProjPoint normalize(std::vector<int> coords, const gf::Field& f);

/// Position of a normalized point in the canonical enumeration: the integer
/// sum_i ordinal(c_i) * q^i, coordinate 0 least significant.
long long point_value(const ProjPoint& pt, const gf::Field& f);

/// All normalized points of P^dim(F_q) in canonical order (ascending
/// point_value).  |result| = (q^{dim+1}-1)/(q-1).
std::vector<ProjPoint> enumerate_projective(int dim, const gf::Field& f);

long long projective_count(int dim, long long q);

/// Graded-lexicographic comparison of exponent vectors of equal total
/// degree: higher power of the first variable sorts first.
struct GrlexLess {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

/// All exponent vectors of the given total degree over nvars variables, in
/// graded-lexicographic order.  Count: C(nvars-1+degree, degree).
std::vector<std::vector<int>> monomial_basis(int nvars, int degree);

long long binomial(long long n, long long k);

/// A homogeneous multivariate polynomial with nonzero coefficients only.
/// Construction caps the degree at q^3+1 (q the coefficient field size);
/// larger degrees have no use here.
class HomogPoly {
  public:
    HomogPoly(int nvars, int degree, gf::FieldPtr field);

    int nvars() const { return nvars_; }
    int degree() const { return degree_; }
    const gf::Field& field() const { return *field_; }
    gf::FieldPtr field_ptr() const { return field_; }
    const std::map<std::vector<int>, int, GrlexLess>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    /// Adds c * X^expo to the polynomial, merging with an existing term.
    void add_term(const std::vector<int>& expo, int coeff_code);
    void set_term(const std::vector<int>& expo, int coeff_code);
    int coeff(const std::vector<int>& expo) const;

    std::string to_string() const;

  private:
    int nvars_;
    int degree_;
    gf::FieldPtr field_;
    std::map<std::vector<int>, int, GrlexLess> terms_;
};

/// Value of f at the normalized representative of P.  Vanishing is
/// representative-independent; nonzero values are not.
int eval_poly(const HomogPoly& f, const ProjPoint& pt);

HomogPoly poly_mul(const HomogPoly& f, const HomogPoly& g);
HomogPoly poly_add(const HomogPoly& f, const HomogPoly& g);
HomogPoly poly_scale(const HomogPoly& f, int c);

/// Normalized points where every equation vanishes, in enumeration order.
std::vector<ProjPoint> enumerate_variety(const std::vector<HomogPoly>& eqs, int dim,
                                         const gf::Field& f);

}  // namespace dlcodes::projgeom
