#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dlcodes/projgeom.hpp"

namespace dlcodes::dl_surfaces {

enum class Family { A2, TwoA3, TwoA4, C2 };

Family parse_family(const std::string& name);   // "A2", "2A3", "2A4", "C2"
std::string family_name(Family fam);

/// One of the four standard surface families over a base prime power q.
/// The evaluation field is GF(q^delta).
struct SurfaceFamily {
    Family tag;
    int q;

    SurfaceFamily(Family t, int q_);

    int delta() const { return (tag == Family::TwoA3 || tag == Family::TwoA4) ? 2 : 1; }
    long long q_delta() const { return delta() == 2 ? static_cast<long long>(q) * q : q; }
    /// Rational points of a projective line over the evaluation field.
    long long p1_points() const { return q_delta() + 1; }
};

/// A rational point of the A2 surface in the blow-up model: a base point of
/// P^2(F_q) together with a rational line through it (the direction on the
/// exceptional curve).  Lines are stored as normalized dual coefficient
/// vectors, so incidence is the dot product test.
struct SurfacePointA2 {
    projgeom::ProjPoint base;
    projgeom::ProjPoint line;
};

struct DivisorData {
    long long b_component_count;
    long long points_per_component;   // q^delta + 1
    std::optional<long long> d1_dot_d2;
    int point_carrier;                // 1 or 2: which D_i holds the points
};

enum class Provenance { ClosedForm, Derived };

struct PointCount {
    long long value;
    Provenance provenance;
};

/// #S(F_{q^delta}).  A2 and 2A4 have closed forms; 2A3 and C2 are computed
/// by brute force over the image variety and flagged as derived.  Requesting
/// closed_form_only for the latter throws UnsupportedFamilyForClosedForm.
PointCount surface_point_count(const SurfaceFamily& fam, bool closed_form_only = false);

/// All (base point, incident line) pairs, base points in canonical order and
/// lines in canonical order within each base point.
std::vector<SurfacePointA2> a2_points(int q, const gf::Field& f);

/// Defining equations of the image variety Z over GF(q^delta).  Empty for
/// A2 (Z is the whole plane).
std::vector<projgeom::HomogPoly> z_equations(const SurfaceFamily& fam);

DivisorData divisor_data(const SurfaceFamily& fam);

/// Exposed for tests: division step shared by divisor_data.
DivisorData make_divisor_data(long long surface_points, long long per_component, int carrier);

}  // namespace dlcodes::dl_surfaces
