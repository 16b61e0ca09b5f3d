#include "dlcodes/dl_surfaces.hpp"

namespace dlcodes::dl_surfaces {

using projgeom::HomogPoly;
using projgeom::ProjPoint;

Family parse_family(const std::string& name) {
    if (name == "A2") return Family::A2;
    if (name == "2A3") return Family::TwoA3;
    if (name == "2A4") return Family::TwoA4;
    if (name == "C2") return Family::C2;
    throw IndexOutOfRange("unknown surface family: " + name);
}

std::string family_name(Family fam) {
    switch (fam) {
        case Family::A2: return "A2";
        case Family::TwoA3: return "2A3";
        case Family::TwoA4: return "2A4";
        case Family::C2: return "C2";
    }
    return "?";
}

SurfaceFamily::SurfaceFamily(Family t, int q_) : tag(t), q(q_) {
    if (!gf::is_prime_power(q_)) throw NonPrimeCharacteristic("q must be a prime power");
}

namespace {

// Sum of X_i^{q+1} over nvars variables; the Hermitian-type form.
HomogPoly hermitian_form(int nvars, int exponent_q, const gf::FieldPtr& f) {
    HomogPoly h(nvars, exponent_q + 1, f);
    for (int i = 0; i < nvars; ++i) {
        std::vector<int> e(static_cast<size_t>(nvars), 0);
        e[static_cast<size_t>(i)] = exponent_q + 1;
        h.set_term(e, f->one());
    }
    return h;
}

// X0^q X3 - X0 X3^q + X1 X2^q - X1^q X2.
HomogPoly symplectic_form(int q, const gf::FieldPtr& f) {
    HomogPoly h(4, q + 1, f);
    auto term = [&](int a, int ea, int b, int eb, bool negative) {
        std::vector<int> e(4, 0);
        e[static_cast<size_t>(a)] = ea;
        e[static_cast<size_t>(b)] = eb;
        h.set_term(e, negative ? f->neg(f->one()) : f->one());
    };
    term(0, q, 3, 1, false);
    term(0, 1, 3, q, true);
    term(1, 1, 2, q, false);
    term(1, q, 2, 1, true);
    return h;
}

long long brute_force_z_count(const SurfaceFamily& fam) {
    const gf::FieldPtr f = gf::Field::canonical(fam.q_delta());
    const std::vector<HomogPoly> eqs = z_equations(fam);
    const int dim = fam.tag == Family::TwoA4 ? 4 : 3;
    return static_cast<long long>(projgeom::enumerate_variety(eqs, dim, *f).size());
}

}  // namespace

PointCount surface_point_count(const SurfaceFamily& fam, bool closed_form_only) {
    const long long q = fam.q;
    switch (fam.tag) {
        case Family::A2:
            return {(q * q + q + 1) * (q + 1), Provenance::ClosedForm};
        case Family::TwoA4: {
            const long long q2 = q * q, q3 = q2 * q, q5 = q3 * q2;
            return {(q5 + 1) * (q3 + 1) * (q2 + 1), Provenance::ClosedForm};
        }
        case Family::TwoA3:
        case Family::C2: {
            if (closed_form_only)
                throw UnsupportedFamilyForClosedForm("no closed-form point count for " +
                                                     family_name(fam.tag));
            // Blow-up model: every rational point of Z carries one exceptional
            // line worth of points.
            return {brute_force_z_count(fam) * fam.p1_points(), Provenance::Derived};
        }
    }
    throw IndexOutOfRange("bad family");
}

std::vector<SurfacePointA2> a2_points(int q, const gf::Field& f) {
    if (f.q() != q) throw FieldMismatch("a2_points expects the field GF(q)");
    const std::vector<ProjPoint> pts = projgeom::enumerate_projective(2, f);
    const std::vector<ProjPoint>& lines = pts;  // dual plane has the same canonical points
    std::vector<SurfacePointA2> out;
    out.reserve(pts.size() * static_cast<size_t>(q + 1));
    for (const ProjPoint& p : pts) {
        for (const ProjPoint& l : lines) {
            int dot = 0;
            for (int i = 0; i < 3; ++i)
                dot = f.add(dot, f.mul(p.coords[static_cast<size_t>(i)], l.coords[static_cast<size_t>(i)]));
            if (dot == 0) out.push_back(SurfacePointA2{p, l});
        }
    }
    return out;
}

std::vector<HomogPoly> z_equations(const SurfaceFamily& fam) {
    const int q = fam.q;
    switch (fam.tag) {
        case Family::A2:
            return {};
        case Family::TwoA3:
            return {hermitian_form(4, q, gf::Field::canonical(fam.q_delta()))};
        case Family::C2:
            return {symplectic_form(q, gf::Field::canonical(fam.q_delta()))};
        case Family::TwoA4: {
            const gf::FieldPtr f = gf::Field::canonical(fam.q_delta());
            return {hermitian_form(5, q, f), hermitian_form(5, q * q * q, f)};
        }
    }
    throw IndexOutOfRange("bad family");
}

DivisorData make_divisor_data(long long surface_points, long long per_component, int carrier) {
    if (surface_points % per_component != 0)
        throw NonDivisibleCount("surface point count " + std::to_string(surface_points) +
                                " is not divisible by " + std::to_string(per_component));
    return DivisorData{surface_points / per_component, per_component, std::nullopt, carrier};
}

DivisorData divisor_data(const SurfaceFamily& fam) {
    const int carrier = fam.tag == Family::TwoA4 ? 2 : 1;
    return make_divisor_data(surface_point_count(fam).value, fam.p1_points(), carrier);
}

}  // namespace dlcodes::dl_surfaces
