#include "dlcodes/bundle_codes.hpp"

#include <sstream>

namespace dlcodes::bundle_codes {

using dl_surfaces::Family;
using dl_surfaces::SurfaceFamily;
using dl_surfaces::SurfacePointA2;
using projgeom::HomogPoly;
using projgeom::ProjPoint;
using rr_spaces::Condition;
using rr_spaces::LineBundleA2;

RankTwoBundleSpec RankTwoBundleSpec::for_a2(int q, LineBundleA2 v1, LineBundleA2 v2) {
    RankTwoBundleSpec s{SurfaceFamily(Family::A2, q), std::nullopt, std::nullopt};
    s.a2 = std::make_pair(std::move(v1), std::move(v2));
    return s;
}

RankTwoBundleSpec RankTwoBundleSpec::for_2a4(int q, int t1, int t2) {
    RankTwoBundleSpec s{SurfaceFamily(Family::TwoA4, q), std::nullopt, std::nullopt};
    s.twists = std::make_pair(t1, t2);
    return s;
}

std::vector<SymmComponent> symm_decomposition(const CodeSpec& spec) {
    if (spec.b < 0) throw IndexOutOfRange("symmetric power must be >= 0");
    std::vector<SymmComponent> out;
    out.reserve(static_cast<size_t>(spec.b) + 1);
    for (int i1 = 0; i1 <= spec.b; ++i1) {
        const int i2 = spec.b - i1;
        SymmComponent comp{i1, i2, std::nullopt, std::nullopt};
        if (spec.bundle.a2) {
            const auto& [v1, v2] = *spec.bundle.a2;
            LineBundleA2 combined;
            combined.n = i1 * v1.n + i2 * v2.n;
            combined.m.resize(v1.m.size());
            for (size_t j = 0; j < v1.m.size(); ++j)
                combined.m[j] = i1 * v1.m[j] + i2 * v2.m[j];
            comp.a2_bundle = std::move(combined);
        }
        if (spec.bundle.twists) {
            const auto& [t1, t2] = *spec.bundle.twists;
            comp.degree = i1 * t1 + i2 * t2;
        }
        out.push_back(std::move(comp));
    }
    return out;
}

namespace {

Condition range_condition(const std::string& name, long long lo, long long v, long long hi,
                          bool lo_strict, bool hi_strict) {
    std::ostringstream d;
    d << lo << (lo_strict ? " < " : " <= ") << v << (hi_strict ? " < " : " <= ") << hi;
    const bool pass = (lo_strict ? lo < v : lo <= v) && (hi_strict ? v < hi : v <= hi);
    return {name, pass, d.str()};
}

}  // namespace

HypothesisReport check_hypotheses(const CodeSpec& spec) {
    HypothesisReport rep;
    const SurfaceFamily& fam = spec.bundle.family;
    const int q = fam.q;

    rep.global.push_back(range_condition("b-range", 0, spec.b, fam.q_delta() + 1, true, true));
    if (spec.a != 0)
        rep.global.push_back({"a-zero", false, "explicit constructions require a = 0"});

    for (const SymmComponent& comp : symm_decomposition(spec)) {
        ComponentConditions cc{comp.i1, comp.i2, {}};
        if (comp.a2_bundle) {
            cc.conditions = rr_spaces::excellence_conditions(comp.a2_bundle->n, comp.a2_bundle->m, q);
        } else if (comp.degree) {
            const long long q3 = static_cast<long long>(q) * q * q;
            cc.conditions.push_back(
                range_condition("degree-range", q + 1, *comp.degree, q3 + 1, true, true));
        }
        rep.per_component.push_back(std::move(cc));
    }

    rep.all_pass = true;
    for (const Condition& c : rep.global)
        if (!c.pass) rep.all_pass = false;
    for (const ComponentConditions& cc : rep.per_component)
        for (const Condition& c : cc.conditions)
            if (!c.pass) rep.all_pass = false;
    return rep;
}

std::string a2_column_label(const SurfacePointA2& s, const ProjPoint& u, const gf::Field& f) {
    std::ostringstream os;
    os << "s:";
    for (size_t i = 0; i < s.base.coords.size(); ++i) os << (i ? "," : "") << f.digits(s.base.coords[i]);
    os << ";l:";
    for (size_t i = 0; i < s.line.coords.size(); ++i) os << (i ? "," : "") << f.digits(s.line.coords[i]);
    os << ";u:";
    for (size_t i = 0; i < u.coords.size(); ++i) os << (i ? "," : "") << f.digits(u.coords[i]);
    return os.str();
}

std::string z_column_label(const ProjPoint& z, const ProjPoint& u, const gf::Field& f) {
    std::ostringstream os;
    os << "z:";
    for (size_t i = 0; i < z.coords.size(); ++i) os << (i ? "," : "") << f.digits(z.coords[i]);
    os << ";u:";
    for (size_t i = 0; i < u.coords.size(); ++i) os << (i ? "," : "") << f.digits(u.coords[i]);
    return os.str();
}

LinearCode build_code_a2(const CodeSpec& spec, const gf::FieldPtr& field) {
    const SurfaceFamily& fam = spec.bundle.family;
    if (fam.tag != Family::A2 || !spec.bundle.a2)
        throw IndexOutOfRange("build_code_a2 needs an A2 bundle spec");
    if (spec.a != 0) throw UnsupportedTwist("divisor twists (a > 0) have no section-space model");
    if (field->q() != fam.q) throw FieldMismatch("field must be GF(q) for the A2 construction");
    if (spec.b < 0 || spec.b >= fam.q + 1)
        throw HypothesisViolation("symmetric power b must satisfy 0 < b < q+1 (b = 0 tolerated as trivial)");

    const gf::Field& f = *field;
    const std::vector<SurfacePointA2> surface = dl_surfaces::a2_points(fam.q, f);
    const std::vector<ProjPoint> fiber = projgeom::enumerate_projective(1, f);
    const int n = static_cast<int>(surface.size() * fiber.size());

    const HypothesisReport hyps = check_hypotheses(spec);
    const std::vector<SymmComponent> comps = symm_decomposition(spec);

    long long k_formula = 0;
    std::vector<rr_spaces::SectionBasis> bases;
    bases.reserve(comps.size());
    long long nrows = 0;
    for (const SymmComponent& comp : comps) {
        bases.push_back(rr_spaces::section_basis(*comp.a2_bundle, field));
        nrows += bases.back().dim;
        k_formula += rr_spaces::h0_formula(*comp.a2_bundle);
    }

    linalg::Mat gen(static_cast<int>(nrows), n);
    int row = 0;
    for (size_t ci = 0; ci < comps.size(); ++ci) {
        const SymmComponent& comp = comps[ci];
        const LineBundleA2& bundle = *comp.a2_bundle;
        // Leading-form values are per (section, surface point); the fiber
        // monomial scales them across the q+1 fiber columns.  a2_points emits
        // q+1 consecutive entries per base point in canonical order, so the
        // base-point index is si / (q+1).
        for (const HomogPoly& g : bases[ci].polys) {
            int col = 0;
            for (size_t si = 0; si < surface.size(); ++si) {
                const SurfacePointA2& s = surface[si];
                const int mult = bundle.m[si / static_cast<size_t>(fam.q + 1)];
                const int val = rr_spaces::eval_section(g, s, mult, f);
                for (const ProjPoint& u : fiber) {
                    int entry = val;
                    if (entry != 0) {
                        entry = f.mul(entry, f.pow(u.coords[0], comp.i1));
                        entry = f.mul(entry, f.pow(u.coords[1], comp.i2));
                    }
                    gen.at(row, col) = static_cast<uint8_t>(entry);
                    ++col;
                }
            }
            ++row;
        }
    }

    const std::vector<int> indep = linalg::independent_rows(gen, f);
    if (nrows == 0 || static_cast<long long>(indep.size()) < nrows) {
        std::ostringstream os;
        os << "evaluation map not injective: " << indep.size() << " independent rows out of "
           << nrows;
        throw RankDeficient(os.str());
    }

    LinearCode code;
    code.field = field;
    code.n = n;
    code.k = static_cast<int>(nrows);
    code.gen = std::move(gen);
    code.column_labels.reserve(static_cast<size_t>(n));
    for (const SurfacePointA2& s : surface)
        for (const ProjPoint& u : fiber) code.column_labels.push_back(a2_column_label(s, u, f));

    code.provenance.construction = "a2";
    code.provenance.family = "A2";
    code.provenance.q = fam.q;
    code.provenance.b = spec.b;
    code.provenance.proxy = false;
    code.provenance.surface_points = static_cast<long long>(surface.size());
    code.provenance.candidate_rows = nrows;
    code.provenance.rank = static_cast<long long>(indep.size());
    code.provenance.k_formula = k_formula;
    code.provenance.hypotheses = hyps;
    return code;
}

LinearCode build_code_2a4_proxy(const CodeSpec& spec, const gf::FieldPtr& field) {
    const SurfaceFamily& fam = spec.bundle.family;
    if (fam.tag != Family::TwoA4 || !spec.bundle.twists)
        throw IndexOutOfRange("build_code_2a4_proxy needs a 2A4 bundle spec");
    if (spec.a != 0) throw UnsupportedTwist("divisor twists (a > 0) have no section-space model");
    if (field->q() != fam.q_delta()) throw FieldMismatch("field must be GF(q^2) for the 2A4 construction");
    if (spec.b < 0 || spec.b >= fam.q_delta() + 1)
        throw HypothesisViolation("symmetric power b must satisfy 0 < b < q^2+1 (b = 0 tolerated as trivial)");

    const HypothesisReport hyps = check_hypotheses(spec);
    if (spec.b >= 1) {
        for (const ComponentConditions& cc : hyps.per_component)
            for (const Condition& c : cc.conditions)
                if (!c.pass)
                    throw HypothesisViolation("component degree out of range: " + c.detail);
    }

    const gf::Field& f = *field;
    const std::vector<HomogPoly> eqs = dl_surfaces::z_equations(fam);
    const std::vector<ProjPoint> zpts = projgeom::enumerate_variety(eqs, 4, f);
    const std::vector<ProjPoint> fiber = projgeom::enumerate_projective(1, f);
    const int n = static_cast<int>(zpts.size() * fiber.size());
    const long long s_count = dl_surfaces::surface_point_count(fam).value;

    const std::vector<SymmComponent> comps = symm_decomposition(spec);
    long long nrows = 0;
    for (const SymmComponent& comp : comps) nrows += projgeom::binomial(4 + *comp.degree, 4);

    linalg::Mat cand(static_cast<int>(nrows), n);
    int row = 0;
    for (const SymmComponent& comp : comps) {
        const int deg = *comp.degree;
        // Precompute fiber monomial values u0^{i1} u1^{i2}.
        std::vector<int> umono(fiber.size());
        for (size_t ui = 0; ui < fiber.size(); ++ui) {
            int v = f.pow(fiber[ui].coords[0], comp.i1);
            v = f.mul(v, f.pow(fiber[ui].coords[1], comp.i2));
            umono[ui] = v;
        }
        for (const std::vector<int>& expo : projgeom::monomial_basis(5, deg)) {
            int col = 0;
            for (const ProjPoint& z : zpts) {
                int v = f.one();
                for (int i = 0; i < 5; ++i)
                    if (expo[static_cast<size_t>(i)] > 0)
                        v = f.mul(v, f.pow(z.coords[static_cast<size_t>(i)], expo[static_cast<size_t>(i)]));
                for (size_t ui = 0; ui < fiber.size(); ++ui) {
                    cand.at(row, col) = static_cast<uint8_t>(f.mul(v, umono[ui]));
                    ++col;
                }
            }
            ++row;
        }
    }

    const std::vector<int> indep = linalg::independent_rows(cand, f);

    long long k_formula = 0;
    for (const SymmComponent& comp : comps) {
        const long long t = *comp.degree;
        k_formula += projgeom::binomial(4 + t, t) - projgeom::binomial(4 + t - (fam.q + 1), t - (fam.q + 1));
    }

    LinearCode code;
    code.field = field;
    code.n = n;
    code.k = static_cast<int>(indep.size());
    code.gen = linalg::select_rows(cand, indep);
    code.column_labels.reserve(static_cast<size_t>(n));
    for (const ProjPoint& z : zpts)
        for (const ProjPoint& u : fiber) code.column_labels.push_back(z_column_label(z, u, f));

    code.provenance.construction = "2a4-proxy";
    code.provenance.family = "2A4";
    code.provenance.q = fam.q;
    code.provenance.b = spec.b;
    code.provenance.proxy = true;
    code.provenance.note = "proxy: evaluated on Z, not on S2";
    code.provenance.z_points = static_cast<long long>(zpts.size());
    code.provenance.surface_points = s_count;
    code.provenance.candidate_rows = nrows;
    code.provenance.rank = static_cast<long long>(indep.size());
    code.provenance.k_formula = k_formula;
    code.provenance.hypotheses = hyps;
    return code;
}

}  // namespace dlcodes::bundle_codes
