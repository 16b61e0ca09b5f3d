#include "dlcodes/params.hpp"

namespace dlcodes::params {

using bundle_codes::CodeSpec;
using bundle_codes::RankTwoBundleSpec;
using dl_surfaces::Family;
using dl_surfaces::SurfaceFamily;

long long hansen_bound(long long n, long long l, long long N, long long intersection_sum) {
    if (n < 0 || l < 0 || N < 0 || intersection_sum < 0)
        throw IndexOutOfRange("hansen_bound expects non-negative inputs");
    return n - l * N - intersection_sum;
}

long long hansen_bound_uniform(long long n, long long l, long long N, long long a, long long eta) {
    if (n < 0 || l < 0 || N < 0 || a < 0 || eta < 0)
        throw IndexOutOfRange("hansen_bound_uniform expects non-negative inputs");
    return n - l * N - (a - l) * eta;
}

long long nef_l_bound(long long L_dot_H, long long min_Ci_dot_H) {
    if (min_Ci_dot_H == 0) throw DivisionByZero("nef_l_bound needs min C_i.H > 0");
    if (min_Ci_dot_H < 0) throw IndexOutOfRange("nef_l_bound needs min C_i.H > 0");
    if (L_dot_H < min_Ci_dot_H) return 0;
    return L_dot_H / min_Ci_dot_H;
}

ParamReport general_bound(const BoundInputs& in) {
    if (in.b <= 0) throw IndexOutOfRange("general_bound needs b > 0");
    if (in.a < 0) throw IndexOutOfRange("general_bound needs a >= 0");

    const SurfaceFamily& fam = in.family;
    ParamReport rep;
    rep.family = dl_surfaces::family_name(fam.tag);
    rep.q = fam.q;
    rep.b = in.b;

    long long s_count;
    std::string s_prov;
    if (in.s_count_override) {
        s_count = *in.s_count_override;
        s_prov = "derived";
    } else {
        const dl_surfaces::PointCount pc = dl_surfaces::surface_point_count(fam);
        s_count = pc.value;
        s_prov = pc.provenance == dl_surfaces::Provenance::ClosedForm ? "closed-form" : "derived";
    }
    long long b_count;
    if (in.b_count_override) {
        b_count = *in.b_count_override;
    } else {
        b_count = s_count / fam.p1_points();
        if (b_count * fam.p1_points() != s_count)
            throw NonDivisibleCount("surface count not divisible by q^delta+1");
    }

    const long long p1 = fam.p1_points();
    rep.n = {s_count * p1, s_prov};
    rep.k = std::nullopt;
    rep.k_note = "requires construction";

    // E = -b c1(W1) #{B_i} + a (D_j . D_i); the first branch needs E > 0.
    long long e_term = -static_cast<long long>(in.b) * in.c1_W1 * b_count;
    if (in.a > 0) {
        if (!in.dj_dot_di)
            throw MissingIntersectionNumber("a > 0 requires the intersection number D_j.D_i");
        e_term += static_cast<long long>(in.a) * *in.dj_dot_di;
    }

    if (e_term > 0) {
        rep.branch = "excess";
        rep.d_lower = {rep.n.value - e_term * p1 - (s_count - e_term) * in.b, "closed-form"};
    } else {
        rep.branch = "otherwise";
        rep.d_lower = {rep.n.value - s_count * in.b, "closed-form"};
    }
    return rep;
}

ParamReport corollary_a2_params(int q, int b, const std::pair<int, int>& n_vec,
                                const std::pair<std::vector<int>, std::vector<int>>& m_matrix) {
    const SurfaceFamily fam(Family::A2, q);
    const long long pts = static_cast<long long>(q) * q + q + 1;
    rr_spaces::LineBundleA2 v1{n_vec.first, m_matrix.first};
    rr_spaces::LineBundleA2 v2{n_vec.second, m_matrix.second};
    if (static_cast<long long>(v1.m.size()) != pts || static_cast<long long>(v2.m.size()) != pts)
        throw IndexOutOfRange("multiplicity vectors must have q^2+q+1 entries");

    CodeSpec spec{RankTwoBundleSpec::for_a2(q, v1, v2), b, 0};
    const bundle_codes::HypothesisReport hyps = bundle_codes::check_hypotheses(spec);

    ParamReport rep;
    rep.family = "A2";
    rep.q = q;
    rep.b = b;
    rep.hypotheses = hyps;
    rep.n = {pts * (q + 1) * (q + 1), "closed-form"};

    long long k = 0;
    bool negative = false;
    for (const auto& comp : bundle_codes::symm_decomposition(spec)) {
        const long long h0 = rr_spaces::h0_formula(*comp.a2_bundle);
        if (h0 < 0) negative = true;
        k += h0;
    }
    rep.k = TaggedValue{k, "closed-form"};
    if (!hyps.all_pass)
        rep.k_note = "formula unverified (hypotheses failed)";
    else if (negative)
        rep.k_note = "formula produced a negative component";

    rep.branch = "otherwise";
    rep.d_lower = {rep.n.value - pts * (q + 1) * b, "closed-form"};
    return rep;
}

ParamReport corollary_2a4_params(int q, int b, int t1, int t2) {
    const SurfaceFamily fam(Family::TwoA4, q);
    CodeSpec spec{RankTwoBundleSpec::for_2a4(q, t1, t2), b, 0};
    const bundle_codes::HypothesisReport hyps = bundle_codes::check_hypotheses(spec);
    if (!hyps.all_pass) {
        std::string why;
        for (const auto& c : hyps.global)
            if (!c.pass) why = c.name + ": " + c.detail;
        for (const auto& cc : hyps.per_component)
            for (const auto& c : cc.conditions)
                if (!c.pass) why = c.name + ": " + c.detail;
        throw HypothesisViolation("2A4 hypotheses fail (" + why + ")");
    }

    ParamReport rep;
    rep.family = "2A4";
    rep.q = q;
    rep.b = b;
    rep.hypotheses = hyps;

    const long long q2 = static_cast<long long>(q) * q;
    const long long q3 = q2 * q, q5 = q3 * q2;
    const long long s_count = (q5 + 1) * (q3 + 1) * (q2 + 1);
    rep.n = {s_count * (q2 + 1), "closed-form"};

    long long k = 0;
    for (const auto& comp : bundle_codes::symm_decomposition(spec)) {
        const long long t = *comp.degree;
        k += projgeom::binomial(4 + t, t) - projgeom::binomial(4 + t - (q + 1), t - (q + 1));
    }
    rep.k = TaggedValue{k, "closed-form"};

    rep.branch = "otherwise";
    rep.d_lower = {rep.n.value - s_count * b, "closed-form"};
    return rep;
}

}  // namespace dlcodes::params
