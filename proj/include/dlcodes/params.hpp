#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dlcodes/bundle_codes.hpp"

namespace dlcodes::params {

/// d >= n - l*N - intersection_sum.
long long hansen_bound(long long n, long long l, long long N, long long intersection_sum);

/// Uniform variant: every curve meets the bundle in eta <= N points, so
/// d >= n - l*N - (a - l)*eta.
long long hansen_bound_uniform(long long n, long long l, long long N, long long a, long long eta);

/// floor(L.H / min_i C_i.H); zero when L.H < min (covers negative L.H too).
long long nef_l_bound(long long L_dot_H, long long min_Ci_dot_H);

/// Inputs of the general bound: the family fixes n; c1_W1 is the degree of
/// the minimal line subbundle on restricted fibers; dj_dot_di must be
/// supplied when a > 0.  Count overrides stand in for families without a
/// closed form.
struct BoundInputs {
    dl_surfaces::SurfaceFamily family;
    int a = 0;
    int b = 1;
    long long c1_W1 = 0;
    std::optional<long long> dj_dot_di;
    std::optional<long long> s_count_override;
    std::optional<long long> b_count_override;
};

struct TaggedValue {
    long long value = 0;
    std::string provenance;   // "closed-form", "derived" or "constructed"
};

struct ParamReport {
    std::string family;
    int q = 0;
    int b = 0;
    TaggedValue n;
    std::optional<TaggedValue> k;   // empty when only construction can answer
    std::string k_note;             // "requires construction" or a caveat
    TaggedValue d_lower;
    std::string branch;             // which bound branch fired
    bundle_codes::HypothesisReport hypotheses;
};

/// The general (n, d) bound for any of the four families.  k is reported as
/// requiring construction; only the two corollary calculators make it
/// closed-form.
ParamReport general_bound(const BoundInputs& in);

/// Closed forms for the A2 family.  Hypothesis failures downgrade the k
/// formula to "formula unverified" instead of throwing.
ParamReport corollary_a2_params(int q, int b, const std::pair<int, int>& n_vec,
                                const std::pair<std::vector<int>, std::vector<int>>& m_matrix);

/// Closed forms for the 2A4 family.  Throws HypothesisViolation when b or a
/// component degree is out of range, because the k formula is meaningless
/// there.
ParamReport corollary_2a4_params(int q, int b, int t1, int t2);

}  // namespace dlcodes::params
