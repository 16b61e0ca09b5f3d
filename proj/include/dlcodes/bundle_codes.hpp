#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dlcodes/dl_surfaces.hpp"
#include "dlcodes/linalg.hpp"
#include "dlcodes/rr_spaces.hpp"

namespace dlcodes::bundle_codes {

/// A split rank-2 bundle: two divisor classes for the A2 family, or two
/// hyperplane twist degrees for the 2A4 family.
struct RankTwoBundleSpec {
    dl_surfaces::SurfaceFamily family;
    // A2 summands
    std::optional<std::pair<rr_spaces::LineBundleA2, rr_spaces::LineBundleA2>> a2;
    // 2A4 twist degrees (t1, t2)
    std::optional<std::pair<int, int>> twists;

    static RankTwoBundleSpec for_a2(int q, rr_spaces::LineBundleA2 v1, rr_spaces::LineBundleA2 v2);
    static RankTwoBundleSpec for_2a4(int q, int t1, int t2);
};

struct CodeSpec {
    RankTwoBundleSpec bundle;
    int b = 1;   // symmetric power
    int a = 0;   // divisor twist; the explicit constructions require a = 0
};

/// One summand of Symm^b(V1 + V2): the fiber monomial u0^{i1} u1^{i2}
/// paired with the combined line bundle it multiplies.
struct SymmComponent {
    int i1 = 0;
    int i2 = 0;
    std::optional<rr_spaces::LineBundleA2> a2_bundle;
    std::optional<int> degree;   // 2A4: i1*t1 + i2*t2
};

/// Components in ascending i1 order; exactly b+1 entries.
std::vector<SymmComponent> symm_decomposition(const CodeSpec& spec);

struct ComponentConditions {
    int i1 = 0;
    int i2 = 0;
    std::vector<rr_spaces::Condition> conditions;
};

struct HypothesisReport {
    bool all_pass = false;
    std::vector<rr_spaces::Condition> global;       // b range and the like
    std::vector<ComponentConditions> per_component;
};

/// Evaluates every inequality the explicit constructions assume, for every
/// component of the symmetric power.  Reporting only; nothing throws here.
HypothesisReport check_hypotheses(const CodeSpec& spec);

struct CodeProvenance {
    std::string construction;        // "a2" or "2a4-proxy"
    std::string family;
    int q = 0;
    int b = 0;
    bool proxy = false;
    std::string note;
    long long z_points = -1;         // proxy only
    long long surface_points = -1;
    long long candidate_rows = 0;
    long long rank = 0;
    long long k_formula = -1;
    HypothesisReport hypotheses;
};

/// A linear code presented by a full-row-rank generator matrix with labeled
/// columns.
struct LinearCode {
    gf::FieldPtr field;
    int n = 0;
    int k = 0;
    linalg::Mat gen;
    std::vector<std::string> column_labels;
    CodeProvenance provenance;
};

/// Builds the A2-family code: evaluation points are (surface point, fiber
/// point) pairs in product order; rows evaluate each section of each
/// symmetric component against the fiber monomial.  Throws
/// HypothesisViolation for b outside (0, q+1) (b = 0 degenerates to the
/// all-ones code and is allowed), UnsupportedTwist for a > 0, and
/// RankDeficient when the assembled rows are dependent or empty.
LinearCode build_code_a2(const CodeSpec& spec, const gf::FieldPtr& field);

/// The 2A4 construction evaluated on the image variety Z instead of the
/// surface; every report carries the proxy flag and both point counts.
/// Component degrees must lie strictly between q+1 and q^3+1 when b >= 1.
LinearCode build_code_2a4_proxy(const CodeSpec& spec, const gf::FieldPtr& field);

/// Label helpers, shared with the file writers.
std::string a2_column_label(const dl_surfaces::SurfacePointA2& s, const projgeom::ProjPoint& u,
                            const gf::Field& f);
std::string z_column_label(const projgeom::ProjPoint& z, const projgeom::ProjPoint& u,
                           const gf::Field& f);

}  // namespace dlcodes::bundle_codes
