#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dlcodes/io.hpp"

using json = nlohmann::json;
using namespace dlcodes;

namespace {

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::string tok;
    std::istringstream is(text);
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stoi(tok));
    }
    return out;
}

// "1,1,1;1,1,1" -> two multiplicity vectors, zero-padded to len.
std::pair<std::vector<int>, std::vector<int>> parse_m_matrix(const std::string& text, size_t len) {
    std::vector<std::vector<int>> rows;
    std::string part;
    std::istringstream is(text);
    while (std::getline(is, part, ';')) rows.push_back(parse_int_list(part));
    if (rows.empty()) rows.push_back({});
    if (rows.size() == 1) rows.push_back(rows[0]);
    if (rows.size() != 2) throw FileFormatError("expected at most two multiplicity vectors");
    for (auto& r : rows) {
        if (r.size() > len) throw FileFormatError("multiplicity vector longer than q^2+q+1");
        r.resize(len, 0);
    }
    return {rows[0], rows[1]};
}

long long env_budget() {
    if (const char* s = std::getenv("DLCODES_BUDGET")) {
        try {
            return std::stoll(s);
        } catch (const std::exception&) {
            throw FileFormatError("DLCODES_BUDGET is not an integer");
        }
    }
    return mindist::kDefaultBudget;
}

void emit(const json& j) { std::cout << j.dump(2) << std::endl; }

// ---------------------------------------------------------------------------

struct ParamsOpts {
    std::string family;
    int q = 2;
    int b = 1;
    int a = 0;
    std::string n_list;
    std::string m_matrix;
    std::string t_list;
    long long c1w1 = 0;
    std::optional<long long> djdi;
    std::optional<long long> s_count;
    std::optional<long long> b_count;
    bool general = false;
};

int cmd_params(const ParamsOpts& o) {
    const dl_surfaces::Family fam = dl_surfaces::parse_family(o.family);
    params::ParamReport rep;
    if (!o.general && fam == dl_surfaces::Family::A2) {
        const size_t len = static_cast<size_t>(o.q) * o.q + o.q + 1;
        std::vector<int> ns = o.n_list.empty() ? std::vector<int>{0, 0} : parse_int_list(o.n_list);
        if (ns.size() == 1) ns.push_back(ns[0]);
        if (ns.size() != 2) throw FileFormatError("--n expects 'n1,n2'");
        const auto ms = parse_m_matrix(o.m_matrix, len);
        rep = params::corollary_a2_params(o.q, o.b, {ns[0], ns[1]}, ms);
    } else if (!o.general && fam == dl_surfaces::Family::TwoA4) {
        std::vector<int> ts = o.t_list.empty() ? std::vector<int>{0, 0} : parse_int_list(o.t_list);
        if (ts.size() == 1) ts.push_back(ts[0]);
        if (ts.size() != 2) throw FileFormatError("--t expects 't1,t2'");
        try {
            rep = params::corollary_2a4_params(o.q, o.b, ts[0], ts[1]);
        } catch (const HypothesisViolation& e) {
            // Hypothesis failures are reported in-band; fall back to the
            // general bound, whose n and d formulas still apply.
            params::BoundInputs in{dl_surfaces::SurfaceFamily(fam, o.q), 0, o.b, 0,
                                   std::nullopt, std::nullopt, std::nullopt};
            rep = params::general_bound(in);
            bundle_codes::CodeSpec spec{bundle_codes::RankTwoBundleSpec::for_2a4(o.q, ts[0], ts[1]),
                                        o.b, 0};
            rep.hypotheses = bundle_codes::check_hypotheses(spec);
            rep.k_note = std::string("formula unverified (") + e.what() + ")";
        }
    } else {
        params::BoundInputs in{dl_surfaces::SurfaceFamily(fam, o.q), o.a, o.b, o.c1w1,
                               o.djdi, o.s_count, o.b_count};
        rep = params::general_bound(in);
    }
    emit(io::report_envelope("params", io::to_json(rep)));
    return 0;
}

// ---------------------------------------------------------------------------

struct EnumerateOpts {
    std::string family;
    int q = 2;
    std::string out;
};

int cmd_enumerate(const EnumerateOpts& o) {
    const dl_surfaces::SurfaceFamily fam(dl_surfaces::parse_family(o.family), o.q);
    json payload{{"family", o.family}, {"q", o.q}};
    const dl_surfaces::PointCount count = dl_surfaces::surface_point_count(fam);
    payload["surface_points"] = io::tagged(
        count.value, count.provenance == dl_surfaces::Provenance::ClosedForm ? "closed-form" : "derived");
    payload["p1_points"] = io::tagged(fam.p1_points(), "closed-form");

    if (fam.tag == dl_surfaces::Family::A2) {
        const gf::FieldPtr f = gf::Field::canonical(o.q);
        const auto pts = dl_surfaces::a2_points(o.q, *f);
        payload["enumerated"] = io::tagged(static_cast<long long>(pts.size()), "derived");
        if (!o.out.empty()) {
            io::write_points_file(o.out, pts, *f);
            payload["file"] = o.out;
        }
    } else {
        const gf::FieldPtr f = gf::Field::canonical(fam.q_delta());
        const auto eqs = dl_surfaces::z_equations(fam);
        const int dim = fam.tag == dl_surfaces::Family::TwoA4 ? 4 : 3;
        const auto pts = projgeom::enumerate_variety(eqs, dim, *f);
        payload["z_points"] = io::tagged(static_cast<long long>(pts.size()), "derived");
        if (!o.out.empty()) {
            io::write_points_file(o.out, pts, *f);
            payload["file"] = o.out;
        }
    }
    emit(io::report_envelope("enumerate", std::move(payload)));
    return 0;
}

// ---------------------------------------------------------------------------

struct BuildOpts {
    std::string family;
    int q = 2;
    int b = 1;
    int a = 0;
    std::string n_list;
    std::string m_matrix;
    std::string t_list;
    std::string out;
    std::string labels;
    std::string basis_out;
};

bundle_codes::LinearCode build_from_opts(const BuildOpts& o) {
    const dl_surfaces::Family fam = dl_surfaces::parse_family(o.family);
    if (fam == dl_surfaces::Family::A2) {
        const size_t len = static_cast<size_t>(o.q) * o.q + o.q + 1;
        std::vector<int> ns = o.n_list.empty() ? std::vector<int>{0, 0} : parse_int_list(o.n_list);
        if (ns.size() == 1) ns.push_back(ns[0]);
        if (ns.size() != 2) throw FileFormatError("--n expects 'n1,n2'");
        const auto ms = parse_m_matrix(o.m_matrix, len);
        bundle_codes::CodeSpec spec{
            bundle_codes::RankTwoBundleSpec::for_a2(o.q, {ns[0], ms.first}, {ns[1], ms.second}),
            o.b, o.a};
        return bundle_codes::build_code_a2(spec, gf::Field::canonical(o.q));
    }
    if (fam == dl_surfaces::Family::TwoA4) {
        std::vector<int> ts = o.t_list.empty() ? std::vector<int>{0, 0} : parse_int_list(o.t_list);
        if (ts.size() == 1) ts.push_back(ts[0]);
        if (ts.size() != 2) throw FileFormatError("--t expects 't1,t2'");
        bundle_codes::CodeSpec spec{bundle_codes::RankTwoBundleSpec::for_2a4(o.q, ts[0], ts[1]),
                                    o.b, o.a};
        return bundle_codes::build_code_2a4_proxy(spec,
                                                  gf::Field::canonical(static_cast<long long>(o.q) * o.q));
    }
    throw UnsupportedFamilyForClosedForm("no generator-matrix construction for family " + o.family);
}

int cmd_build(const BuildOpts& o) {
    const bundle_codes::LinearCode code = build_from_opts(o);
    io::write_matrix_file(o.out, code);
    json payload{{"family", o.family},
                 {"q", o.q},
                 {"field", code.field->descriptor()},
                 {"n", io::tagged(code.n, "constructed")},
                 {"k", io::tagged(code.k, "constructed")},
                 {"matrix_file", o.out},
                 {"provenance", io::to_json(code.provenance)}};
    if (!o.labels.empty()) {
        io::write_labels_file(o.labels, code);
        payload["labels_file"] = o.labels;
    }
    if (!o.basis_out.empty() && code.provenance.construction == "a2") {
        // Re-derive the section bases for export; build order matches.
        const dl_surfaces::Family fam = dl_surfaces::parse_family(o.family);
        (void)fam;
        const size_t len = static_cast<size_t>(o.q) * o.q + o.q + 1;
        std::vector<int> ns = parse_int_list(o.n_list);
        if (ns.size() == 1) ns.push_back(ns[0]);
        const auto ms = parse_m_matrix(o.m_matrix, len);
        bundle_codes::CodeSpec spec{
            bundle_codes::RankTwoBundleSpec::for_a2(o.q, {ns[0], ms.first}, {ns[1], ms.second}),
            o.b, o.a};
        std::vector<projgeom::HomogPoly> polys;
        const gf::FieldPtr f = gf::Field::canonical(o.q);
        for (const auto& comp : bundle_codes::symm_decomposition(spec)) {
            const auto basis = rr_spaces::section_basis(*comp.a2_bundle, f);
            polys.insert(polys.end(), basis.polys.begin(), basis.polys.end());
        }
        io::write_poly_file(o.basis_out, polys);
        payload["basis_file"] = o.basis_out;
    }
    emit(io::report_envelope("build", std::move(payload)));
    return 0;
}

// ---------------------------------------------------------------------------

struct AnalyzeOpts {
    std::string matrix;
    std::optional<long long> bound;
    bool distribution = false;
    long long trials = 1000;
    uint64_t seed = 0xD15EA5E;
    long long budget = 0;
};

int cmd_analyze(const AnalyzeOpts& o) {
    const io::MatrixFile mf = io::read_matrix_file(o.matrix);
    if (linalg::rank(mf.gen, *mf.field) != mf.k)
        throw FileFormatError(o.matrix + ": generator matrix is rank-deficient (header k = " +
                              std::to_string(mf.k) + ")");
    bundle_codes::LinearCode code;
    code.field = mf.field;
    code.n = mf.n;
    code.k = mf.k;
    code.gen = mf.gen;
    code.provenance.construction = "file";

    mindist::WeightReport rep;
    bool pass = true;
    if (mindist::representative_count(code.field->q(), code.k) <= o.budget) {
        rep = mindist::exact_min_distance(code, o.budget, o.distribution);
        if (o.bound) rep.verified_bound = std::make_pair(*o.bound, rep.min_weight >= *o.bound);
    } else {
        rep = mindist::sampled_min_weight(code, o.trials, o.seed, o.bound);
    }
    if (o.bound) pass = rep.verified_bound->second;

    json payload = io::to_json(rep);
    payload["matrix_file"] = o.matrix;
    payload["field"] = code.field->descriptor();
    payload["n"] = io::tagged(code.n, "constructed");
    payload["k"] = io::tagged(code.k, "constructed");
    emit(io::report_envelope("analyze", std::move(payload)));
    return pass ? 0 : 1;
}

// ---------------------------------------------------------------------------

struct VerifyOpts {
    int q = 2;
    long long trials = 500;
    uint64_t seed = 0xD15EA5E;
    long long budget = 0;
    std::string points = "0,1,2";
};

json claim(const std::string& name, bool pass, const json& expected, const json& actual,
           const std::string& note = "") {
    json j{{"name", name}, {"pass", pass}, {"expected", expected}, {"actual", actual}};
    if (!note.empty()) j["note"] = note;
    return j;
}

int cmd_verify_examples(const VerifyOpts& o) {
    if (o.q != 2)
        throw FileFormatError("verify-examples reproduces the q = 2 worked examples; --q must be 2");
    json claims = json::array();

    // --- A2 example: b = 1, n1 = n2 = 3, three simple points ---------------
    const int q = 2;
    const size_t len = 7;
    std::vector<int> m(len, 0);
    for (int idx : parse_int_list(o.points)) {
        if (idx < 0 || static_cast<size_t>(idx) >= len)
            throw FileFormatError("--points index out of range");
        m[static_cast<size_t>(idx)] = 1;
    }
    const auto a2_rep = params::corollary_a2_params(q, 1, {3, 3}, {m, m});
    claims.push_back(claim("a2-params-n", a2_rep.n.value == 63, 63, a2_rep.n.value));
    claims.push_back(claim("a2-params-k", a2_rep.k && a2_rep.k->value == 14, 14,
                           a2_rep.k ? json(a2_rep.k->value) : json("unset")));
    claims.push_back(claim("a2-params-d-lower", a2_rep.d_lower.value == 42, 42, a2_rep.d_lower.value));
    claims.push_back(claim("a2-hypotheses", a2_rep.hypotheses.all_pass, true,
                           a2_rep.hypotheses.all_pass));

    bundle_codes::CodeSpec spec{
        bundle_codes::RankTwoBundleSpec::for_a2(q, {3, m}, {3, m}), 1, 0};
    const gf::FieldPtr f2 = gf::Field::canonical(2);
    const bundle_codes::LinearCode a2_code = bundle_codes::build_code_a2(spec, f2);
    claims.push_back(claim("a2-column-count", a2_code.n == 63, 63, a2_code.n));
    claims.push_back(claim("a2-generator-rank", a2_code.k == 14, 14, a2_code.k));

    const mindist::WeightReport a2_dist = mindist::exact_min_distance(a2_code, o.budget, false);
    claims.push_back(claim("a2-exact-min-distance", a2_dist.min_weight >= 42, ">= 42",
                           a2_dist.min_weight,
                           "exhaustive over " + std::to_string(a2_dist.enumerated) + " codewords"));

    // --- 2A4 example: b = 2, t1 = t2 = 4 -----------------------------------
    const auto a4_rep = params::corollary_2a4_params(2, 2, 4, 4);
    claims.push_back(claim("2a4-params-n", a4_rep.n.value == 7425, 7425, a4_rep.n.value));
    claims.push_back(claim("2a4-params-k", a4_rep.k && a4_rep.k->value == 1107, 1107,
                           a4_rep.k ? json(a4_rep.k->value) : json("unset")));
    claims.push_back(
        claim("2a4-params-d-lower", a4_rep.d_lower.value == 4455, 4455, a4_rep.d_lower.value));

    bundle_codes::CodeSpec pspec{bundle_codes::RankTwoBundleSpec::for_2a4(2, 4, 4), 2, 0};
    const bundle_codes::LinearCode proxy =
        bundle_codes::build_code_2a4_proxy(pspec, gf::Field::canonical(4));
    claims.push_back(claim("2a4-proxy-rank", proxy.provenance.rank <= 1107, "<= 1107",
                           proxy.provenance.rank,
                           "proxy on Z: " + std::to_string(proxy.provenance.z_points) +
                               " rational points of Z vs " +
                               std::to_string(proxy.provenance.surface_points) +
                               " surface points; a rank deficit against k = 1107 reflects the "
                               "collapsed evaluation set, documented in the provenance"));

    // The paper bound applies to the full-length code; the proxy carries one
    // column per Z point, so the comparable sampled claim scales the bound by
    // the fiber size q^3+1.
    const long long scaled_bound = 4455 / (2 * 2 * 2 + 1);
    const mindist::WeightReport sampled =
        mindist::sampled_min_weight(proxy, o.trials, o.seed, scaled_bound);
    claims.push_back(claim(
        "2a4-proxy-sampled-weights", sampled.verified_bound->second,
        ">= " + std::to_string(scaled_bound), sampled.min_weight,
        "falsification probe with " + std::to_string(o.trials) +
            " sampled codewords; the bound 4455 applies to the length-7425 code on the surface, "
            "scaled here by q^3+1 = 9 under the equal-fiber proxy reading"));

    bool all = true;
    for (const auto& c : claims) all = all && c["pass"].get<bool>();
    json payload{{"claims", claims}, {"all_pass", all}};
    json envelope{{"schema", io::kReportSchema}, {"command", "verify-examples"}};
    envelope["report"] = payload;
    emit(envelope);
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"codes from rank-2 bundles over blown-up finite-geometry surfaces"};
    app.require_subcommand(1);

    ParamsOpts po;
    CLI::App* params_cmd = app.add_subcommand("params", "closed-form parameter report");
    params_cmd->add_option("--family", po.family, "A2, 2A3, 2A4 or C2")->required();
    params_cmd->add_option("--q", po.q, "base prime power")->required();
    params_cmd->add_option("--b", po.b, "symmetric power");
    params_cmd->add_option("--a", po.a, "divisor twist coefficient");
    params_cmd->add_option("--n", po.n_list, "A2 degrees 'n1,n2'");
    params_cmd->add_option("--m", po.m_matrix, "A2 multiplicities 'm1,...;m2,...'");
    params_cmd->add_option("--t", po.t_list, "2A4 twists 't1,t2'");
    params_cmd->add_option("--c1w1", po.c1w1, "degree of the minimal line subbundle");
    params_cmd->add_option("--djdi", po.djdi, "intersection number D_j.D_i");
    params_cmd->add_option("--s-count", po.s_count, "override for the surface point count");
    params_cmd->add_option("--b-count", po.b_count, "override for the component count");
    params_cmd->add_flag("--general", po.general, "use the general bound even for A2/2A4");

    EnumerateOpts eo;
    CLI::App* enum_cmd = app.add_subcommand("enumerate", "emit rational point sets");
    enum_cmd->add_option("--family", eo.family)->required();
    enum_cmd->add_option("--q", eo.q)->required();
    enum_cmd->add_option("--out", eo.out, "point file path");

    BuildOpts bo;
    CLI::App* build_cmd = app.add_subcommand("build", "construct a generator matrix");
    build_cmd->add_option("--family", bo.family, "A2 or 2A4")->required();
    build_cmd->add_option("--q", bo.q)->required();
    build_cmd->add_option("--b", bo.b);
    build_cmd->add_option("--a", bo.a);
    build_cmd->add_option("--n", bo.n_list);
    build_cmd->add_option("--m", bo.m_matrix);
    build_cmd->add_option("--t", bo.t_list);
    build_cmd->add_option("--out", bo.out, "matrix file")->required();
    build_cmd->add_option("--labels", bo.labels, "column-label sidecar file");
    build_cmd->add_option("--basis-out", bo.basis_out, "A2 section basis file");

    AnalyzeOpts ao;
    CLI::App* analyze_cmd = app.add_subcommand("analyze", "weight analysis of a matrix file");
    analyze_cmd->add_option("--matrix", ao.matrix)->required();
    analyze_cmd->add_option("--bound", ao.bound, "claimed lower bound to verify");
    analyze_cmd->add_flag("--distribution", ao.distribution, "full weight distribution (exact mode)");
    analyze_cmd->add_option("--trials", ao.trials, "sampled trials when over budget");
    analyze_cmd->add_option("--seed", ao.seed, "sampling seed");
    analyze_cmd->add_option("--budget", ao.budget, "exhaustive enumeration budget");

    VerifyOpts vo;
    CLI::App* verify_cmd = app.add_subcommand("verify-examples", "end-to-end check of the worked examples");
    verify_cmd->add_option("--q", vo.q, "must be 2");
    verify_cmd->add_option("--trials", vo.trials, "sampled trials for the proxy check");
    verify_cmd->add_option("--seed", vo.seed);
    verify_cmd->add_option("--budget", vo.budget);
    verify_cmd->add_option("--points", vo.points, "indices of the simple points (default 0,1,2)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") {
            app.exit(e);
            return 0;
        }
        std::cerr << e.what() << std::endl;
        return 2;
    }

    try {
        const long long budget = env_budget();
        if (ao.budget == 0) ao.budget = budget;
        if (vo.budget == 0) vo.budget = budget;
        if (app.got_subcommand(params_cmd)) return cmd_params(po);
        if (app.got_subcommand(enum_cmd)) return cmd_enumerate(eo);
        if (app.got_subcommand(build_cmd)) return cmd_build(bo);
        if (app.got_subcommand(analyze_cmd)) return cmd_analyze(ao);
        if (app.got_subcommand(verify_cmd)) return cmd_verify_examples(vo);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 2;
    }
    return 2;
}
