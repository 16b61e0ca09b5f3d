#include "dlcodes/io.hpp"

#include <fstream>
#include <sstream>

namespace dlcodes::io {

using nlohmann::json;

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw FileFormatError("cannot open for writing: " + path);
    return out;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FileFormatError("cannot open for reading: " + path);
    return in;
}

[[noreturn]] void bad_line(const std::string& path, int line, const std::string& what) {
    throw FileFormatError(path + ":" + std::to_string(line) + ": " + what);
}

}  // namespace

void write_matrix_file(const std::string& path, const bundle_codes::LinearCode& code) {
    std::ofstream out = open_out(path);
    const gf::Field& f = *code.field;
    out << (f.has_canonical_modulus() ? f.short_descriptor() : f.descriptor()) << ' ' << code.n
        << ' ' << code.k << '\n';
    for (int r = 0; r < code.k; ++r) {
        for (int c = 0; c < code.n; ++c) {
            if (c) out << ' ';
            out << f.digits(code.gen.at(r, c));
        }
        out << '\n';
    }
    if (!out) throw FileFormatError("write failed: " + path);
}

MatrixFile read_matrix_file(const std::string& path) {
    std::ifstream in = open_in(path);
    std::string line;
    if (!std::getline(in, line)) bad_line(path, 1, "missing header");
    std::istringstream hs(line);
    std::string desc;
    MatrixFile mf;
    if (!(hs >> desc >> mf.n >> mf.k)) bad_line(path, 1, "header must be '<field> <n> <k>'");
    if (mf.n <= 0 || mf.k <= 0) bad_line(path, 1, "n and k must be positive");
    try {
        mf.field = gf::Field::parse_descriptor(desc);
    } catch (const Error& e) {
        bad_line(path, 1, e.what());
    }
    mf.gen = linalg::Mat(mf.k, mf.n);
    for (int r = 0; r < mf.k; ++r) {
        if (!std::getline(in, line)) bad_line(path, r + 2, "unexpected end of file");
        std::istringstream ls(line);
        std::string tok;
        for (int c = 0; c < mf.n; ++c) {
            if (!(ls >> tok)) bad_line(path, r + 2, "row has fewer than n entries");
            try {
                mf.gen.at(r, c) = static_cast<uint8_t>(mf.field->parse_digits(tok));
            } catch (const Error& e) {
                bad_line(path, r + 2, e.what());
            }
        }
        std::string extra;
        if (ls >> extra) bad_line(path, r + 2, "row has more than n entries");
    }
    return mf;
}

void write_labels_file(const std::string& path, const bundle_codes::LinearCode& code) {
    std::ofstream out = open_out(path);
    for (size_t c = 0; c < code.column_labels.size(); ++c)
        out << c << '\t' << code.column_labels[c] << '\n';
    if (!out) throw FileFormatError("write failed: " + path);
}

namespace {
void write_coords(std::ofstream& out, const std::vector<int>& coords, const gf::Field& f,
                  bool& first) {
    for (int c : coords) {
        if (!first) out << ',';
        first = false;
        out << f.digits(c);
    }
}
}  // namespace

void write_points_file(const std::string& path, const std::vector<projgeom::ProjPoint>& pts,
                       const gf::Field& f) {
    std::ofstream out = open_out(path);
    for (const auto& p : pts) {
        bool first = true;
        write_coords(out, p.coords, f, first);
        out << '\n';
    }
    if (!out) throw FileFormatError("write failed: " + path);
}

void write_points_file(const std::string& path,
                       const std::vector<dl_surfaces::SurfacePointA2>& pts, const gf::Field& f) {
    std::ofstream out = open_out(path);
    for (const auto& p : pts) {
        bool first = true;
        write_coords(out, p.base.coords, f, first);
        write_coords(out, p.line.coords, f, first);
        out << '\n';
    }
    if (!out) throw FileFormatError("write failed: " + path);
}

std::vector<projgeom::ProjPoint> read_points_file(const std::string& path, const gf::Field& f) {
    std::ifstream in = open_in(path);
    std::vector<projgeom::ProjPoint> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::vector<int> coords;
        std::istringstream ls(line);
        std::string tok;
        while (std::getline(ls, tok, ',')) {
            try {
                coords.push_back(f.parse_digits(tok));
            } catch (const Error& e) {
                bad_line(path, lineno, e.what());
            }
        }
        out.push_back(projgeom::ProjPoint{std::move(coords)});
    }
    return out;
}

void write_poly_file(const std::string& path, const std::vector<projgeom::HomogPoly>& polys) {
    std::ofstream out = open_out(path);
    for (size_t i = 0; i < polys.size(); ++i) {
        if (i) out << "--\n";
        const gf::Field& f = polys[i].field();
        for (const auto& [expo, c] : polys[i].terms()) {
            for (size_t j = 0; j < expo.size(); ++j) out << (j ? " " : "") << expo[j];
            out << " : " << f.digits(c) << '\n';
        }
    }
    if (!out) throw FileFormatError("write failed: " + path);
}

std::vector<projgeom::HomogPoly> read_poly_file(const std::string& path, int nvars, int degree,
                                                const gf::FieldPtr& field) {
    std::ifstream in = open_in(path);
    std::vector<projgeom::HomogPoly> out;
    projgeom::HomogPoly cur(nvars, degree, field);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        if (line == "--") {
            out.push_back(cur);
            cur = projgeom::HomogPoly(nvars, degree, field);
            continue;
        }
        const size_t colon = line.find(':');
        if (colon == std::string::npos) bad_line(path, lineno, "expected 'exponents : coefficient'");
        std::istringstream es(line.substr(0, colon));
        std::vector<int> expo;
        int e;
        while (es >> e) expo.push_back(e);
        std::istringstream cs(line.substr(colon + 1));
        std::string coeff;
        if (!(cs >> coeff)) bad_line(path, lineno, "missing coefficient");
        try {
            cur.set_term(expo, field->parse_digits(coeff));
        } catch (const Error& err) {
            bad_line(path, lineno, err.what());
        }
    }
    out.push_back(cur);
    return out;
}

json tagged(long long value, const std::string& provenance) {
    return json{{"value", value}, {"provenance", provenance}};
}

json tagged(const std::string& value, const std::string& provenance) {
    return json{{"value", value}, {"provenance", provenance}};
}

json to_json(const rr_spaces::Condition& c) {
    return json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}};
}

json to_json(const bundle_codes::HypothesisReport& rep) {
    json global = json::array();
    for (const auto& c : rep.global) global.push_back(to_json(c));
    json comps = json::array();
    for (const auto& cc : rep.per_component) {
        json conds = json::array();
        for (const auto& c : cc.conditions) conds.push_back(to_json(c));
        comps.push_back(json{{"i1", cc.i1}, {"i2", cc.i2}, {"conditions", conds}});
    }
    return json{{"all_pass", rep.all_pass}, {"global", global}, {"per_component", comps}};
}

json to_json(const bundle_codes::CodeProvenance& prov) {
    json j{{"construction", prov.construction},
           {"family", prov.family},
           {"q", prov.q},
           {"b", prov.b},
           {"proxy", prov.proxy},
           {"candidate_rows", tagged(prov.candidate_rows, "constructed")},
           {"rank", tagged(prov.rank, "constructed")},
           {"hypotheses", to_json(prov.hypotheses)}};
    if (!prov.note.empty()) j["note"] = prov.note;
    if (prov.z_points >= 0) j["z_points"] = tagged(prov.z_points, "derived");
    if (prov.surface_points >= 0) j["surface_points"] = tagged(prov.surface_points, "closed-form");
    if (prov.k_formula >= 0) j["k_formula"] = tagged(prov.k_formula, "closed-form");
    return j;
}

json to_json(const params::ParamReport& rep) {
    json j{{"family", rep.family},
           {"q", rep.q},
           {"b", rep.b},
           {"n", tagged(rep.n.value, rep.n.provenance)},
           {"d_lower", tagged(rep.d_lower.value, rep.d_lower.provenance)},
           {"branch", rep.branch},
           {"hypotheses", to_json(rep.hypotheses)}};
    if (rep.k)
        j["k"] = tagged(rep.k->value, rep.k->provenance);
    else
        j["k"] = tagged(std::string("requires construction"), "constructed");
    if (!rep.k_note.empty()) j["k_note"] = rep.k_note;
    return j;
}

json to_json(const mindist::WeightReport& rep) {
    json j{{"method", rep.method}, {"min_weight", tagged(rep.min_weight, "derived")}};
    if (rep.method == "sampled") j["samples"] = rep.samples;
    if (rep.enumerated > 0) j["enumerated"] = rep.enumerated;
    if (rep.distribution) {
        json d = json::object();
        for (const auto& [w, c] : *rep.distribution) d[std::to_string(w)] = c;
        j["distribution"] = d;
    }
    if (rep.verified_bound) {
        j["verified_bound"] = json{{"bound", tagged(rep.verified_bound->first, "closed-form")},
                                   {"pass", rep.verified_bound->second}};
    }
    return j;
}

json report_envelope(const std::string& command, json payload) {
    json j{{"schema", kReportSchema}, {"command", command}};
    j["report"] = std::move(payload);
    return j;
}

}  // namespace dlcodes::io
