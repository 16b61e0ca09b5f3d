#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "dlcodes/bundle_codes.hpp"
#include "dlcodes/mindist.hpp"
#include "dlcodes/params.hpp"

namespace dlcodes::io {

/// Generator matrix file: header "p^m n k" (descriptor extended with
/// "/modulus-digits" for non-canonical moduli), then k rows of n
/// space-separated element digit strings.
void write_matrix_file(const std::string& path, const bundle_codes::LinearCode& code);

struct MatrixFile {
    gf::FieldPtr field;
    int n = 0;
    int k = 0;
    linalg::Mat gen;
};

/// Parse errors throw FileFormatError naming the offending line.
MatrixFile read_matrix_file(const std::string& path);

/// Column-label sidecar: one "<index>\t<label>" line per column.
void write_labels_file(const std::string& path, const bundle_codes::LinearCode& code);

/// Point file: one point per line, comma-separated element digit strings.
void write_points_file(const std::string& path, const std::vector<projgeom::ProjPoint>& pts,
                       const gf::Field& f);
/// A2 surface points serialize as base coords then line coords (6 entries).
void write_points_file(const std::string& path,
                       const std::vector<dl_surfaces::SurfacePointA2>& pts, const gf::Field& f);
std::vector<projgeom::ProjPoint> read_points_file(const std::string& path, const gf::Field& f);

/// Polynomial file: lines "e0 e1 ... : coefficient-digits".
void write_poly_file(const std::string& path, const std::vector<projgeom::HomogPoly>& polys);
std::vector<projgeom::HomogPoly> read_poly_file(const std::string& path, int nvars, int degree,
                                                const gf::FieldPtr& field);

// --- JSON report pieces (schema "dlcodes-report/1") -----------------------

inline constexpr const char* kReportSchema = "dlcodes-report/1";

nlohmann::json tagged(long long value, const std::string& provenance);
nlohmann::json tagged(const std::string& value, const std::string& provenance);

nlohmann::json to_json(const rr_spaces::Condition& c);
nlohmann::json to_json(const bundle_codes::HypothesisReport& rep);
nlohmann::json to_json(const bundle_codes::CodeProvenance& prov);
nlohmann::json to_json(const params::ParamReport& rep);
nlohmann::json to_json(const mindist::WeightReport& rep);

/// Wraps a payload in the versioned envelope.
nlohmann::json report_envelope(const std::string& command, nlohmann::json payload);

}  // namespace dlcodes::io
