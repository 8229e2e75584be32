#include "octic/caseio.hpp"

#include <filesystem>
#include <fstream>

#include "octic/error.hpp"
#include "octic/parse.hpp"

namespace octic {

namespace {

std::string json_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  fail(Err::Parse, "expected a string or integer, got " + j.dump());
}

MPoly json_coeff(const Json& j) { return parse_poly(json_text(j), ExprVars::ParamsAB); }

Json require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    fail(Err::Parse, std::string("missing key '") + key + "'");
  return j.at(key);
}

WeightedMap map_from_json(const Json& j) {
  WeightedMap wm;
  Json rows = require(j, "matrix");
  if (!rows.is_array() || rows.size() != 4)
    fail(Err::Parse, "map matrix must have 4 rows");
  for (int i = 0; i < 4; ++i) {
    if (!rows[i].is_array() || rows[i].size() != 4)
      fail(Err::Parse, "map matrix row must have 4 entries");
    for (int k = 0; k < 4; ++k) wm.m[i][k] = json_coeff(rows[i][k]);
  }
  wm.u_coeff = json_coeff(require(j, "u_coeff"));
  return wm;
}

Arrangement arrangement_ref(const Json& j, const std::string& base_dir,
                            bool* external) {
  *external = false;
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "EXTERNAL") {
      *external = true;
      return Arrangement{};
    }
    std::filesystem::path p(s);
    if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
    return load_arrangement(p.string());
  }
  return arrangement_from_json(j);
}

}  // namespace

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Err::IO, "cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail(Err::Parse, path + ": " + e.what());
  }
  return j;
}

Arrangement arrangement_from_json(const Json& j) {
  std::string name = j.contains("name") ? json_text(j.at("name")) : "arrangement";
  Json planes = require(j, "planes");
  if (!planes.is_array())
    fail(Err::Parse, "'planes' must be an array");
  std::vector<std::array<MPoly, 4>> rows;
  for (const auto& row : planes) {
    if (!row.is_array() || row.size() != 4)
      fail(Err::Parse, "each plane needs 4 coefficients");
    std::array<MPoly, 4> r;
    for (int i = 0; i < 4; ++i) r[i] = json_coeff(row[i]);
    rows.push_back(r);
  }
  return make_arrangement(name, rows);
}

Arrangement load_arrangement(const std::string& path) {
  return arrangement_from_json(load_json_file(path));
}

FamilyCase case_from_json(const Json& j, const std::string& base_dir) {
  FamilyCase fc;
  fc.name = j.contains("name") ? json_text(j.at("name")) : "case";
  bool external = false;
  fc.arr = arrangement_ref(require(j, "arrangement"), base_dir, &external);
  fc.has_arrangement = !external;
  fc.map = map_from_json(require(j, "map"));
  fc.g = parse_expr(json_text(require(j, "g")), ExprVars::FamilyTau);
  fc.tau0 = Rat::parse(json_text(require(j, "tau0")));
  if (j.contains("form")) fc.form = json_text(j.at("form"));
  if (j.contains("note")) fc.note = json_text(j.at("note"));
  return fc;
}

FamilyCase load_case(const std::string& path) {
  Json j = load_json_file(path);
  return case_from_json(j, std::filesystem::path(path).parent_path().string());
}

TwistCase load_twist_case(const std::string& path) {
  Json j = load_json_file(path);
  std::string base = std::filesystem::path(path).parent_path().string();
  TwistCase tc;
  tc.name = j.contains("name") ? json_text(j.at("name")) : "twist";
  bool ext = false;
  tc.src = arrangement_ref(require(j, "src"), base, &ext);
  if (ext) fail(Err::Parse, "twist source arrangement cannot be EXTERNAL");
  tc.dst = arrangement_ref(require(j, "dst"), base, &ext);
  if (ext) fail(Err::Parse, "twist target arrangement cannot be EXTERNAL");
  WeightedMap wm = map_from_json(require(j, "map"));
  tc.m = wm.m;
  tc.u_coeff = wm.u_coeff;
  if (j.contains("expected_class"))
    tc.expected = parse_poly(json_text(j.at("expected_class")), ExprVars::ParamsAB);
  return tc;
}

Json certificate_to_json(const Certificate& cert) {
  Json out;
  out["case"] = cert.case_name;
  out["records"] = Json::array();
  for (const auto& r : cert.records) {
    Json jr;
    jr["check"] = r.check;
    jr["status"] = status_name(r.status);
    jr["witness"] = r.witness;
    jr["establishes"] = r.establishes;
    out["records"].push_back(jr);
  }
  out["conclusion"] = conclusion_name(cert.conclusion);
  out["detail"] = cert.detail;
  return out;
}

}  // namespace octic
