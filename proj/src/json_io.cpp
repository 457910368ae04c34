#include "charderiv/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>

namespace charderiv {

Json scalar_json(const ExactScalar& v) { return Json(v.str()); }

Json tpoly_json(const TPoly& p) {
  Json arr = Json::array();
  for (const auto& [m, c] : p) arr.push_back(Json::array({std::to_string(m), rational_str(c)}));
  return arr;
}

Json ginibre_result_json(const GinibreMomentResult& r) {
  Json j;
  j["prefactor"] = Json{{"exp_coeff", r.k}, {"pi_power", -r.k}};
  j["poly_t"] = tpoly_json(r.poly);
  return j;
}

Json verify_results_json(const std::vector<VerifyCaseResult>& results) {
  Json arr = Json::array();
  for (const auto& r : results) {
    Json j;
    j["name"] = r.name;
    j["pass"] = r.pass;
    if (!r.detail.empty()) j["detail"] = r.detail;
    arr.push_back(std::move(j));
  }
  return arr;
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

std::string csv_table(const std::vector<std::string>& header,
                      const std::vector<std::vector<std::string>>& rows) {
  std::string out;
  auto line = [&out](const std::vector<std::string>& fields) {
    for (size_t i = 0; i < fields.size(); ++i) {
      if (i > 0) out += ",";
      out += fields[i];
    }
    out += "\n";
  };
  line(header);
  for (const auto& row : rows) line(row);
  return out;
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + path);
  f << text;
}

std::string double_str(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace charderiv
