#include "spectra/family_io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "spectra/errors.hpp"

namespace spectra {

namespace {

using nlohmann::json;

Eigen::MatrixXd parse_matrix(const json& j, const std::string& name, int n) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw ParseError(name + " must be an array of " + std::to_string(n) + " rows");
  Eigen::MatrixXd m(n, n);
  for (int r = 0; r < n; ++r) {
    const json& row = j[r];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw ParseError(name + " row " + std::to_string(r + 1) + " must have " +
                       std::to_string(n) + " entries");
    for (int c = 0; c < n; ++c) {
      if (!row[c].is_number())
        throw ParseError(name + "[" + std::to_string(r + 1) + "][" + std::to_string(c + 1) +
                         "] is not a number");
      m(r, c) = row[c].get<double>();
    }
  }
  return m;
}

}  // namespace

MatrixFamily read_family_json(const std::string& text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw ParseError("family description is not valid JSON");
  if (!j.is_object()) throw ParseError("family description must be a JSON object");
  if (!j.contains("dimension") || !j["dimension"].is_number_integer())
    throw ParseError("family description needs an integer \"dimension\"");
  const int n = j["dimension"].get<int>();
  if (n < 2 || n % 2 != 0) throw ParseError("dimension must be even and >= 2");
  if (!j.contains("A") || !j.contains("B"))
    throw ParseError("family description needs matrices \"A\" and \"B\"");
  MatrixFamily fam;
  fam.A = parse_matrix(j["A"], "A", n);
  fam.B = parse_matrix(j["B"], "B", n);
  if (j.contains("symmetric_hint")) {
    if (!j["symmetric_hint"].is_boolean()) throw ParseError("symmetric_hint must be a boolean");
    fam.symmetric_hint = j["symmetric_hint"].get<bool>();
  }
  return fam;
}

MatrixFamily read_family_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open family file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_family_json(buf.str());
}

std::string family_to_json(const MatrixFamily& fam) {
  const int n = fam.dimension();
  json j;
  j["dimension"] = n;
  for (const auto* mat : {&fam.A, &fam.B}) {
    json rows = json::array();
    for (int r = 0; r < n; ++r) {
      json row = json::array();
      for (int c = 0; c < n; ++c) row.push_back((*mat)(r, c));
      rows.push_back(std::move(row));
    }
    j[mat == &fam.A ? "A" : "B"] = std::move(rows);
  }
  j["symmetric_hint"] = fam.symmetric_hint;
  return j.dump(2) + "\n";
}

std::string events_to_json(const std::vector<ConfluenceEvent>& events) {
  json arr = json::array();
  for (const auto& ev : events) {
    json e;
    e["lambda_star"] = ev.lambda_star;
    e["pair"] = {ev.paths.first, ev.paths.second};
    e["value"] = ev.value;
    arr.push_back(std::move(e));
  }
  return arr.dump(2) + "\n";
}

void write_paths_csv(std::ostream& out, const std::vector<EigenPath>& paths) {
  out << "lambda,path_id,re,im\n";
  char buf[128];
  for (const auto& p : paths) {
    for (const auto& s : p.samples) {
      std::snprintf(buf, sizeof buf, "%.9f,%d,%.12g,%.12g\n", s.lambda, p.path_id,
                    s.value.real(), s.value.imag());
      out << buf;
    }
  }
}

}  // namespace spectra
