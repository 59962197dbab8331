#pragma once

// Algebra JSON: {"name", "dim", "labels", "mult": [k][i][j], "star": [row][col],
// "unit": [i], "coproduct": [a*dim+b][j]}.  Scalars are [re, im] pairs or
// plain numbers.  "coproduct" may be omitted for a bare algebra.

#include "qgw/examples.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include <json.hpp>

namespace qgw {

using json = nlohmann::ordered_json;

namespace detail {

inline json scalar_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

inline cplx scalar_from_json(const json& j, const std::string& where) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw Error(ErrorKind::InvalidInput, where + ": expected a number or [re, im]");
}

inline const json& field(const json& j, const char* key) {
  if (!j.contains(key)) throw Error(ErrorKind::InvalidInput, std::string("missing field '") + key + "'");
  return j.at(key);
}

inline void require_array(const json& j, size_t size, const std::string& where) {
  if (!j.is_array() || j.size() != size)
    throw Error(ErrorKind::InvalidInput, where + ": expected an array of length " + std::to_string(size));
}

inline json matrix_to_json(const Mat& m) {
  json rows = json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

inline Mat matrix_from_json(const json& j, Index rows, Index cols, const std::string& where) {
  require_array(j, static_cast<size_t>(rows), where);
  Mat m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    require_array(j[r], static_cast<size_t>(cols), where + "[" + std::to_string(r) + "]");
    for (Index c = 0; c < cols; ++c)
      m(r, c) = scalar_from_json(j[r][c], where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
  }
  return m;
}

}  // namespace detail

struct LoadedSpec {
  std::string name;
  AlgebraSpec alg;
  std::optional<Coproduct> delta;
};

inline json to_json(const AlgebraSpec& alg, const Coproduct* delta = nullptr, const std::string& name = "") {
  const Index n = alg.dim();
  json j;
  if (!name.empty()) j["name"] = name;
  j["dim"] = n;
  j["labels"] = alg.labels();
  json mult = json::array();
  for (Index k = 0; k < n; ++k) {
    json mk = json::array();
    for (Index i = 0; i < n; ++i) {
      json mki = json::array();
      for (Index jj = 0; jj < n; ++jj) mki.push_back(detail::scalar_to_json(alg.structure_constant(k, i, jj)));
      mk.push_back(mki);
    }
    mult.push_back(mk);
  }
  j["mult"] = mult;
  j["star"] = detail::matrix_to_json(alg.star_matrix());
  json unit = json::array();
  for (Index i = 0; i < n; ++i) unit.push_back(detail::scalar_to_json(alg.unit()(i)));
  j["unit"] = unit;
  if (delta) j["coproduct"] = detail::matrix_to_json(*delta);
  return j;
}

inline json specimen_to_json(const Specimen& s) { return to_json(s.alg, &s.delta, s.name); }

inline LoadedSpec spec_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorKind::InvalidInput, "algebra JSON must be an object");
  const json& dj = detail::field(j, "dim");
  if (!dj.is_number_integer() || dj.get<long long>() <= 0)
    throw Error(ErrorKind::InvalidInput, "dim must be a positive integer");
  const Index n = dj.get<Index>();
  LoadedSpec out;
  if (j.contains("name")) out.name = j.at("name").get<std::string>();

  std::vector<std::string> labels;
  if (j.contains("labels")) {
    detail::require_array(j.at("labels"), static_cast<size_t>(n), "labels");
    for (const auto& l : j.at("labels")) labels.push_back(l.get<std::string>());
  } else {
    for (Index i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
  }

  const json& mj = detail::field(j, "mult");
  detail::require_array(mj, static_cast<size_t>(n), "mult");
  std::vector<std::vector<std::vector<cplx>>> mult(static_cast<size_t>(n));
  for (Index k = 0; k < n; ++k) {
    detail::require_array(mj[k], static_cast<size_t>(n), "mult[" + std::to_string(k) + "]");
    mult[k].resize(static_cast<size_t>(n));
    for (Index i = 0; i < n; ++i) {
      std::string where = "mult[" + std::to_string(k) + "][" + std::to_string(i) + "]";
      detail::require_array(mj[k][i], static_cast<size_t>(n), where);
      for (Index jj = 0; jj < n; ++jj)
        mult[k][i].push_back(detail::scalar_from_json(mj[k][i][jj], where + "[" + std::to_string(jj) + "]"));
    }
  }
  Mat star = detail::matrix_from_json(detail::field(j, "star"), n, n, "star");
  const json& uj = detail::field(j, "unit");
  detail::require_array(uj, static_cast<size_t>(n), "unit");
  Vec unit(n);
  for (Index i = 0; i < n; ++i) unit(i) = detail::scalar_from_json(uj[i], "unit[" + std::to_string(i) + "]");
  out.alg = AlgebraSpec::from_tensor(labels, mult, star, unit);
  if (j.contains("coproduct")) out.delta = detail::matrix_from_json(j.at("coproduct"), n * n, n, "coproduct");
  return out;
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidInput, path + ": " + e.what());
  }
}

inline LoadedSpec load_spec(const std::string& path) {
  try {
    return spec_from_json(read_json_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidInput, path + ": " + e.what());
  }
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::InvalidInput, "cannot write " + path);
  out << text;
  if (!out) throw Error(ErrorKind::InvalidInput, "write failed for " + path);
}

}  // namespace qgw
