#include "polarc/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "polarc/error.hpp"

namespace polarc {

namespace {

using nlohmann::json;

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(Errc::parse_error, e.what());
  }
}

[[noreturn]] void malformed(const std::string& what) { throw Error(Errc::parse_error, what); }

double number(const json& j, const char* what) {
  if (!j.is_number()) malformed(std::string(what) + " must be a number");
  return j.get<double>();
}

Scalar scalar_from(const json& j, bool complex) {
  if (complex) {
    if (!j.is_array() || j.size() != 2) malformed("complex entries must be [re, im] pairs");
    return {number(j[0], "real part"), number(j[1], "imaginary part")};
  }
  return {number(j, "vector entry"), 0.0};
}

json scalar_to(Scalar s, bool complex) {
  if (complex) return json::array({s.real(), s.imag()});
  return s.real();
}

}  // namespace

std::string system_to_json(const UnitVectorSystem& system) {
  const bool complex = !system.is_real();
  json vectors = json::array();
  for (const auto& v : system.vectors()) {
    json row = json::array();
    for (const auto& c : v) row.push_back(scalar_to(c, complex));
    vectors.push_back(std::move(row));
  }
  json doc{{"field", complex ? "complex" : "real"}, {"dim", system.dim()}, {"vectors", vectors}};
  return doc.dump();
}

UnitVectorSystem system_from_json(std::string_view text) {
  const json doc = parse(text);
  if (!doc.is_object()) malformed("system must be a JSON object");
  if (!doc.contains("field") || !doc["field"].is_string()) malformed("missing string field 'field'");
  const auto field_name = doc["field"].get<std::string>();
  if (field_name != "real" && field_name != "complex") malformed("field must be real or complex");
  const bool complex = field_name == "complex";
  if (!doc.contains("vectors") || !doc["vectors"].is_array()) malformed("missing array 'vectors'");

  std::vector<Vector> vectors;
  for (const auto& row : doc["vectors"]) {
    if (!row.is_array()) malformed("each vector must be an array");
    Vector v;
    for (const auto& entry : row) v.push_back(scalar_from(entry, complex));
    vectors.push_back(std::move(v));
  }
  if (doc.contains("dim")) {
    if (!doc["dim"].is_number_unsigned()) malformed("dim must be a nonnegative integer");
    const auto dim = doc["dim"].get<std::size_t>();
    for (const auto& v : vectors) {
      if (v.size() != dim) throw Error(Errc::dimension_mismatch, "vector length differs from dim");
    }
  }
  return UnitVectorSystem::create(complex ? Field::complex : Field::real, std::move(vectors));
}

std::string signs_to_json(const SignAssignment& signs) {
  const bool phase = signs.kind() == SignKind::complex_phases;
  json entries = json::array();
  if (phase) {
    for (const auto& e : signs.entries()) entries.push_back(scalar_to(e, true));
  } else {
    for (int s : signs.signs()) entries.push_back(s);
  }
  return json{{"kind", phase ? "phase" : "real"}, {"entries", entries}}.dump();
}

SignAssignment signs_from_json(std::string_view text) {
  const json doc = parse(text);
  if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string() ||
      !doc.contains("entries") || !doc["entries"].is_array()) {
    malformed("signs need string 'kind' and array 'entries'");
  }
  const auto kind = doc["kind"].get<std::string>();
  if (kind == "real") {
    std::vector<int> s;
    for (const auto& e : doc["entries"]) {
      if (!e.is_number_integer()) malformed("real sign entries must be integers");
      s.push_back(e.get<int>());
    }
    return SignAssignment::real(s);
  }
  if (kind == "phase") {
    std::vector<Scalar> s;
    for (const auto& e : doc["entries"]) s.push_back(scalar_from(e, true));
    return SignAssignment::phases(std::move(s));
  }
  malformed("kind must be real or phase");
}

std::string factorization_to_json(const Factorization& f) {
  json dirs = json::array();
  for (const auto& a : f.directions) dirs.push_back(json::array({a[0], a[1]}));
  return json{{"n", f.n}, {"K", f.K}, {"directions", dirs}}.dump();
}

Factorization factorization_from_json(std::string_view text) {
  const json doc = parse(text);
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_unsigned() ||
      !doc.contains("K") || !doc.contains("directions") || !doc["directions"].is_array()) {
    malformed("factorization needs 'n', 'K' and 'directions'");
  }
  Factorization f;
  f.n = doc["n"].get<std::size_t>();
  f.K = number(doc["K"], "K");
  f.parity = f.n % 2 == 1 ? Parity::odd : Parity::even;
  if (f.n == 0) throw Error(Errc::invalid_params, "degree must be at least 1");
  if (f.K == 0.0) throw Error(Errc::invalid_params, "K must be nonzero");
  for (const auto& d : doc["directions"]) {
    if (!d.is_array() || d.size() != 2) malformed("directions must be [x, y] pairs");
    const std::array<double, 2> a{number(d[0], "x"), number(d[1], "y")};
    if (std::abs(std::hypot(a[0], a[1]) - 1.0) > 1e-9) {
      throw Error(Errc::not_unit_norm, "factorization direction is not a unit vector");
    }
    f.directions.push_back(a);
  }
  if (f.directions.size() != f.n) {
    throw Error(Errc::dimension_mismatch, "factorization needs exactly n directions");
  }
  return f;
}

UnitVectorSystem load_system(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::parse_error, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return system_from_json(buf.str());
}

}  // namespace polarc
