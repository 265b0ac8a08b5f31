// Copyright (c) the invogen contributors.
// Licensed under the Apache License, Version 2.0.
#include "invogen/json_io.hpp"

#include <cstdio>

#include <json.hpp>

namespace invogen {

namespace {

using nlohmann::json;

json complex_to_json(const cxd& c) { return json::array({c.real(), c.imag()}); }

cxd complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    raise(errc::parse_error, "complex numbers must be [re, im] pairs");
  return cxd(j[0].get<double>(), j[1].get<double>());
}

json matrix_to_json(const matrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

matrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty())
    raise(errc::parse_error, "matrices must be nonempty arrays of rows");
  const size_t rows = j.size();
  size_t cols = 0;
  matrix m;
  for (size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array())
      raise(errc::parse_error, "matrix rows must be arrays");
    if (i == 0) {
      cols = j[i].size();
      if (cols == 0) raise(errc::parse_error, "matrix rows must be nonempty");
      m.resize(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    } else if (j[i].size() != cols) {
      raise(errc::parse_error, "matrix rows have unequal lengths");
    }
    for (size_t k = 0; k < cols; ++k)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) =
          complex_from_json(j[i][k]);
  }
  return m;
}

json spec_to_json(const involution_spec& spec) {
  json out;
  if (!spec.is_structured()) {
    out["kind"] = "dense";
    out["matrix"] = matrix_to_json(*spec.dense);
    return out;
  }
  out["kind"] = "structured";
  json orbits = json::array();
  for (const auto& o : spec.orbits) {
    if (std::holds_alternative<fixed_orbit_spec>(o)) {
      const auto& f = std::get<fixed_orbit_spec>(o);
      orbits.push_back(json{{"fixed", {{"block", f.block}, {"u", matrix_to_json(f.u)}}}});
    } else {
      const auto& s = std::get<swap_orbit_spec>(o);
      orbits.push_back(json{{"swap",
                             {{"i", s.i},
                              {"j", s.j},
                              {"g", matrix_to_json(s.g)},
                              {"h", matrix_to_json(s.h)}}}});
    }
  }
  out["orbits"] = std::move(orbits);
  return out;
}

involution_spec spec_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    raise(errc::parse_error, "involution needs a string field 'kind'");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "dense") {
    if (!j.contains("matrix"))
      raise(errc::parse_error, "dense involution needs a field 'matrix'");
    return involution_spec::from_dense(matrix_from_json(j["matrix"]));
  }
  if (kind != "structured")
    raise(errc::parse_error, "involution kind must be 'structured' or 'dense'");
  if (!j.contains("orbits") || !j["orbits"].is_array())
    raise(errc::parse_error, "structured involution needs an array 'orbits'");
  std::vector<orbit_spec> orbits;
  for (const auto& o : j["orbits"]) {
    if (o.is_object() && o.contains("fixed")) {
      const auto& f = o["fixed"];
      if (!f.is_object() || !f.contains("block") ||
          !f["block"].is_number_integer() || !f.contains("u"))
        raise(errc::parse_error, "fixed orbit needs fields 'block' and 'u'");
      orbits.push_back(
          fixed_orbit_spec{f["block"].get<int>(), matrix_from_json(f["u"])});
    } else if (o.is_object() && o.contains("swap")) {
      const auto& s = o["swap"];
      if (!s.is_object() || !s.contains("i") || !s.contains("j") ||
          !s["i"].is_number_integer() || !s["j"].is_number_integer() ||
          !s.contains("g") || !s.contains("h"))
        raise(errc::parse_error, "swap orbit needs fields 'i', 'j', 'g', 'h'");
      orbits.push_back(swap_orbit_spec{s["i"].get<int>(), s["j"].get<int>(),
                                       matrix_from_json(s["g"]),
                                       matrix_from_json(s["h"])});
    } else {
      raise(errc::parse_error, "orbit entries must contain 'fixed' or 'swap'");
    }
  }
  return involution_spec::from_orbits(std::move(orbits));
}

algebra_shape shape_from_json(const json& j) {
  if (!j.is_array() || j.empty())
    raise(errc::parse_error, "'blocks' must be a nonempty array of sizes");
  algebra_shape shape;
  for (const auto& b : j) {
    if (!b.is_number_integer() || b.get<int>() < 1)
      raise(errc::parse_error, "block sizes must be positive integers");
    shape.blocks.push_back(b.get<int>());
  }
  return shape;
}

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) raise(errc::parse_error, "input is not valid JSON");
  return j;
}

}  // namespace

algebra_document parse_algebra_document(const std::string& text) {
  const json j = parse_text(text);
  if (!j.is_object() || !j.contains("blocks") || !j.contains("involution"))
    raise(errc::parse_error,
          "algebra documents need fields 'blocks' and 'involution'");
  algebra_document doc;
  doc.shape = shape_from_json(j["blocks"]);
  doc.involution = spec_from_json(j["involution"]);
  if (j.contains("metadata")) {
    const auto& m = j["metadata"];
    if (!m.is_object()) raise(errc::parse_error, "'metadata' must be an object");
    if (m.contains("name")) {
      if (!m["name"].is_string())
        raise(errc::parse_error, "metadata 'name' must be a string");
      doc.name = m["name"].get<std::string>();
    }
    if (m.contains("seed")) {
      if (!m["seed"].is_number_unsigned())
        raise(errc::parse_error, "metadata 'seed' must be a nonnegative integer");
      doc.seed = m["seed"].get<std::uint64_t>();
    }
  }
  try {
    doc.involution.validate(doc.shape);
  } catch (const error& e) {
    raise(errc::parse_error, e.what());
  }
  return doc;
}

std::string serialize_algebra_document(const algebra_document& doc) {
  json j;
  j["blocks"] = doc.shape.blocks;
  j["involution"] = spec_to_json(doc.involution);
  if (!doc.name.empty() || doc.seed.has_value()) {
    json m = json::object();
    if (!doc.name.empty()) m["name"] = doc.name;
    if (doc.seed.has_value()) m["seed"] = *doc.seed;
    j["metadata"] = std::move(m);
  }
  return j.dump(2) + "\n";
}

certificate_document parse_certificate_document(const std::string& text) {
  const json j = parse_text(text);
  if (!j.is_object() || !j.contains("blocks") || !j.contains("element"))
    raise(errc::parse_error,
          "certificate documents need fields 'blocks' and 'element'");
  certificate_document doc;
  doc.shape = shape_from_json(j["blocks"]);
  if (!j["element"].is_array() ||
      j["element"].size() != doc.shape.blocks.size())
    raise(errc::parse_error, "'element' needs one matrix per block");
  for (size_t b = 0; b < j["element"].size(); ++b)
    doc.element.push_back(matrix_from_json(j["element"][b]));

  if (j.contains("tool_version")) {
    if (!j["tool_version"].is_string())
      raise(errc::parse_error, "'tool_version' must be a string");
    doc.version = j["tool_version"].get<std::string>();
  }
  if (j.contains("input_digest")) {
    if (!j["input_digest"].is_string())
      raise(errc::parse_error, "'input_digest' must be a string");
    doc.input_digest = j["input_digest"].get<std::string>();
  }
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned())
      raise(errc::parse_error, "'seed' must be a nonnegative integer");
    doc.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("closure_dims")) {
    if (!j["closure_dims"].is_array())
      raise(errc::parse_error, "'closure_dims' must be an array");
    for (const auto& d : j["closure_dims"]) {
      if (!d.is_number_integer())
        raise(errc::parse_error, "'closure_dims' entries must be integers");
      doc.closure_dims.push_back(d.get<int>());
    }
  }
  if (j.contains("rounds")) {
    if (!j["rounds"].is_number_integer())
      raise(errc::parse_error, "'rounds' must be an integer");
    doc.rounds = j["rounds"].get<int>();
  }
  if (j.contains("invertibility_margin")) {
    if (!j["invertibility_margin"].is_number())
      raise(errc::parse_error, "'invertibility_margin' must be a number");
    doc.invertibility_margin = j["invertibility_margin"].get<double>();
  }
  if (j.contains("involution_residual")) {
    if (!j["involution_residual"].is_number())
      raise(errc::parse_error, "'involution_residual' must be a number");
    doc.involution_residual = j["involution_residual"].get<double>();
  }
  if (j.contains("pass")) {
    if (!j["pass"].is_boolean())
      raise(errc::parse_error, "'pass' must be a boolean");
    doc.pass = j["pass"].get<bool>();
  }
  return doc;
}

std::string serialize_certificate_document(const certificate_document& doc) {
  json j;
  j["tool_version"] = doc.version;
  j["input_digest"] = doc.input_digest;
  j["seed"] = doc.seed;
  j["blocks"] = doc.shape.blocks;
  json element = json::array();
  for (const auto& m : doc.element) element.push_back(matrix_to_json(m));
  j["element"] = std::move(element);
  j["closure_dims"] = doc.closure_dims;
  j["rounds"] = doc.rounds;
  j["invertibility_margin"] = doc.invertibility_margin;
  j["involution_residual"] = doc.involution_residual;
  j["pass"] = doc.pass;
  return j.dump(2) + "\n";
}

algebra_element element_from_certificate(const certificate_document& doc) {
  algebra_element e{doc.shape, doc.element};
  e.validate();
  return e;
}

std::string document_digest(const algebra_document& doc) {
  const json j = parse_text(serialize_algebra_document(doc));
  const std::string canon = j.dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canon) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx",
                static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace invogen
