#include "skein/json_io.hpp"

#include <stdexcept>

#include <json.hpp>

#include "skein/parse_error.hpp"

namespace skein {

namespace {

using Json = nlohmann::ordered_json;

Json pair_json(const LatticePair& u) { return Json::array({u.p, u.q}); }

Json curve_json(const Curve3& c) { return Json::array({c[0], c[1], c[2]}); }

LatticePair ab_pair(AbClass c) {
  const CurveLabel label = ab_class_label(c);
  return {label.p(), label.q()};
}

std::int64_t as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw std::invalid_argument(std::string(what) + ": expected an integer");
  return j.get<std::int64_t>();
}

const Json& field(const Json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw std::invalid_argument(std::string("missing field '") + key + "'");
  }
  return obj.at(key);
}

const Json& sized_array(const Json& j, std::size_t n, const char* what) {
  if (!j.is_array() || j.size() != n) {
    throw std::invalid_argument(std::string(what) + ": expected an array of " + std::to_string(n));
  }
  return j;
}

LatticePair read_pair(const Json& j, const char* what) {
  sized_array(j, 2, what);
  return {as_int(j[0], what), as_int(j[1], what)};
}

Vec3 read_vec3(const Json& j, const char* what) {
  sized_array(j, 3, what);
  return {as_int(j[0], what), as_int(j[1], what), as_int(j[2], what)};
}

Json parse_document(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

std::string to_json(const AbCertificate& cert, int indent) {
  Json doc;
  doc["input"] = pair_json(cert.input);
  doc["canonical"] = pair_json(ab_pair(cert.canonical));
  doc["steps"] = Json::array();
  for (const auto& s : cert.steps) {
    Json step;
    step["from"] = pair_json(s.from);
    step["to"] = pair_json(s.to);
    step["conjugator"] = pair_json(s.conjugator);
    step["scale"] = s.scale.to_string();
    doc["steps"].push_back(std::move(step));
  }
  return doc.dump(indent);
}

std::string to_json(const Reduction3Certificate& cert, int indent) {
  Json doc;
  doc["input"] = curve_json(cert.input);
  doc["canonical"] = curve_json(cert.canonical);
  doc["steps"] = Json::array();
  for (const auto& s : cert.steps) {
    Json step;
    Json rows = Json::array();
    for (const auto& row : s.embedding.matrix()) rows.push_back(Json::array({row[0], row[1], row[2]}));
    step["matrix"] = std::move(rows);
    step["columns"] = Json::array({s.embedding.columns()[0], s.embedding.columns()[1]});
    step["from_pair"] = pair_json(s.from_pair);
    step["to_pair"] = pair_json(s.to_pair);
    step["permutation"] = Json::array({s.permutation[0], s.permutation[1], s.permutation[2]});
    doc["steps"].push_back(std::move(step));
  }
  return doc.dump(indent);
}

std::string to_json(const SkeinT2Element& x, int indent) {
  Json doc;
  doc["terms"] = Json::array();
  for (const auto& [label, c] : x.terms()) {
    Json term;
    term["label"] = label.is_empty() ? Json("empty") : Json::array({label.p(), label.q()});
    term["coeff"] = c.to_string();
    doc["terms"].push_back(std::move(term));
  }
  return doc.dump(indent);
}

std::string to_json(const AbElement& x, int indent) {
  Json doc;
  doc["terms"] = Json::array();
  for (const auto& [cls, c] : x.terms()) {
    Json term;
    term["class"] = to_string(cls);
    term["coeff"] = c.to_string();
    doc["terms"].push_back(std::move(term));
  }
  return doc.dump(indent);
}

AbCertificate ab_certificate_from_json(std::string_view text) {
  const Json doc = parse_document(text);
  AbCertificate cert;
  cert.input = read_pair(field(doc, "input"), "input");
  const LatticePair canonical = read_pair(field(doc, "canonical"), "canonical");
  bool matched = false;
  for (AbClass c : kAllAbClasses) {
    if (c != AbClass::Empty && ab_pair(c) == canonical) {
      cert.canonical = c;
      matched = true;
    }
  }
  if (!matched) throw std::invalid_argument("canonical: not one of (1,0), (0,1), (1,1), (2,0)");
  const Json& steps = field(doc, "steps");
  if (!steps.is_array()) throw std::invalid_argument("steps: expected an array");
  for (const Json& s : steps) {
    AbStep step;
    step.from = read_pair(field(s, "from"), "from");
    step.to = read_pair(field(s, "to"), "to");
    step.conjugator = read_pair(field(s, "conjugator"), "conjugator");
    const Json& scale = field(s, "scale");
    if (!scale.is_string()) throw std::invalid_argument("scale: expected a string");
    try {
      step.scale = parse_rational_function(scale.get<std::string>());
    } catch (const ParseError& e) {
      throw std::invalid_argument(std::string("scale: ") + e.what());
    }
    cert.steps.push_back(std::move(step));
  }
  return cert;
}

Reduction3Certificate reduction_certificate_from_json(std::string_view text) {
  const Json doc = parse_document(text);
  Reduction3Certificate cert{Curve3(read_vec3(field(doc, "input"), "input")),
                             Curve3(read_vec3(field(doc, "canonical"), "canonical")),
                             {}};
  const Json& steps = field(doc, "steps");
  if (!steps.is_array()) throw std::invalid_argument("steps: expected an array");
  for (const Json& s : steps) {
    const Json& rows = sized_array(field(s, "matrix"), 3, "matrix");
    Mat3 m{};
    for (std::size_t i = 0; i < 3; ++i) m[i] = read_vec3(rows[i], "matrix row");
    const LatticePair cols = read_pair(field(s, "columns"), "columns");
    const Vec3 perm = read_vec3(field(s, "permutation"), "permutation");
    cert.steps.push_back({StandardEmbedding(m, {static_cast<int>(cols.p), static_cast<int>(cols.q)}),
                          read_pair(field(s, "from_pair"), "from_pair"),
                          read_pair(field(s, "to_pair"), "to_pair"),
                          {static_cast<int>(perm[0]), static_cast<int>(perm[1]), static_cast<int>(perm[2])}});
  }
  return cert;
}

}  // namespace skein
