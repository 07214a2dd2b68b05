#include "ulamfloat/spec_io.hpp"

#include <json.hpp>

#include <fstream>
#include <limits>
#include <sstream>

namespace ulamfloat {

namespace {

using nlohmann::json;

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
  throw InvalidInput("field '" + field + "': " + what);
}

json parse_text(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(what + " is not valid JSON: " + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw InvalidInput("cannot open '" + path + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const json& require(const json& j, const std::string& prefix, const std::string& key) {
  if (!j.is_object()) {
    field_error(prefix, "expected an object");
  }
  auto it = j.find(key);
  if (it == j.end()) {
    field_error(prefix + "." + key, "missing");
  }
  return *it;
}

double number(const json& j, const std::string& field) {
  if (j.is_number()) {
    return j.get<double>();
  }
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "inf" || s == "+inf" || s == "infinity") {
      return std::numeric_limits<double>::infinity();
    }
    if (s == "-inf" || s == "-infinity") {
      return -std::numeric_limits<double>::infinity();
    }
  }
  field_error(field, "expected a number");
}

double finite_number(const json& j, const std::string& field) {
  const double v = number(j, field);
  if (!std::isfinite(v)) {
    field_error(field, "expected a finite number");
  }
  return v;
}

Vec vector(const json& j, const std::string& field) {
  if (!j.is_array() || j.empty()) {
    field_error(field, "expected a non-empty array of numbers");
  }
  Vec v(static_cast<int>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    v[static_cast<int>(i)] = finite_number(j[i], field + "[" + std::to_string(i) + "]");
  }
  return v;
}

Mat matrix(const json& j, const std::string& field, int n) {
  if (!j.is_array() || static_cast<int>(j.size()) != n) {
    field_error(field, "expected " + std::to_string(n) + " rows");
  }
  Mat m(n, n);
  for (int i = 0; i < n; ++i) {
    const Vec row = vector(j[i], field + "[" + std::to_string(i) + "]");
    if (row.size() != n) {
      field_error(field + "[" + std::to_string(i) + "]",
                  "expected " + std::to_string(n) + " entries");
    }
    m.row(i) = row.transpose();
  }
  return m;
}

template <class F>
auto wrap(const std::string& field, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const InvalidInput& e) {
    const std::string msg = e.what();
    if (msg.rfind("field '", 0) == 0) {
      throw;
    }
    field_error(field, msg);
  }
}

}  // namespace

Body parse_body(const std::string& json_text) {
  const json j = parse_text(json_text, "body");
  const json& type = require(j, "body", "type");
  if (!type.is_string()) {
    field_error("body.type", "expected a string");
  }
  const std::string t = type.get<std::string>();
  Body body = [&]() {
    if (t == "ball") {
      const double r = finite_number(require(j, "body", "radius"), "body.radius");
      Vec c;
      if (j.contains("center")) {
        c = vector(j["center"], "body.center");
      } else if (j.contains("dim")) {
        c = Vec::Zero(j["dim"].get<int>());
      } else {
        field_error("body.center", "missing (or give body.dim)");
      }
      return wrap("body.radius", [&] { return Body::ball(c, r); });
    }
    if (t == "ellipsoid") {
      Vec c = vector(require(j, "body", "center"), "body.center");
      const int n = static_cast<int>(c.size());
      Mat a;
      if (j.contains("shape")) {
        a = matrix(j["shape"], "body.shape", n);
        return wrap("body.shape", [&] { return Body::ellipsoid(c, a); });
      }
      const Vec axes = vector(require(j, "body", "semi_axes"), "body.semi_axes");
      if (axes.size() != n || (axes.array() <= 0.0).any()) {
        field_error("body.semi_axes", "expected " + std::to_string(n) + " positive entries");
      }
      a = axes.array().pow(-2.0).matrix().asDiagonal();
      return wrap("body.semi_axes", [&] { return Body::ellipsoid(c, a); });
    }
    if (t == "polytope") {
      const json& vs = require(j, "body", "vertices");
      if (!vs.is_array()) {
        field_error("body.vertices", "expected an array of points");
      }
      std::vector<Vec> pts;
      for (std::size_t i = 0; i < vs.size(); ++i) {
        pts.push_back(vector(vs[i], "body.vertices[" + std::to_string(i) + "]"));
      }
      return wrap("body.vertices", [&] { return Body::polytope(pts); });
    }
    field_error("body.type", "unknown body type '" + t + "'");
  }();
  if (j.value("normalize", false)) {
    body = body.normalized();
  } else if (j.value("recenter", false)) {
    body = body.recentered();
  }
  return body;
}

Body load_body(const std::string& path) { return parse_body(read_file(path)); }

Weight parse_weight(const std::string& json_text, const Body& host) {
  const json j = parse_text(json_text, "weight");
  const json& type = require(j, "weight", "type");
  if (!type.is_string()) {
    field_error("weight.type", "expected a string");
  }
  const std::string t = type.get<std::string>();
  if (t == "constant") {
    const double v = j.contains("value") ? finite_number(j["value"], "weight.value") : 1.0;
    return wrap("weight.value", [&] { return Weight::constant(v); });
  }
  if (t == "gaussian") {
    const Vec c = j.contains("center") ? vector(j["center"], "weight.center")
                                       : Vec(Vec::Zero(host.dim()));
    if (c.size() != host.dim()) {
      field_error("weight.center", "dimension does not match the body");
    }
    const double sigma = finite_number(require(j, "weight", "sigma"), "weight.sigma");
    const double scale = j.contains("scale") ? finite_number(j["scale"], "weight.scale") : 1.0;
    return wrap("weight.sigma", [&] { return Weight::gaussian(c, sigma, scale); });
  }
  if (t == "phi_p") {
    const double p = number(require(j, "weight", "p"), "weight.p");
    PhiExtension ext = PhiExtension::Radial;
    if (j.contains("extension")) {
      const std::string e = j["extension"].is_string() ? j["extension"].get<std::string>() : "";
      if (e == "radial") {
        ext = PhiExtension::Radial;
      } else if (e == "collar") {
        ext = PhiExtension::Collar;
      } else {
        field_error("weight.extension", "expected \"radial\" or \"collar\"");
      }
    }
    const double collar = j.contains("collar") ? finite_number(j["collar"], "weight.collar") : 0.1;
    return wrap("weight.p", [&] { return Weight::phi_p(p, host, ext, collar); });
  }
  field_error("weight.type", "unknown weight type '" + t + "'");
}

Weight load_weight(const std::string& path, const Body& host) {
  return parse_weight(read_file(path), host);
}

}  // namespace ulamfloat
