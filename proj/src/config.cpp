// Copyright 2026 The Revolve Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "revolve/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "revolve/errors.hpp"

namespace revolve {

namespace {

using nlohmann::json;

template <typename... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};

// Collects problems while walking the document so that one run reports all
// of them.
class Reader {
 public:
  void fail(const std::string& path, const std::string& message) {
    problems_.push_back(path + ": " + message);
  }

  const std::vector<std::string>& problems() const { return problems_; }

  void reject_unknown(const json& object, const std::string& path,
                      std::initializer_list<std::string_view> known) {
    for (const auto& [key, value] : object.items()) {
      bool found = false;
      for (std::string_view k : known) found = found || (k == key);
      if (!found) fail(join(path, key), "unknown field");
    }
  }

  static std::string join(const std::string& path, std::string_view key) {
    return path.empty() ? std::string(key) : path + "." + std::string(key);
  }

  const json* field(const json& object, const std::string& path,
                    const char* key) {
    auto it = object.find(key);
    if (it == object.end()) {
      fail(join(path, key), "required field is missing");
      return nullptr;
    }
    return &*it;
  }

  std::optional<double> scalar(const json& value, const std::string& path) {
    if (value.is_number()) {
      const double v = value.get<double>();
      if (!std::isfinite(v)) {
        fail(path, "must be finite");
        return std::nullopt;
      }
      return v;
    }
    if (value.is_string()) {
      try {
        return parse_constant(value.get<std::string>());
      } catch (const Error& e) {
        fail(path, e.what());
        return std::nullopt;
      }
    }
    fail(path, "expected a number or a constant expression string");
    return std::nullopt;
  }

  std::optional<double> scalar_field(const json& object,
                                     const std::string& path, const char* key) {
    const json* value = field(object, path, key);
    if (!value) return std::nullopt;
    return scalar(*value, join(path, key));
  }

  std::optional<Curve> curve_field(const json& object, const std::string& path,
                                   const char* key, const char* variable) {
    const json* value = field(object, path, key);
    if (!value) return std::nullopt;
    const std::string where = join(path, key);
    std::string text;
    if (value->is_string()) {
      text = value->get<std::string>();
    } else if (value->is_number()) {
      text = json(value->get<double>()).dump();
    } else {
      fail(where, std::string("expected an expression string in ") + variable);
      return std::nullopt;
    }
    try {
      return parse_expr(text, variable);
    } catch (const Error& e) {
      fail(where, e.what());
      return std::nullopt;
    }
  }

  std::optional<Point> point(const json& value, const std::string& path) {
    if (!value.is_array() || value.size() != 2) {
      fail(path, "expected [x, y]");
      return std::nullopt;
    }
    auto x = scalar(value[0], path + "[0]");
    auto y = scalar(value[1], path + "[1]");
    if (!x || !y) return std::nullopt;
    return Point(*x, *y);
  }

  std::optional<Region> region(const json& value, const std::string& path) {
    if (!value.is_object()) {
      fail(path, "expected an object");
      return std::nullopt;
    }
    auto type_it = value.find("type");
    if (type_it == value.end() || !type_it->is_string()) {
      fail(join(path, "type"),
           "expected one of normal_x, normal_y, polar, polygon, union");
      return std::nullopt;
    }
    const std::string type = type_it->get<std::string>();
    const std::size_t before = problems_.size();
    std::optional<Region> result;
    try {
      if (type == "normal_x" || type == "normal_y" || type == "polar") {
        result = curve_region(value, path, type);
      } else if (type == "polygon") {
        result = polygon_region(value, path);
      } else if (type == "union") {
        result = union_region(value, path);
      } else {
        fail(join(path, "type"), "unknown region type '" + type + "'");
      }
    } catch (const Error& e) {
      // Construction-time validation of an otherwise well-formed region.
      if (problems_.size() == before) fail(path, e.what());
      return std::nullopt;
    }
    return result;
  }

  std::optional<Axis> axis(const json& value, const std::string& path) {
    try {
      if (value.is_string()) {
        const std::string name = value.get<std::string>();
        if (name == "OY") return Axis::vertical(0.0);
        if (name == "OX") return Axis::horizontal(0.0);
        fail(path, "unknown axis shorthand '" + name + "' (use OX or OY)");
        return std::nullopt;
      }
      if (!value.is_object()) {
        fail(path, "expected an object or \"OX\"/\"OY\"");
        return std::nullopt;
      }
      if (value.contains("vertical_at")) {
        reject_unknown(value, path, {"vertical_at"});
        auto x0 = scalar_field(value, path, "vertical_at");
        return x0 ? std::optional<Axis>(Axis::vertical(*x0)) : std::nullopt;
      }
      if (value.contains("horizontal_at")) {
        reject_unknown(value, path, {"horizontal_at"});
        auto y0 = scalar_field(value, path, "horizontal_at");
        return y0 ? std::optional<Axis>(Axis::horizontal(*y0)) : std::nullopt;
      }
      if (value.contains("through")) {
        reject_unknown(value, path, {"through"});
        const json& pts = value["through"];
        const std::string where = join(path, "through");
        if (!pts.is_array() || pts.size() != 2) {
          fail(where, "expected two points [[x1, y1], [x2, y2]]");
          return std::nullopt;
        }
        auto p = point(pts[0], where + "[0]");
        auto q = point(pts[1], where + "[1]");
        if (!p || !q) return std::nullopt;
        return Axis::through(*p, *q);
      }
      reject_unknown(value, path, {"a", "b", "c"});
      auto a = scalar_field(value, path, "a");
      auto b = scalar_field(value, path, "b");
      auto c = scalar_field(value, path, "c");
      if (!a || !b || !c) return std::nullopt;
      return Axis::from_coefficients(*a, *b, *c);
    } catch (const InvalidAxis& e) {
      fail(path, e.what());
      return std::nullopt;
    }
  }

 private:
  std::optional<Region> curve_region(const json& value, const std::string& path,
                                     const std::string& type) {
    struct Names {
      const char* lo;
      const char* hi;
      const char* below;
      const char* above;
      const char* variable;
    };
    const Names names = type == "normal_x"
                            ? Names{"x_min", "x_max", "lower", "upper", "x"}
                        : type == "normal_y"
                            ? Names{"y_min", "y_max", "left", "right", "y"}
                            : Names{"theta_min", "theta_max", "rho_min",
                                    "rho_max", "theta"};
    reject_unknown(value, path,
                   {"type", names.lo, names.hi, names.below, names.above});
    auto lo = scalar_field(value, path, names.lo);
    auto hi = scalar_field(value, path, names.hi);
    auto below = curve_field(value, path, names.below, names.variable);
    auto above = curve_field(value, path, names.above, names.variable);
    if (!lo || !hi || !below || !above) return std::nullopt;
    if (type == "normal_x") {
      return Region::normal_x(*lo, *hi, std::move(*below), std::move(*above));
    }
    if (type == "normal_y") {
      return Region::normal_y(*lo, *hi, std::move(*below), std::move(*above));
    }
    return Region::polar(*lo, *hi, std::move(*below), std::move(*above));
  }

  std::optional<Region> polygon_region(const json& value,
                                       const std::string& path) {
    reject_unknown(value, path, {"type", "vertices"});
    const json* vertices = field(value, path, "vertices");
    if (!vertices) return std::nullopt;
    const std::string where = join(path, "vertices");
    if (!vertices->is_array()) {
      fail(where, "expected an array of [x, y] pairs");
      return std::nullopt;
    }
    std::vector<Point> points;
    bool ok = true;
    for (std::size_t i = 0; i < vertices->size(); ++i) {
      auto p = point((*vertices)[i], where + "[" + std::to_string(i) + "]");
      if (p) {
        points.push_back(*p);
      } else {
        ok = false;
      }
    }
    if (!ok) return std::nullopt;
    return Region::polygon(std::move(points));
  }

  std::optional<Region> union_region(const json& value,
                                     const std::string& path) {
    reject_unknown(value, path, {"type", "parts"});
    const json* parts = field(value, path, "parts");
    if (!parts) return std::nullopt;
    const std::string where = join(path, "parts");
    if (!parts->is_array() || parts->empty()) {
      fail(where, "expected a non-empty array of regions");
      return std::nullopt;
    }
    std::vector<Region> regions;
    bool ok = true;
    for (std::size_t i = 0; i < parts->size(); ++i) {
      auto r = region((*parts)[i], where + "[" + std::to_string(i) + "]");
      if (r) {
        regions.push_back(std::move(*r));
      } else {
        ok = false;
      }
    }
    if (!ok) return std::nullopt;
    return Region::union_of(std::move(regions));
  }

  std::vector<std::string> problems_;
};

}  // namespace

std::optional<OutputFormat> parse_format(std::string_view name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  return std::nullopt;
}

JobConfig parse_job(const json& document) {
  Reader reader;
  if (!document.is_object()) {
    throw ConfigError({"(root): expected an object"});
  }
  reader.reject_unknown(document, "",
                        {"region", "axis", "method", "tolerance",
                         "monte_carlo", "format"});

  std::optional<Region> region;
  if (const json* value = reader.field(document, "", "region")) {
    region = reader.region(*value, "region");
  }

  std::optional<Axis> axis;
  if (auto it = document.find("axis"); it != document.end()) {
    axis = reader.axis(*it, "axis");
  }

  MethodSelection method;
  if (auto it = document.find("method"); it != document.end()) {
    if (!it->is_string()) {
      reader.fail("method", "expected a method name or \"all\"");
    } else if (it->get<std::string>() == "all") {
      method.all = true;
    } else if (auto m = parse_method(it->get<std::string>())) {
      method.method = *m;
    } else {
      reader.fail("method", "unknown method '" + it->get<std::string>() + "'");
    }
  }

  Tolerance tolerance;
  if (auto it = document.find("tolerance"); it != document.end()) {
    if (!it->is_object()) {
      reader.fail("tolerance", "expected an object");
    } else {
      reader.reject_unknown(*it, "tolerance", {"rel", "abs", "max_depth"});
      if (it->contains("rel")) {
        if (auto v = reader.scalar((*it)["rel"], "tolerance.rel")) tolerance.rel = *v;
      }
      if (it->contains("abs")) {
        if (auto v = reader.scalar((*it)["abs"], "tolerance.abs")) tolerance.abs = *v;
      }
      if (it->contains("max_depth")) {
        const json& d = (*it)["max_depth"];
        if (d.is_number_integer() && d.get<std::int64_t>() > 0 &&
            d.get<std::int64_t>() <= 1000) {
          tolerance.max_depth = d.get<int>();
        } else {
          reader.fail("tolerance.max_depth", "expected an integer in [1, 1000]");
        }
      }
      if (!(tolerance.rel > 0.0)) reader.fail("tolerance.rel", "must be > 0");
      if (!(tolerance.abs > 0.0)) reader.fail("tolerance.abs", "must be > 0");
    }
  }

  McConfig monte_carlo;
  if (auto it = document.find("monte_carlo"); it != document.end()) {
    if (!it->is_object()) {
      reader.fail("monte_carlo", "expected an object");
    } else {
      reader.reject_unknown(*it, "monte_carlo", {"samples", "seed"});
      if (auto s = it->find("samples"); s != it->end()) {
        if (s->is_number_unsigned() && s->get<std::uint64_t>() >= 100) {
          monte_carlo.samples = s->get<std::uint64_t>();
        } else {
          reader.fail("monte_carlo.samples", "expected an integer >= 100");
        }
      }
      if (auto s = it->find("seed"); s != it->end()) {
        if (s->is_number_unsigned()) {
          monte_carlo.seed = s->get<std::uint64_t>();
        } else {
          reader.fail("monte_carlo.seed", "expected a non-negative 64-bit integer");
        }
      }
    }
  }

  OutputFormat format = OutputFormat::Json;
  if (auto it = document.find("format"); it != document.end()) {
    auto f = it->is_string() ? parse_format(it->get<std::string>()) : std::nullopt;
    if (f) {
      format = *f;
    } else {
      reader.fail("format", "expected \"json\" or \"csv\"");
    }
  }

  if (!reader.problems().empty()) throw ConfigError(reader.problems());
  return JobConfig{std::move(*region), axis,        method,
                   tolerance,          monte_carlo, format};
}

JobConfig load_job(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError({path.string() + ": cannot open config file"});
  json document;
  try {
    document = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError({path.string() + ": " + e.what()});
  }
  return parse_job(document);
}

json to_json(const Region& region) {
  return std::visit(
      Overloaded{
          [](const NormalX& r) -> json {
            return {{"type", "normal_x"}, {"x_min", r.x_min},
                    {"x_max", r.x_max},   {"lower", r.lower.source()},
                    {"upper", r.upper.source()}};
          },
          [](const NormalY& r) -> json {
            return {{"type", "normal_y"}, {"y_min", r.y_min},
                    {"y_max", r.y_max},   {"left", r.left.source()},
                    {"right", r.right.source()}};
          },
          [](const PolarSector& r) -> json {
            return {{"type", "polar"},
                    {"theta_min", r.theta_min},
                    {"theta_max", r.theta_max},
                    {"rho_min", r.rho_min.source()},
                    {"rho_max", r.rho_max.source()}};
          },
          [](const Polygon& r) -> json {
            json vertices = json::array();
            for (const Point& v : r.vertices) {
              vertices.push_back({v.x(), v.y()});
            }
            return {{"type", "polygon"}, {"vertices", vertices}};
          },
          [](const Union& r) -> json {
            json parts = json::array();
            for (const Region& part : r.parts) parts.push_back(to_json(part));
            return {{"type", "union"}, {"parts", parts}};
          },
      },
      region.shape());
}

json to_json(const Axis& axis) {
  return {{"a", axis.a()}, {"b", axis.b()}, {"c", axis.c()}};
}

json to_json(const JobConfig& job) {
  json out;
  out["region"] = to_json(job.region);
  if (job.axis) out["axis"] = to_json(*job.axis);
  out["method"] = job.method.all ? std::string("all")
                                 : std::string(to_string(job.method.method));
  out["tolerance"] = {{"rel", job.tolerance.rel},
                      {"abs", job.tolerance.abs},
                      {"max_depth", job.tolerance.max_depth}};
  out["monte_carlo"] = {{"samples", job.monte_carlo.samples},
                        {"seed", job.monte_carlo.seed}};
  out["format"] = job.format == OutputFormat::Json ? "json" : "csv";
  return out;
}

}  // namespace revolve
