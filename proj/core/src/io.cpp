#include "cover/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace cover {

namespace {

using Json = nlohmann::ordered_json;

std::string number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

bool all_scalars(const Json& j) {
  for (const Json& e : j) {
    if (e.is_structured()) return false;
  }
  return true;
}

// nlohmann writes the shortest round-trip form; we want fixed 17 digits.
void dump(const Json& j, std::string& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  const std::string close(static_cast<std::size_t>(indent), ' ');
  if (j.is_number_float()) {
    out += number(j.get<double>());
  } else if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) out += ",\n";
      first = false;
      out += pad + Json(it.key()).dump() + ": ";
      dump(it.value(), out, indent + 2);
    }
    out += "\n" + close + "}";
  } else if (j.is_array()) {
    if (j.empty()) {
      out += "[]";
    } else if (all_scalars(j)) {
      out += "[";
      for (std::size_t k = 0; k < j.size(); ++k) {
        if (k) out += ", ";
        dump(j[k], out, indent);
      }
      out += "]";
    } else {
      out += "[\n";
      for (std::size_t k = 0; k < j.size(); ++k) {
        if (k) out += ",\n";
        out += pad;
        dump(j[k], out, indent + 2);
      }
      out += "\n" + close + "]";
    }
  } else {
    out += j.dump();
  }
}

std::string to_text(const Json& j) {
  std::string out;
  dump(j, out, 0);
  out += "\n";
  return out;
}

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

Point2 read_point(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw InvalidInput("a point must be [x, y]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Json write_point(Point2 p) { return Json::array({p.x, p.y}); }

Json centers_json(const Configuration& cfg) {
  Json c = Json::array();
  for (const Point2& p : cfg.centers) c.push_back(write_point(p));
  return c;
}

Configuration read_config(const Json& j, const char* radius_key) {
  if (!j.is_object() || !j.contains("centers") || !j.contains(radius_key)) {
    throw InvalidInput(std::string("configuration needs \"centers\" and \"") + radius_key + "\"");
  }
  Configuration cfg;
  for (const Json& p : j.at("centers")) cfg.centers.push_back(read_point(p));
  if (!j.at(radius_key).is_number()) throw InvalidInput("radius must be a number");
  cfg.radius = j.at(radius_key).get<double>();
  cfg.validate();
  return cfg;
}

}  // namespace

Region region_from_json(std::string_view text) {
  const Json j = parse(text);
  if (!j.is_object() || !j.contains("polygons") || !j.at("polygons").is_array()) {
    throw InvalidInput("region needs a \"polygons\" array");
  }
  std::vector<ConvexPolygon> polys;
  for (const Json& poly : j.at("polygons")) {
    if (!poly.is_array()) throw InvalidInput("a polygon must be an array of points");
    std::vector<Point2> vs;
    for (const Json& p : poly) vs.push_back(read_point(p));
    polys.emplace_back(std::move(vs));
  }
  if (!j.contains("boundary_flags") || j.at("boundary_flags").is_null()) return Region(std::move(polys));
  std::vector<std::vector<bool>> flags;
  try {
    flags = j.at("boundary_flags").get<std::vector<std::vector<bool>>>();
  } catch (const Json::exception&) {
    throw InvalidInput("boundary_flags must be an array of boolean arrays");
  }
  return Region(std::move(polys), std::move(flags));
}

std::string region_to_json(const Region& region) {
  Json polys = Json::array();
  for (const ConvexPolygon& poly : region.polygons()) {
    Json vs = Json::array();
    for (const Point2& p : poly.vertices()) vs.push_back(write_point(p));
    polys.push_back(std::move(vs));
  }
  Json flags = Json::array();
  for (const auto& row : region.boundary_flags()) {
    Json r = Json::array();
    for (bool b : row) r.push_back(b);
    flags.push_back(std::move(r));
  }
  Json j;
  j["polygons"] = std::move(polys);
  j["boundary_flags"] = std::move(flags);
  return to_text(j);
}

Configuration config_from_json(std::string_view text) { return read_config(parse(text), "r"); }

std::string config_to_json(const Configuration& cfg) {
  Json j;
  j["centers"] = centers_json(cfg);
  j["r"] = cfg.radius;
  return to_text(j);
}

std::string solution_to_json(const MultistartReport& report) {
  const SolveResult& s = report.best;
  Json j;
  j["m"] = s.cfg.size();
  j["r"] = s.cfg.radius;
  j["centers"] = centers_json(s.cfg);
  j["G"] = s.g;
  j["lambda"] = s.lambda;
  j["kkt_opt"] = s.kkt_opt;
  j["kkt_feas"] = s.kkt_feas;
  j["status"] = to_string(s.status);
  j["trial"] = report.best_trial;
  j["trials"] = report.trials;
  j["seed"] = report.seed;
  j["counters"] = {{"outer", s.counters.outer},
                   {"inner", s.counters.inner},
                   {"evals_G", s.counters.evals_G},
                   {"evals_grad", s.counters.evals_grad},
                   {"evals_hess", s.counters.evals_hess}};
  return to_text(j);
}

Configuration config_from_solution_json(std::string_view text) { return read_config(parse(text), "r"); }

std::string evaluation_to_json(const DerivativeBundle& b, bool grad, bool hess, const DiagnosticsReport* screen) {
  Json j;
  j["G"] = b.g;
  if (grad) {
    Json g = Json::array();
    for (Eigen::Index k = 0; k < b.grad.size(); ++k) g.push_back(b.grad[k]);
    j["grad"] = std::move(g);
  }
  if (hess) {
    const Eigen::MatrixXd H = symmetric_dense(b.hess);
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < H.rows(); ++i) {
      Json row = Json::array();
      for (Eigen::Index k = 0; k < H.cols(); ++k) row.push_back(H(i, k));
      rows.push_back(std::move(row));
    }
    j["hess"] = std::move(rows);
    j["near_singular"] = b.near_singular;
  }
  if (screen) {
    auto finite = [](double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); };
    j["screen"] = {{"ok", screen->ok},
                   {"min_center_distance", finite(screen->min_center_distance)},
                   {"min_tangency_margin", finite(screen->min_tangency_margin)},
                   {"min_transversality", finite(screen->min_transversality)},
                   {"min_boundary_margin", finite(screen->min_boundary_margin)},
                   {"near_triple", screen->near_triple},
                   {"corner_contacts", screen->corner_contacts}};
  }
  return to_text(j);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path);
  out << content;
}

}  // namespace cover
