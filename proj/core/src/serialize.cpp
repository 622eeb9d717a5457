#include "cheeger2d/serialize.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <limits>
#include <utility>

#include <json.hpp>

#include "cheeger2d/errors.hpp"

namespace cheeger2d {

using nlohmann::json;

std::string fmt_double(double v) {
  std::array<char, 64> buf;
  auto [p, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), p);
}

namespace {

std::string fmt_vec(const Vec2& p) {
  return "[" + fmt_double(p.x) + "," + fmt_double(p.y) + "]";
}

std::string vertices_json(const ConvexPolygon& poly) {
  std::string s = "{\"vertices\":[";
  for (std::size_t i = 0; i < poly.size(); ++i) {
    if (i) s += ',';
    s += fmt_vec(poly.vertex(i));
  }
  s += "]}";
  return s;
}

std::string pose_json(const EquilateralPose& pose) {
  return "{\"center\":" + fmt_vec(pose.center) +
         ",\"rotation\":" + fmt_double(pose.rotation) +
         ",\"width\":" + fmt_double(pose.width) + "}";
}

json parse_or_throw(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw DegenerateInput(std::string(what) + ": " + e.what());
  }
}

double num(const json& j, const char* key, const char* what) {
  if (!j.contains(key) || !j[key].is_number())
    throw DegenerateInput(std::string(what) + ": missing numeric field \"" +
                          key + "\"");
  return j[key].get<double>();
}

}  // namespace

ConvexPolygon parse_shape_json(const std::string& text) {
  json j = parse_or_throw(text, "shape JSON");
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
    throw DegenerateInput(
        "shape JSON: expected an object with a \"vertices\" array");
  std::vector<Vec2> pts;
  for (const json& v : j["vertices"]) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() ||
        !v[1].is_number())
      throw DegenerateInput(
          "shape JSON: each vertex must be a [x, y] pair of numbers");
    pts.push_back({v[0].get<double>(), v[1].get<double>()});
  }
  if (pts.size() < 3)
    throw DegenerateInput("shape JSON: need at least 3 vertices");
  return canonicalize(std::move(pts));
}

std::string shape_to_json(const ConvexPolygon& poly) {
  return vertices_json(poly);
}

std::string report_to_json(const ShapeReport& report) {
  std::string s = "{";
  if (report.asymmetry_value) {
    s += "\"asymmetry\":{\"pose\":" + pose_json(*report.asymmetry_pose) +
         ",\"value\":" + fmt_double(*report.asymmetry_value) + "},";
  }
  s += "\"deficit\":" + fmt_double(report.deficit);
  s += ",\"margins\":{";
  for (std::size_t i = 0; i < report.margins.size(); ++i) {
    if (i) s += ',';
    s += "\"" + report.margins[i].first +
         "\":" + fmt_double(report.margins[i].second);
  }
  s += "}";
  const ShapeScalars& sc = report.scalars;
  s += ",\"scalars\":{\"area\":" + fmt_double(sc.area) +
       ",\"diameter\":" + fmt_double(sc.diameter) +
       ",\"h\":" + fmt_double(sc.h) + ",\"inradius\":" + fmt_double(sc.inradius) +
       ",\"perimeter\":" + fmt_double(sc.perimeter) +
       ",\"wh\":" + fmt_double(sc.wh) + ",\"width\":" + fmt_double(sc.width) +
       "}";
  if (report.stability_margin)
    s += ",\"stability_margin\":" + fmt_double(*report.stability_margin);
  s += "}";
  return s;
}

ShapeReport report_from_json(const std::string& text) {
  json j = parse_or_throw(text, "report JSON");
  if (!j.is_object()) throw DegenerateInput("report JSON: expected an object");
  ShapeReport rep;
  if (!j.contains("scalars") || !j["scalars"].is_object())
    throw DegenerateInput("report JSON: missing \"scalars\" object");
  const json& sc = j["scalars"];
  rep.scalars.area = num(sc, "area", "report JSON");
  rep.scalars.diameter = num(sc, "diameter", "report JSON");
  rep.scalars.h = num(sc, "h", "report JSON");
  rep.scalars.inradius = num(sc, "inradius", "report JSON");
  rep.scalars.perimeter = num(sc, "perimeter", "report JSON");
  rep.scalars.wh = num(sc, "wh", "report JSON");
  rep.scalars.width = num(sc, "width", "report JSON");
  rep.deficit = num(j, "deficit", "report JSON");
  if (!j.contains("margins") || !j["margins"].is_object())
    throw DegenerateInput("report JSON: missing \"margins\" object");
  for (const auto& [key, value] : j["margins"].items()) {
    if (!value.is_number())
      throw DegenerateInput("report JSON: margin values must be numbers");
    rep.margins.emplace_back(key, value.get<double>());
  }
  if (j.contains("asymmetry")) {
    const json& a = j["asymmetry"];
    rep.asymmetry_value = num(a, "value", "report JSON");
    if (!a.contains("pose") || !a["pose"].is_object())
      throw DegenerateInput("report JSON: asymmetry needs a \"pose\" object");
    const json& p = a["pose"];
    EquilateralPose pose;
    pose.width = num(p, "width", "report JSON");
    pose.rotation = num(p, "rotation", "report JSON");
    if (!p.contains("center") || !p["center"].is_array() ||
        p["center"].size() != 2 || !p["center"][0].is_number() ||
        !p["center"][1].is_number())
      throw DegenerateInput("report JSON: pose center must be [x, y]");
    pose.center = {p["center"][0].get<double>(), p["center"][1].get<double>()};
    rep.asymmetry_pose = pose;
  }
  if (j.contains("stability_margin"))
    rep.stability_margin = num(j, "stability_margin", "report JSON");
  return rep;
}

std::string asymmetry_to_json(const AsymmetryResult& result, double width) {
  return "{\"hausdorff\":" + fmt_double(result.value * width) +
         ",\"pose\":" + pose_json(result.pose) +
         ",\"value\":" + fmt_double(result.value) + "}";
}

std::string sweep_to_csv(std::span<const SweepRecord> records) {
  std::string s = "param,name,measured,reference,rel_err\n";
  for (const SweepRecord& rec : records) {
    for (const SweepEntry& e : rec.entries) {
      s += fmt_double(rec.param) + "," + e.name + "," + fmt_double(e.measured) +
           ",";
      if (e.reference) {
        double rel = std::abs(e.measured - *e.reference) /
                     std::abs(*e.reference);
        s += fmt_double(*e.reference) + "," + fmt_double(rel);
      } else {
        s += ",";
      }
      s += "\n";
    }
  }
  return s;
}

std::string corpus_to_csv(const CorpusReport& report) {
  bool stability = std::any_of(report.rows.begin(), report.rows.end(),
                               [](const CorpusRow& r) { return bool(r.alpha); });
  std::string s =
      "index,n,w,r,area,perimeter,diameter,h,wh,deficit,margin_main,"
      "margin_lower,margin_ftouhi,margin_pal_width,margin_pal_area,"
      "margin_width_lemma,margin_area_comparison,cheeger_consistency_err";
  if (stability) s += ",alpha,ratio_alpha_delta,stability_margin";
  s += "\n";
  for (const CorpusRow& r : report.rows) {
    s += std::to_string(r.index) + "," + std::to_string(r.n) + "," +
         fmt_double(r.scalars.width) + "," + fmt_double(r.scalars.inradius) +
         "," + fmt_double(r.scalars.area) + "," +
         fmt_double(r.scalars.perimeter) + "," +
         fmt_double(r.scalars.diameter) + "," + fmt_double(r.scalars.h) + "," +
         fmt_double(r.scalars.wh) + "," + fmt_double(r.deficit) + "," +
         fmt_double(r.margin_main) + "," + fmt_double(r.margin_lower) + "," +
         fmt_double(r.margin_ftouhi) + "," + fmt_double(r.margin_pal_width) +
         "," + fmt_double(r.margin_pal_area) + "," +
         fmt_double(r.margin_width_lemma) + "," +
         fmt_double(r.margin_area_comparison) + "," +
         fmt_double(r.cheeger_consistency_err);
    if (stability) {
      s += "," + (r.alpha ? fmt_double(*r.alpha) : std::string()) + "," +
           (r.ratio_alpha_delta ? fmt_double(*r.ratio_alpha_delta)
                                : std::string()) +
           "," +
           (r.stability_margin ? fmt_double(*r.stability_margin)
                               : std::string());
    }
    s += "\n";
  }
  return s;
}

namespace {

// Human-readable name for a violated guarantee.
std::string check_title(const std::string& check) {
  if (check == "main") return "reverse width-Cheeger bound w*h <= 3+sqrt(pi*sqrt(3))";
  if (check == "lower") return "lower bound w*h > 2";
  if (check == "ftouhi") return "bound h <= 1/r + sqrt(pi/area)";
  if (check == "pal_width") return "Pal bound w <= 3r";
  if (check == "pal_area") return "Pal bound w^2 <= sqrt(3)*area";
  if (check == "width_lemma") return "inner-set width bound w(K_-t) >= w - 3t";
  if (check == "area_comparison")
    return "inner-set area bound |K_-t| >= (w-3t)^2/sqrt(3)";
  if (check == "cheeger_consistency")
    return "Cheeger set self-consistency P(C)/|C| = h";
  return check;
}

}  // namespace

std::string corpus_summary(const CorpusReport& report) {
  std::string s;
  s += "shapes checked: " + std::to_string(report.rows.size()) + "\n";
  s += "violations: " + std::to_string(report.violations.size()) + "\n";
  s += "min margin main:            " + fmt_double(report.min_margin_main) + "\n";
  s += "min margin lower:           " + fmt_double(report.min_margin_lower) + "\n";
  s += "min margin ftouhi:          " + fmt_double(report.min_margin_ftouhi) + "\n";
  s += "min margin pal_width:       " + fmt_double(report.min_margin_pal_width) + "\n";
  s += "min margin pal_area:        " + fmt_double(report.min_margin_pal_area) + "\n";
  s += "min margin width_lemma:     " + fmt_double(report.min_margin_width_lemma) + "\n";
  s += "min margin area_comparison: " + fmt_double(report.min_margin_area_comparison) + "\n";
  s += "max cheeger consistency err: " + fmt_double(report.max_consistency_err) + "\n";
  if (report.max_ratio_alpha_delta)
    s += "max asymmetry/deficit ratio: " +
         fmt_double(*report.max_ratio_alpha_delta) + "\n";
  if (report.min_stability_margin)
    s += "min stability margin:        " +
         fmt_double(*report.min_stability_margin) + "\n";
  for (const CorpusViolation& v : report.violations) {
    s += "VIOLATION of " + check_title(v.check) + ": shape index " +
         std::to_string(v.index) + ", margin " + fmt_double(v.margin) +
         ", vertices " + v.vertices + "\n";
  }
  return s;
}

std::string search_result_to_json(const SearchResult& result) {
  std::string s = "{\"asym_of_best\":" + fmt_double(result.asym_of_best) +
                  ",\"best_shape\":" + vertices_json(result.best_shape) +
                  ",\"best_value\":" + fmt_double(result.best_value) +
                  ",\"trajectory\":[";
  for (std::size_t i = 0; i < result.trajectory.size(); ++i) {
    if (i) s += ',';
    s += "[" + std::to_string(result.trajectory[i].iteration) + "," +
         fmt_double(result.trajectory[i].value) + "]";
  }
  s += "],\"winning_restart\":" + std::to_string(result.winning_restart) + "}";
  return s;
}

std::string trajectory_to_csv(const SearchResult& result) {
  std::string s = "iteration,value\n";
  for (const TracePoint& t : result.trajectory)
    s += std::to_string(t.iteration) + "," + fmt_double(t.value) + "\n";
  return s;
}

std::string svg_cheeger_set(const ConvexPolygon& poly,
                            const CheegerResult& result) {
  double minx = std::numeric_limits<double>::infinity(), miny = minx;
  double maxx = -minx, maxy = -minx;
  for (const Vec2& v : poly.vertices()) {
    minx = std::min(minx, v.x);
    miny = std::min(miny, v.y);
    maxx = std::max(maxx, v.x);
    maxy = std::max(maxy, v.y);
  }
  const double pad = 20.0;
  const double scale = 600.0 / std::max(maxx - minx, maxy - miny);
  const double width = (maxx - minx) * scale + 2.0 * pad;
  const double height = (maxy - miny) * scale + 2.0 * pad;
  auto px = [&](const Vec2& p) {
    // y flips so that the world's counterclockwise is the screen's clockwise
    return fmt_double((p.x - minx) * scale + pad) + " " +
           fmt_double((maxy - p.y) * scale + pad);
  };

  std::string s = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                  fmt_double(width) + "\" height=\"" + fmt_double(height) +
                  "\" viewBox=\"0 0 " + fmt_double(width) + " " +
                  fmt_double(height) + "\">\n";
  s += "  <path d=\"M " + px(poly.vertex(0));
  for (std::size_t i = 1; i < poly.size(); ++i) s += " L " + px(poly.vertex(i));
  s += " Z\" fill=\"#dbe9f6\" stroke=\"#1f77b4\" stroke-width=\"1.5\"/>\n";

  const ConvexPolygon& core = result.cheeger_set.core;
  const double r = result.cheeger_set.radius;
  const std::string rs = fmt_double(r * scale);
  const std::size_t n = core.size();
  std::vector<Vec2> a(n), b(n);  // offset segment endpoints per edge
  for (std::size_t i = 0; i < n; ++i) {
    Vec2 e = core.vertex(i + 1) - core.vertex(i);
    Vec2 nrm = Vec2{e.y, -e.x} * (1.0 / norm(e));  // outward for CCW order
    a[i] = core.vertex(i) + nrm * r;
    b[i] = core.vertex(i + 1) + nrm * r;
  }
  s += "  <path d=\"M " + px(a[0]);
  for (std::size_t i = 0; i < n; ++i) {
    // straight edge, then the fillet arc around core vertex i+1; the world
    // turn is counterclockwise, which is sweep 0 after the y flip
    s += " L " + px(b[i]) + " A " + rs + " " + rs + " 0 0 0 " +
         px(a[(i + 1) % n]);
  }
  s += " Z\" fill=\"#ff7f0e\" fill-opacity=\"0.35\" stroke=\"#ff7f0e\" "
       "stroke-width=\"1.5\"/>\n";
  s += "</svg>\n";
  return s;
}

}  // namespace cheeger2d
