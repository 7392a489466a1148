#include "vregion/serialize.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace vregion {

namespace {

constexpr const char* kSchemaVersion = "1";

ArcKind arc_kind_from_name(const std::string& name) {
  if (name == "circular_arc") return ArcKind::CircularArc;
  if (name == "cs_arc") return ArcKind::CsArc;
  throw std::invalid_argument("unknown arc_kind: " + name);
}

double parse_double(const std::string& tok) {
  std::size_t used = 0;
  const double val = std::stod(tok, &used);
  if (used != tok.size()) throw std::invalid_argument("malformed number: " + tok);
  return val;
}

}  // namespace

std::string format_double17(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// ---------------------------------------------------------------------------
// JsonWriter
// ---------------------------------------------------------------------------

void JsonWriter::separate() {
  if (pending_key_) {
    pending_key_ = false;
    return;
  }
  if (!has_items_.empty()) {
    if (has_items_.back()) out_ += ',';
    has_items_.back() = true;
    out_ += '\n';
    indent();
  }
}

void JsonWriter::indent() {
  out_.append(2 * has_items_.size(), ' ');
}

JsonWriter& JsonWriter::begin_object() {
  separate();
  out_ += '{';
  has_items_.push_back(false);
  return *this;
}

JsonWriter& JsonWriter::end_object() {
  const bool had = has_items_.back();
  has_items_.pop_back();
  if (had) {
    out_ += '\n';
    indent();
  }
  out_ += '}';
  return *this;
}

JsonWriter& JsonWriter::begin_array() {
  separate();
  out_ += '[';
  has_items_.push_back(false);
  return *this;
}

JsonWriter& JsonWriter::end_array() {
  const bool had = has_items_.back();
  has_items_.pop_back();
  if (had) {
    out_ += '\n';
    indent();
  }
  out_ += ']';
  return *this;
}

JsonWriter& JsonWriter::key(const std::string& k) {
  separate();
  out_ += '"';
  out_ += k;  // keys in this codebase are plain identifiers
  out_ += "\": ";
  pending_key_ = true;
  return *this;
}

JsonWriter& JsonWriter::value(double x) {
  separate();
  out_ += format_double17(x);
  return *this;
}

JsonWriter& JsonWriter::value(const std::string& s) {
  separate();
  out_ += '"';
  for (char c : s) {
    switch (c) {
      case '"': out_ += "\\\""; break;
      case '\\': out_ += "\\\\"; break;
      case '\n': out_ += "\\n"; break;
      case '\t': out_ += "\\t"; break;
      default: out_ += c;
    }
  }
  out_ += '"';
  return *this;
}

JsonWriter& JsonWriter::value(const char* s) { return value(std::string(s)); }

JsonWriter& JsonWriter::value(bool b) {
  separate();
  out_ += b ? "true" : "false";
  return *this;
}

JsonWriter& JsonWriter::value_int(long long i) {
  separate();
  out_ += std::to_string(i);
  return *this;
}

std::string JsonWriter::take() {
  out_ += '\n';
  return std::move(out_);
}

std::string arc_kind_name(ArcKind k) {
  return k == ArcKind::CircularArc ? "circular_arc" : "cs_arc";
}

std::string regime_name(RegimeKind k) {
  switch (k) {
    case RegimeKind::ConvexJordan: return "convex_jordan";
    case RegimeKind::FullCircle: return "full_circle";
    case RegimeKind::Mixed: return "mixed";
  }
  return "";
}

// ---------------------------------------------------------------------------
// Boundary documents
// ---------------------------------------------------------------------------

std::string boundary_to_json(const RegionPolyline& poly) {
  const Regime regime = classify_regime(poly.params);
  JsonWriter w;
  w.begin_object();
  w.key("schema_version").value(kSchemaVersion);
  w.key("command").value("boundary");
  w.key("params").begin_object();
  w.key("r").value(poly.params.r());
  w.key("s").value(poly.params.s());
  w.end_object();
  w.key("payload").begin_object();
  w.key("regime").value(regime_name(regime.kind));
  w.key("amplitude").value(amplitude(poly.params));
  if (regime.theta0) w.key("theta0").value(*regime.theta0);
  w.key("closed").value(poly.closed);
  w.key("n_points").value_int(static_cast<long long>(poly.points.size()));
  w.key("points").begin_array();
  for (const BoundaryPoint& bp : poly.points) {
    w.begin_object();
    w.key("theta").value(bp.theta);
    w.key("r_theta").value(bp.r_theta);
    w.key("zeta_re").value(bp.zeta.real());
    w.key("zeta_im").value(bp.zeta.imag());
    w.key("gamma_re").value(bp.gamma.real());
    w.key("gamma_im").value(bp.gamma.imag());
    w.key("arc_kind").value(arc_kind_name(bp.kind));
    w.end_object();
  }
  w.end_array();
  w.end_object();
  w.end_object();
  return w.take();
}

RegionPolyline boundary_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("boundary_from_json: ") + e.what());
  }
  try {
    if (doc.at("schema_version").get<std::string>() != kSchemaVersion)
      throw std::invalid_argument("boundary_from_json: unsupported schema_version");
    const auto& params = doc.at("params");
    RegionPolyline poly{CanonicalParams(params.at("r").get<double>(), params.at("s").get<double>()),
                        {},
                        true};
    const auto& payload = doc.at("payload");
    poly.closed = payload.at("closed").get<bool>();
    const double amp = amplitude(poly.params);
    for (const auto& jp : payload.at("points")) {
      BoundaryPoint bp{};
      bp.theta = jp.at("theta").get<double>();
      bp.r_theta = jp.at("r_theta").get<double>();
      bp.zeta = {jp.at("zeta_re").get<double>(), jp.at("zeta_im").get<double>()};
      bp.gamma = {jp.at("gamma_re").get<double>(), jp.at("gamma_im").get<double>()};
      bp.v = bp.gamma / amp;
      bp.kind = arc_kind_from_name(jp.at("arc_kind").get<std::string>());
      poly.points.push_back(bp);
    }
    return poly;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("boundary_from_json: ") + e.what());
  }
}

std::string boundary_to_csv(const RegionPolyline& poly) {
  std::string out = "theta,r_theta,zeta_re,zeta_im,gamma_re,gamma_im,arc_kind\n";
  for (const BoundaryPoint& bp : poly.points) {
    out += format_double17(bp.theta);
    out += ',';
    out += format_double17(bp.r_theta);
    out += ',';
    out += format_double17(bp.zeta.real());
    out += ',';
    out += format_double17(bp.zeta.imag());
    out += ',';
    out += format_double17(bp.gamma.real());
    out += ',';
    out += format_double17(bp.gamma.imag());
    out += ',';
    out += arc_kind_name(bp.kind);
    out += '\n';
  }
  return out;
}

std::vector<BoundaryCsvRow> boundary_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "theta,r_theta,zeta_re,zeta_im,gamma_re,gamma_im,arc_kind")
    throw std::invalid_argument("boundary_from_csv: bad header");

  std::vector<BoundaryCsvRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> tok;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
      if (i == line.size() || line[i] == ',') {
        tok.push_back(line.substr(start, i - start));
        start = i + 1;
      }
    }
    if (tok.size() != 7) throw std::invalid_argument("boundary_from_csv: bad row: " + line);
    BoundaryCsvRow row{};
    row.theta = parse_double(tok[0]);
    row.r_theta = parse_double(tok[1]);
    row.zeta = {parse_double(tok[2]), parse_double(tok[3])};
    row.gamma = {parse_double(tok[4]), parse_double(tok[5])};
    row.kind = arc_kind_from_name(tok[6]);
    rows.push_back(row);
  }
  return rows;
}

// ---------------------------------------------------------------------------
// SVG
// ---------------------------------------------------------------------------

namespace {

std::string fmt_coord(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

}  // namespace

std::string boundary_to_svg(const RegionPolyline& poly) {
  const std::size_t n = poly.points.size();
  if (n < 3) throw std::invalid_argument("boundary_to_svg: too few points");

  double min_x = poly.points[0].gamma.real(), max_x = min_x;
  double min_y = poly.points[0].gamma.imag(), max_y = min_y;
  for (const BoundaryPoint& bp : poly.points) {
    min_x = std::min(min_x, bp.gamma.real());
    max_x = std::max(max_x, bp.gamma.real());
    min_y = std::min(min_y, bp.gamma.imag());
    max_y = std::max(max_y, bp.gamma.imag());
  }

  // Uniform rescale to a 600-unit canvas so the fixed dash pattern reads the
  // same at every region size; y flips into SVG's downward axis.
  const double extent = std::max(max_x - min_x, max_y - min_y);
  const double k = extent > 0.0 ? 600.0 / extent : 1.0;
  const double cx = 0.5 * (min_x + max_x);
  const double cy = 0.5 * (min_y + max_y);
  auto map = [&](Complex g) {
    return Complex{(g.real() - cx) * k, -(g.imag() - cy) * k};
  };

  const double w = (max_x - min_x) * k;
  const double h = (max_y - min_y) * k;
  const double margin_x = 0.05 * w, margin_y = 0.05 * h;
  const double vb_x = -0.5 * w - margin_x, vb_y = -0.5 * h - margin_y;
  const double vb_w = w + 2.0 * margin_x, vb_h = h + 2.0 * margin_y;

  // An edge belongs to the circular portion when either endpoint does; the
  // inserted joint vertices carry CsArc, so this assigns the joint edges to
  // the side the open arc between the endpoints lies on.
  auto edge_solid = [&](std::size_t i) {
    return poly.points[i].kind == ArcKind::CircularArc ||
           poly.points[(i + 1) % n].kind == ArcKind::CircularArc;
  };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"";
  out += fmt_coord(vb_x) + " " + fmt_coord(vb_y) + " " + fmt_coord(vb_w) + " " + fmt_coord(vb_h);
  out += "\" width=\"" + fmt_coord(vb_w) + "\" height=\"" + fmt_coord(vb_h) + "\">\n";
  out += "  <rect x=\"" + fmt_coord(vb_x) + "\" y=\"" + fmt_coord(vb_y) + "\" width=\"" +
         fmt_coord(vb_w) + "\" height=\"" + fmt_coord(vb_h) + "\" fill=\"white\"/>\n";

  auto emit_path = [&](const std::vector<Complex>& pts, bool solid, bool close) {
    out += "  <path d=\"M ";
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i) out += " L ";
      out += fmt_coord(pts[i].real()) + " " + fmt_coord(pts[i].imag());
    }
    if (close) out += " Z";
    out += "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"";
    if (!solid) out += " stroke-dasharray=\"4 2\"";
    out += "/>\n";
  };

  const bool uniform = [&] {
    for (std::size_t i = 1; i < n; ++i)
      if (edge_solid(i) != edge_solid(0)) return false;
    return true;
  }();

  if (uniform) {
    std::vector<Complex> pts(n);
    for (std::size_t i = 0; i < n; ++i) pts[i] = map(poly.points[i].gamma);
    emit_path(pts, edge_solid(0), true);
  } else {
    // Start runs at a style change so every maximal run becomes one path; the
    // shared endpoints keep the drawing closed.
    std::size_t start = 0;
    while (edge_solid((start + n - 1) % n) == edge_solid(start)) ++start;
    std::size_t i = start;
    do {
      const bool solid = edge_solid(i);
      std::vector<Complex> pts{map(poly.points[i].gamma)};
      std::size_t j = i;
      while (edge_solid(j) == solid) {
        j = (j + 1) % n;
        pts.push_back(map(poly.points[j].gamma));
        if (j == start) break;
      }
      emit_path(pts, solid, false);
      i = j;
    } while (i != start);
  }

  out += "</svg>\n";
  return out;
}

}  // namespace vregion
