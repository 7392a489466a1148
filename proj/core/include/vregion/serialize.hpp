#pragma once

#include <string>
#include <vector>

#include "vregion/region.hpp"

namespace vregion {

// Output documents. Numbers are printed with 17 significant digits so every
// double survives a parse round trip bit-exactly.

std::string format_double17(double x);

/// Minimal streaming JSON writer (objects, arrays, snake_case keys supplied
/// by callers, 17-significant-digit numbers, two-space indentation).
class JsonWriter {
 public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  JsonWriter& key(const std::string& k);
  JsonWriter& value(double x);
  JsonWriter& value(const std::string& s);
  JsonWriter& value(const char* s);
  JsonWriter& value(bool b);
  JsonWriter& value_int(long long i);
  std::string take();

 private:
  void separate();
  void indent();
  std::string out_;
  std::vector<bool> has_items_;
  bool pending_key_ = false;
};

std::string arc_kind_name(ArcKind k);
std::string regime_name(RegimeKind k);

/// Full boundary document: schema_version "1", command "boundary", params,
/// regime metadata and the per-direction point list.
std::string boundary_to_json(const RegionPolyline& poly);

/// Inverse of boundary_to_json (parses with an independent JSON parser);
/// throws std::invalid_argument on malformed or wrong-schema input.
RegionPolyline boundary_from_json(const std::string& text);

/// CSV with the fixed header theta,r_theta,zeta_re,zeta_im,gamma_re,gamma_im,arc_kind.
std::string boundary_to_csv(const RegionPolyline& poly);

struct BoundaryCsvRow {
  double theta;
  double r_theta;
  Complex zeta;
  Complex gamma;
  ArcKind kind;
};

std::vector<BoundaryCsvRow> boundary_from_csv(const std::string& text);

/// Self-contained SVG 1.1 drawing of the closed boundary. The curve is
/// uniformly rescaled so its larger extent spans 600 units, the viewBox is
/// that bounding box plus a 5% margin, and edges touching the circular-arc
/// portion are stroked solid while pure c_s-arc edges use a "4 2" dash.
std::string boundary_to_svg(const RegionPolyline& poly);

}  // namespace vregion
