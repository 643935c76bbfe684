// Copyright 2026 The N2T Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "n2t/chart.hpp"

#include <cmath>
#include <cstdio>

#include "json.hpp"

#include "n2t/error.hpp"

namespace n2t {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

ordered_json position(const GeoToken& v) {
  const GeoPoint p = v.token.coordinates.value_or(GeoPoint{});
  return ordered_json::array({p.longitude, p.latitude});
}

}  // namespace

void ChartConfig::validate() const {
  if (!(width > 2 * margin) || !(height > 2 * margin) || margin < 0 ||
      point_radius < 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "chart width and height must exceed twice the margin");
  }
}

CanvasPoint project(double latitude, double longitude, const ChartConfig& cfg) {
  return {cfg.margin + (longitude + 180.0) / 360.0 * (cfg.width - 2 * cfg.margin),
          cfg.margin + (90.0 - latitude) / 180.0 * (cfg.height - 2 * cfg.margin)};
}

std::string to_json(const Trajectory& tr) {
  ordered_json visits = ordered_json::array();
  for (std::size_t i = 0; i < tr.visits.size(); ++i) {
    const GeoToken& v = tr.visits[i];
    const GeoPoint p = v.token.coordinates.value_or(GeoPoint{});
    ordered_json visit;
    visit["sequence"] = i + 1;
    visit["temporal_index"] = v.token.temporal_index;
    visit["name"] = v.token.value;
    visit["geoname_id"] = v.geoname_id;
    visit["canonical_name"] = v.entry ? v.entry->canonical_name : v.token.value;
    visit["latitude"] = p.latitude;
    visit["longitude"] = p.longitude;
    visit["span"] = ordered_json::array({v.token.span.start, v.token.span.end});
    visits.push_back(std::move(visit));
  }
  ordered_json doc;
  doc["narrative_id"] = tr.narrative_id;
  doc["visit_count"] = tr.visits.size();
  doc["visits"] = std::move(visits);
  return doc.dump(2) + "\n";
}

std::string to_geojson(const Trajectory& tr) {
  ordered_json features = ordered_json::array();
  for (std::size_t i = 0; i < tr.visits.size(); ++i) {
    const GeoToken& v = tr.visits[i];
    ordered_json f;
    f["type"] = "Feature";
    f["geometry"] = {{"type", "Point"}, {"coordinates", position(v)}};
    f["properties"] = {{"name", v.token.value},
                       {"sequence", i + 1},
                       {"geoname_id", v.geoname_id}};
    features.push_back(std::move(f));
  }
  if (tr.visits.size() >= 2) {
    ordered_json line = ordered_json::array();
    for (const GeoToken& v : tr.visits) line.push_back(position(v));
    ordered_json f;
    f["type"] = "Feature";
    f["geometry"] = {{"type", "LineString"}, {"coordinates", std::move(line)}};
    f["properties"] = {{"narrative_id", tr.narrative_id}};
    features.push_back(std::move(f));
  }
  ordered_json doc;
  doc["type"] = "FeatureCollection";
  doc["features"] = std::move(features);
  return doc.dump();
}

std::string to_svg(const Trajectory& tr, const ChartConfig& cfg) {
  cfg.validate();
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         fmt(cfg.width) + "\" height=\"" + fmt(cfg.height) + "\" viewBox=\"0 0 " +
         fmt(cfg.width) + " " + fmt(cfg.height) + "\">\n";
  out += "<title>" + xml_escape(tr.narrative_id) + "</title>\n";
  out += "<rect x=\"" + fmt(cfg.margin) + "\" y=\"" + fmt(cfg.margin) +
         "\" width=\"" + fmt(cfg.width - 2 * cfg.margin) + "\" height=\"" +
         fmt(cfg.height - 2 * cfg.margin) +
         "\" fill=\"#f4f6f8\" stroke=\"#9aa5b1\" stroke-width=\"1\"/>\n";

  std::vector<CanvasPoint> points;
  for (const GeoToken& v : tr.visits) {
    const GeoPoint p = v.token.coordinates.value_or(GeoPoint{});
    points.push_back(project(p.latitude, p.longitude, cfg));
  }
  if (points.size() >= 2) {
    out += "<polyline fill=\"none\" stroke=\"#c0392b\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (i > 0) out.push_back(' ');
      out += fmt(points[i].x) + "," + fmt(points[i].y);
    }
    out += "\"/>\n";
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    out += "<circle cx=\"" + fmt(points[i].x) + "\" cy=\"" + fmt(points[i].y) +
           "\" r=\"" + fmt(cfg.point_radius) + "\" fill=\"#2c3e50\"/>\n";
    if (cfg.labels) {
      out += "<text x=\"" + fmt(points[i].x + cfg.point_radius + 2) + "\" y=\"" +
             fmt(points[i].y - cfg.point_radius - 2) +
             "\" font-family=\"sans-serif\" font-size=\"10\">" +
             std::to_string(i + 1) + ". " + xml_escape(tr.visits[i].token.value) +
             "</text>\n";
    }
  }
  out += "</svg>\n";
  return out;
}

}  // namespace n2t
