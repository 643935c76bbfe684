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


// Trajectory serialization: visit JSON, GeoJSON and a schematic SVG.

#ifndef N2T_CHART_HPP_
#define N2T_CHART_HPP_

#include <string>

#include "n2t/extract.hpp"

namespace n2t {

struct ChartConfig {
  double width = 960.0;
  double height = 480.0;
  double margin = 20.0;
  bool labels = true;
  double point_radius = 4.0;

  // Throws kInvalidArgument unless width and height exceed 2 * margin.
  void validate() const;
};

struct CanvasPoint {
  double x = 0.0;
  double y = 0.0;
};

// Equirectangular projection into the drawing area.
CanvasPoint project(double latitude, double longitude, const ChartConfig& cfg);

std::string to_json(const Trajectory& tr);
std::string to_geojson(const Trajectory& tr);
std::string to_svg(const Trajectory& tr, const ChartConfig& cfg = {});

}  // namespace n2t

#endif  // N2T_CHART_HPP_
