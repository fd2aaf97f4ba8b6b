#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gyro/model.hpp"

namespace gyroball {

/// A scene file that does not describe a valid scene (exit code 2).
class SceneError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// SVG output was requested for a scene that is not planar (exit code 4).
class SvgDimensionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TGrid {
  double start = 0.0;
  double stop = 1.0;
  int count = 101;
  std::vector<double> values() const;
};

struct Construction {
  std::string id;
  /// gyroline | parallelogram | double-gyroline | supporting-chord | endpoints
  std::string type;
  std::vector<std::string> points;
  TGrid grid;
};

struct Scene {
  gyro::ModelTag model = gyro::ModelTag::Einstein;
  double radius = 1.0;
  int dim = 2;
  std::optional<std::uint64_t> seed;
  /// Sorted by name.
  std::vector<std::pair<std::string, gyro::Vector>> points;
  std::vector<std::string> random_names;
  double random_cap = 0.9;
  std::vector<Construction> constructions;
};

Scene parse_scene(const nlohmann::json& doc);
Scene load_scene(const std::string& path);

struct FigureRow {
  std::string construction_id;
  /// The construction type; parallelogram rows are its four vertices with t = 0..3.
  std::string kind;
  double t;
  gyro::Vector x;
  double residual;
  /// Endpoint rows lie on the boundary and are left alone by model transport.
  bool boundary = false;
};

struct Figure {
  gyro::ModelTag model;
  double radius;
  int dim;
  std::vector<std::pair<std::string, gyro::Vector>> points;
  std::vector<FigureRow> rows;
};

/// Evaluates every construction. Random points are drawn from `seed`. With
/// `to` set to the other model, every interior point is carried across the
/// isomorphism. Domain failures surface as gyro::Error.
Figure build_figure(const Scene& scene, std::uint64_t seed, std::optional<gyro::ModelTag> to);

void write_csv(const Figure& fig, std::ostream& out);
void write_json(const Figure& fig, std::ostream& out);
/// Throws SvgDimensionError unless dim == 2.
void write_svg(const Figure& fig, std::ostream& out);

}  // namespace gyroball
