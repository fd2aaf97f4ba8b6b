#include "scene.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <set>

#include "format.hpp"
#include "gyro/geometry.hpp"
#include "gyro/isomorphism.hpp"
#include "gyro/linear.hpp"

namespace gyroball {

using nlohmann::json;

std::vector<double> TGrid::values() const {
  std::vector<double> ts;
  if (count == 1) return {start};
  for (int i = 0; i < count; ++i) ts.push_back(start + (stop - start) * i / (count - 1));
  return ts;
}

namespace {

const std::map<std::string, std::size_t>& arity() {
  static const std::map<std::string, std::size_t> table{
      {"gyroline", 2},         {"parallelogram", 3}, {"double-gyroline", 2},
      {"supporting-chord", 2}, {"endpoints", 2},
  };
  return table;
}

TGrid parse_grid(const json& j) {
  if (!j.is_object()) throw SceneError("t_grid must be an object");
  TGrid g;
  g.start = j.value("start", 0.0);
  g.stop = j.value("stop", 1.0);
  g.count = j.value("count", 101);
  if (g.count < 1 || !std::isfinite(g.start) || !std::isfinite(g.stop)) {
    throw SceneError("t_grid needs finite bounds and count >= 1");
  }
  return g;
}

gyro::Vector parse_coords(const json& j, const std::string& name, int dim) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim) {
    throw SceneError("point '" + name + "' must be an array of " + std::to_string(dim) + " numbers");
  }
  gyro::Vector v(dim);
  for (int i = 0; i < dim; ++i) {
    if (!j[static_cast<std::size_t>(i)].is_number()) {
      throw SceneError("point '" + name + "' has a non-numeric coordinate");
    }
    v[i] = j[static_cast<std::size_t>(i)].get<double>();
  }
  return v;
}

}  // namespace

Scene parse_scene(const json& doc) {
  try {
    if (!doc.is_object()) throw SceneError("scene must be a JSON object");
    Scene s;
    s.model = gyro::parse_model(doc.at("model").get<std::string>());
    s.radius = doc.value("radius", 1.0);
    s.dim = doc.value("dim", 2);
    if (!(s.radius > 0.0) || !std::isfinite(s.radius)) throw SceneError("radius must be positive");
    if (s.dim < 1) throw SceneError("dim must be at least 1");
    if (doc.contains("seed")) s.seed = doc.at("seed").get<std::uint64_t>();

    std::set<std::string> names;
    if (doc.contains("points")) {
      const json& pts = doc.at("points");
      if (!pts.is_object()) throw SceneError("points must be an object of name -> coordinates");
      for (const auto& [name, coords] : pts.items()) {
        gyro::Vector v = parse_coords(coords, name, s.dim);
        if (!(v.norm() < s.radius)) {
          throw SceneError("point '" + name + "' is not inside the ball");
        }
        names.insert(name);
        s.points.emplace_back(name, std::move(v));
      }
    }
    if (doc.contains("random_points")) {
      const json& rp = doc.at("random_points");
      s.random_names = rp.at("names").get<std::vector<std::string>>();
      s.random_cap = rp.value("cap", 0.9);
      if (!(s.random_cap > 0.0 && s.random_cap < 1.0)) {
        throw SceneError("random_points.cap must lie in (0, 1)");
      }
      for (const std::string& n : s.random_names) {
        if (!names.insert(n).second) throw SceneError("point name '" + n + "' defined twice");
      }
    }

    TGrid grid;
    if (doc.contains("t_grid")) grid = parse_grid(doc.at("t_grid"));
    std::set<std::string> ids;
    for (const json& c : doc.at("constructions")) {
      Construction con;
      con.type = c.at("type").get<std::string>();
      con.id = c.value("id", con.type + "-" + std::to_string(s.constructions.size()));
      con.points = c.at("points").get<std::vector<std::string>>();
      con.grid = c.contains("t_grid") ? parse_grid(c.at("t_grid")) : grid;
      const auto it = arity().find(con.type);
      if (it == arity().end()) throw SceneError("unknown construction type '" + con.type + "'");
      if (con.points.size() != it->second) {
        throw SceneError("construction '" + con.id + "' needs " + std::to_string(it->second) +
                         " points");
      }
      for (const std::string& p : con.points) {
        if (!names.count(p)) throw SceneError("construction '" + con.id + "' refers to unknown point '" + p + "'");
      }
      if (!ids.insert(con.id).second) throw SceneError("duplicate construction id '" + con.id + "'");
      s.constructions.push_back(std::move(con));
    }
    return s;
  } catch (const json::exception& e) {
    throw SceneError(std::string("malformed scene: ") + e.what());
  } catch (const gyro::Error& e) {
    throw SceneError(std::string("malformed scene: ") + e.what());
  }
}

Scene load_scene(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SceneError("cannot open scene file '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw SceneError(std::string("scene is not valid JSON: ") + e.what());
  }
  return parse_scene(doc);
}

Figure build_figure(const Scene& scene, std::uint64_t seed, std::optional<gyro::ModelTag> to) {
  using namespace gyro;
  const BallParams params(scene.dim, scene.radius);
  const GyroModel model(scene.model, params);
  const double c = scene.radius;

  std::map<std::string, BallPoint> named;
  for (const auto& [name, v] : scene.points) named.emplace(name, BallPoint(params, v));
  if (!scene.random_names.empty()) {
    BallSampler sampler(params, seed, scene.random_cap);
    for (const std::string& n : scene.random_names) named.emplace(n, sampler.next());
  }

  Figure fig{scene.model, c, scene.dim, {}, {}};
  for (const auto& [name, p] : named) fig.points.emplace_back(name, p.coords());

  for (const Construction& con : scene.constructions) {
    std::vector<BallPoint> pts;
    for (const std::string& n : con.points) pts.push_back(named.at(n));
    const auto row = [&](double t, const Vector& x, double residual, bool boundary = false) {
      fig.rows.push_back({con.id, con.type, t, x, residual, boundary});
    };

    if (con.type == "gyroline") {
      const Gyroline line(model, pts[0], pts[1]);
      for (double t : con.grid.values()) {
        const BallPoint x = line.point(t);
        // The same gyroline traced from the other end.
        const BallPoint back = gyroline_point(model, pts[1], pts[0], 1.0 - t);
        row(t, x.coords(), model.subtract(x, back).norm());
      }
    } else if (con.type == "double-gyroline") {
      const Gyroline line(model, pts[0], pts[1]);
      for (double t : con.grid.values()) {
        const DoubleGyrolinePoint d = double_gyroline(line, t);
        row(t, d.point.coords(), d.theorem_residual);
      }
    } else if (con.type == "supporting-chord") {
      const SupportingChord sc = supporting_chord_points(model, pts[0], pts[1]);
      for (double t : con.grid.values()) {
        const BallPoint x = model.coadd_closed(pts[0], gyroline_point(model, pts[0], pts[1], t));
        const std::vector<Vector> trio{sc.p1.coords(), sc.p2.coords(), x.coords()};
        row(t, x.coords(), collinearity_residual(trio));
      }
    } else if (con.type == "parallelogram") {
      const Gyroparallelogram g = gyroparallelogram_fourth(model, pts[0], pts[1], pts[2]);
      const double res = std::max(g.diagonal_residual, g.addition_law_residual);
      int k = 0;
      for (const BallPoint* v : {&g.a, &g.b, &g.c, &g.d}) row(k++, v->coords(), res);
    } else if (con.type == "endpoints") {
      const Endpoints e = gyroline_endpoints(model, pts[0], pts[1]);
      row(0.0, e.e1, std::abs(e.e1.norm() - c) / c, true);
      row(1.0, e.e2, std::abs(e.e2.norm() - c) / c, true);
    }
  }

  if (to && *to != scene.model) {
    const auto carry = [&](const Vector& v) {
      const BallPoint p(params, v);
      return (*to == ModelTag::Einstein ? m_to_e(p) : e_to_m(p)).coords();
    };
    for (auto& [name, v] : fig.points) v = carry(v);
    for (FigureRow& r : fig.rows) {
      if (!r.boundary) r.x = carry(r.x);
    }
    fig.model = *to;
  }
  return fig;
}

void write_csv(const Figure& fig, std::ostream& out) {
  out << "construction_id,t";
  for (int i = 1; i <= fig.dim; ++i) out << ",x" << i;
  out << ",residual\n";
  for (const FigureRow& r : fig.rows) {
    out << r.construction_id << ',' << format_number(r.t);
    for (Eigen::Index i = 0; i < r.x.size(); ++i) out << ',' << format_number(r.x[i]);
    out << ',' << format_number(r.residual) << '\n';
  }
}

void write_json(const Figure& fig, std::ostream& out) {
  json doc;
  doc["model"] = std::string(gyro::to_string(fig.model));
  doc["radius"] = fig.radius;
  doc["dim"] = fig.dim;
  json points = json::object();
  for (const auto& [name, v] : fig.points) points[name] = to_json(v);
  doc["points"] = points;
  json rows = json::array();
  for (const FigureRow& r : fig.rows) {
    rows.push_back({{"construction_id", r.construction_id},
                    {"t", r.t},
                    {"x", to_json(r.x)},
                    {"residual", r.residual},
                    {"boundary", r.boundary}});
  }
  doc["rows"] = rows;
  out << doc.dump(2) << '\n';
}

namespace {

constexpr double kCanvas = 480.0;
constexpr double kScale = 200.0;

std::string px(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

void write_svg(const Figure& fig, std::ostream& out) {
  if (fig.dim != 2) {
    throw SvgDimensionError("SVG output needs a planar scene (dim = 2), got dim = " +
                            std::to_string(fig.dim));
  }
  static const char* const palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
  const double k = kScale / fig.radius;
  const auto sx = [&](double x) { return px(kCanvas / 2 + k * x); };
  const auto sy = [&](double y) { return px(kCanvas / 2 - k * y); };

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kCanvas
      << "\" height=\"" << kCanvas << "\" viewBox=\"0 0 " << kCanvas << ' ' << kCanvas << "\">\n"
      << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "  <circle cx=\"" << sx(0) << "\" cy=\"" << sy(0) << "\" r=\"" << px(kScale)
      << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n"
      << "  <text x=\"8\" y=\"20\" font-family=\"sans-serif\" font-size=\"12\">"
      << gyro::to_string(fig.model) << " model, c = " << format_number(fig.radius) << "</text>\n";

  std::size_t colour = 0;
  for (std::size_t i = 0; i < fig.rows.size();) {
    const std::string& id = fig.rows[i].construction_id;
    std::size_t j = i;
    while (j < fig.rows.size() && fig.rows[j].construction_id == id) ++j;
    const char* stroke = palette[colour++ % std::size(palette)];
    out << "  <g id=\"" << id << "\" stroke=\"" << stroke << "\" fill=\"none\">\n";
    if (fig.rows[i].boundary) {
      for (std::size_t r = i; r < j; ++r) {
        out << "    <rect x=\"" << px(kCanvas / 2 + k * fig.rows[r].x[0] - 4) << "\" y=\""
            << px(kCanvas / 2 - k * fig.rows[r].x[1] - 4) << "\" width=\"8\" height=\"8\"/>\n";
      }
    } else {
      const bool closed = fig.rows[i].kind == "parallelogram";
      out << "    <" << (closed ? "polygon" : "polyline") << " stroke-width=\"1.5\" points=\"";
      for (std::size_t r = i; r < j; ++r) {
        out << (r == i ? "" : " ") << sx(fig.rows[r].x[0]) << ',' << sy(fig.rows[r].x[1]);
      }
      out << "\"/>\n";
    }
    out << "  </g>\n";
    i = j;
  }
  for (const auto& [name, v] : fig.points) {
    out << "  <circle cx=\"" << sx(v[0]) << "\" cy=\"" << sy(v[1])
        << "\" r=\"3\" fill=\"black\"/>\n"
        << "  <text x=\"" << px(kCanvas / 2 + k * v[0] + 5) << "\" y=\""
        << px(kCanvas / 2 - k * v[1] - 5) << "\" font-family=\"sans-serif\" font-size=\"12\">"
        << name << "</text>\n";
  }
  out << "</svg>\n";
}

}  // namespace gyroball
