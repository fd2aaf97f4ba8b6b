#include "format.hpp"

#include <charconv>
#include <stdexcept>
#include <system_error>

namespace gyroball {

std::string format_number(double x) {
  if (x == 0.0) x = 0.0;
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

nlohmann::json to_json(const gyro::Vector& v) {
  nlohmann::json arr = nlohmann::json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v[i] == 0.0 ? 0.0 : v[i]);
  return arr;
}

gyro::Vector parse_point_literal(const std::string& text) {
  std::vector<double> values;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string piece = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    const char* first = piece.data();
    const char* last = piece.data() + piece.size();
    while (first < last && *first == ' ') ++first;
    while (last > first && last[-1] == ' ') --last;
    if (first < last && *first == '+') ++first;
    double value = 0.0;
    const auto res = std::from_chars(first, last, value);
    if (first == last || res.ec != std::errc() || res.ptr != last) {
      throw std::invalid_argument("malformed point literal '" + text + "'");
    }
    values.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  gyro::Vector v(static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) v[static_cast<Eigen::Index>(i)] = values[i];
  return v;
}

}  // namespace gyroball
