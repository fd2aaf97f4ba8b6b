#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "gyro/ball.hpp"

namespace gyroball {

/// Shortest decimal that reads back to the same double; "-0" prints as "0".
std::string format_number(double x);

nlohmann::json to_json(const gyro::Vector& v);

/// Parses "x1,x2,...,xn". Throws std::invalid_argument on anything else.
gyro::Vector parse_point_literal(const std::string& text);

}  // namespace gyroball
