#pragma once

#include "gyro/algebra.hpp"
#include "gyro/ball.hpp"
#include "gyro/barycentric.hpp"
#include "gyro/checks.hpp"
#include "gyro/einstein.hpp"
#include "gyro/error.hpp"
#include "gyro/geometry.hpp"
#include "gyro/gyration.hpp"
#include "gyro/isomorphism.hpp"
#include "gyro/linear.hpp"
#include "gyro/mobius.hpp"
#include "gyro/model.hpp"
