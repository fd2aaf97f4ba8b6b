#pragma once

#include <string_view>
#include <vector>

#include "gyro/algebra.hpp"
#include "gyro/model.hpp"

namespace gyro {

// Property suites beyond the gyrogroup identities. Each check reports the
// largest residual over options.samples random configurations. Geometry
// residuals pass below 100 * rel_tol (scaled by c where they carry length),
// barycentric and isomorphism residuals below 10 * rel_tol. The line-element
// check compares a finite difference and passes below 1e-3.

std::vector<IdentityReport> geometry_checks(const GyroModel& model, const SuiteOptions& options);
std::vector<IdentityReport> barycentric_checks(const BallParams& params,
                                               const SuiteOptions& options);
std::vector<IdentityReport> isomorphism_checks(const BallParams& params,
                                               const SuiteOptions& options);

/// Resolves a --suite selector: any identity selector, "geometry",
/// "barycentric", "isomorphism", "broken-model" (the gyrogroup identities on
/// a deliberately wrong addition), or "all" (identities plus the three
/// property suites). Throws UnknownIdentity otherwise.
std::vector<IdentityReport> run_check_suite(const GyroModel& model, std::string_view selector,
                                            const SuiteOptions& options);

}  // namespace gyro
