#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gyro/ball.hpp"
#include "gyro/gyration.hpp"
#include "gyro/model.hpp"

namespace gyro {

/// gyr[u,v]w = -(u (+) v) (+) (u (+) (v (+) w)), straight from the operation table.
BallPoint gyr_definitional(const OperationTable& ops, const BallPoint& u, const BallPoint& v,
                           const BallPoint& w);

/// The definitional composition applied to (c/2) e_j, rescaled into matrix columns.
GyrationMap gyration_definitional(const OperationTable& ops, const BallPoint& u,
                                  const BallPoint& v);

/// a [+] b = a (+) gyr[a, -b] b, with the gyration taken definitionally.
BallPoint coadd_definitional(const OperationTable& ops, const BallPoint& a, const BallPoint& b);

/// a [-] b = a (-) gyr[a, b] b, using the table's own gyration.
BallPoint cosub(const OperationTable& ops, const BallPoint& a, const BallPoint& b);

/// Unique x with a (+) x = b, namely -a (+) b.
BallPoint solve_left(const OperationTable& ops, const BallPoint& a, const BallPoint& b);

/// Unique x with x (+) a = b, namely b [-] a.
BallPoint solve_right(const OperationTable& ops, const BallPoint& a, const BallPoint& b);

enum class Identity {
  LeftIdentity,
  RightIdentity,
  LeftInverse,
  LeftGyroassociativity,
  RightGyroassociativity,
  GyrationAutomorphism,
  LeftLoop,
  RightLoop,
  Gyrocommutativity,
  GyrationIsometry,
  GyrationInverse,
  TrivialGyration,
  AutomorphicInverse,
  LeftCancellation,
  RightCancellation,
  DualRightCancellation,
  CoadditionDifference,
  CooperationIdentity,
  TwoSum,
  CooperationCommutativity,
  ScalarDistributive,
  ScalarAssociative,
  Monodistributive,
};

std::string_view to_string(Identity id) noexcept;
std::span<const Identity> all_identities();

/// Expands a selector into identities. Accepts an identity name, "all",
/// "gyrogroup", "cancellation", "cooperation" or "scalar"; otherwise throws
/// UnknownIdentity.
std::vector<Identity> select_identities(std::string_view selector);

struct IdentityReport {
  std::string name;
  std::size_t samples = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool passed = true;
  /// Samples whose evaluation threw (counted as failures).
  std::size_t errors = 0;
  /// Samples outside the operation's domain (e.g. an order-k coaddition
  /// that leaves the ball); excluded from max_residual.
  std::size_t skipped = 0;
  std::vector<BallPoint> worst_inputs;
};

struct SuiteOptions {
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  double radius_cap = 0.9;
  TolerancePolicy policy{};
  /// Worker threads; 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Evaluates each identity on `samples` random inputs. Point identities use
/// |lhs (-) rhs| and pass below rel_tol * c; map identities use the largest
/// entry difference and pass below rel_tol. Deterministic for a fixed seed
/// regardless of thread count.
std::vector<IdentityReport> verify_identity_suite(const OperationTable& ops,
                                                  std::span<const Identity> identities,
                                                  const SuiteOptions& options);

std::vector<IdentityReport> verify_identity_suite(const OperationTable& ops,
                                                  std::string_view selector,
                                                  const SuiteOptions& options);

/// Runs fn(i) for i in [0, count) over `threads` workers (0 = hardware).
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn);

}  // namespace gyro
