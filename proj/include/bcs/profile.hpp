#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "bcs/bench.hpp"

namespace bcs {

struct ProfilePoint {
  std::string combo;
  double r = 1.0;
  double p = 0.0;

  bool operator==(const ProfilePoint&) const = default;
};

/// Times below this are treated as this, so instant runs still give finite
/// ratios.
inline constexpr double kMinProfileSeconds = 1e-9;

/// Performance profile over the bench records: for each combination, p(r) is
/// the fraction of graphs on which its total time is within r times the best
/// combination's. Every combination gets a point at r = 1 followed by one per
/// distinct ratio above 1, ascending. Combinations keep their first-seen
/// order. Throws std::invalid_argument naming every missing graph/combo cell,
/// or if fewer than two combinations are present.
std::vector<ProfilePoint> performance_profile(std::span<const BenchRecord> records);

/// combo,r,p
void write_profile_csv(std::ostream& os, std::span<const ProfilePoint> points);

}  // namespace bcs
