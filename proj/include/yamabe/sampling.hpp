#pragma once

#include <cstdint>
#include <vector>

#include "yamabe/immersion.hpp"

namespace yamabe {

inline constexpr double kSampleMargin = 1e-3;

/// Tensor grid with `resolution` nodes per axis followed by `random_count`
/// uniform points, both on the box shrunk by `margin`. Exact duplicates are
/// dropped, keeping the first occurrence. Grid order is lexicographic with the
/// first axis slowest. The random stream depends only on `seed`.
std::vector<Vector> sample_points(const Box& box, int resolution, int random_count,
                                  std::uint64_t seed, double margin = kSampleMargin);

}  // namespace yamabe
