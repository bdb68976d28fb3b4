#include "yamabe/sampling.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "yamabe/errors.hpp"

namespace yamabe {

namespace {

// Portable uniform in [0, 1): the standard distributions are
// implementation-defined, the engine output is not.
double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct LexLess {
  bool operator()(const Vector& a, const Vector& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

}  // namespace

std::vector<Vector> sample_points(const Box& box, int resolution, int random_count,
                                  std::uint64_t seed, double margin) {
  if (resolution < 2) {
    throw GeometryError(ErrorKind::kInvalidArgument, "grid resolution must be >= 2");
  }
  if (random_count < 0) {
    throw GeometryError(ErrorKind::kInvalidArgument, "random sample count must be >= 0");
  }
  const Box inner = box.shrunk(margin);
  const int dim = inner.dim();

  std::vector<Vector> out;
  std::set<Vector, LexLess> seen;
  auto push = [&](const Vector& u) {
    if (seen.insert(u).second) out.push_back(u);
  };

  std::vector<int> idx(dim, 0);
  while (true) {
    Vector u(dim);
    for (int i = 0; i < dim; ++i) {
      const double t = static_cast<double>(idx[i]) / (resolution - 1);
      u[i] = inner.lower[i] + t * (inner.upper[i] - inner.lower[i]);
    }
    push(u);
    int axis = dim - 1;
    while (axis >= 0 && ++idx[axis] == resolution) idx[axis--] = 0;
    if (axis < 0) break;
  }

  std::mt19937_64 rng(seed);
  for (int k = 0; k < random_count; ++k) {
    Vector u(dim);
    for (int i = 0; i < dim; ++i) {
      u[i] = inner.lower[i] + unit_uniform(rng) * (inner.upper[i] - inner.lower[i]);
    }
    push(u);
  }
  return out;
}

}  // namespace yamabe
