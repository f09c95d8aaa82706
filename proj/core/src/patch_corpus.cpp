#include "kneser/patch_corpus.hpp"

#include <cmath>
#include <map>
#include <numbers>

#include "kneser/error.hpp"

namespace kneser {

Patch icosphere(const Vec3& center, double radius, int subdivisions) {
  if (radius <= 0 || subdivisions < 0) throw Error(ErrorCode::InvalidArgument, "bad icosphere parameters");
  const double g = (1 + std::sqrt(5.0)) / 2;
  std::vector<Vec3> v = {{-1, g, 0}, {1, g, 0}, {-1, -g, 0}, {1, -g, 0}, {0, -1, g}, {0, 1, g},
                         {0, -1, -g}, {0, 1, -g}, {g, 0, -1}, {g, 0, 1}, {-g, 0, -1}, {-g, 0, 1}};
  for (auto& p : v) p = p * (1.0 / norm(p));
  std::vector<std::array<int, 3>> f = {{0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
                                       {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
                                       {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
                                       {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};
  for (int level = 0; level < subdivisions; ++level) {
    std::map<std::pair<int, int>, int> mid;
    const auto midpoint = [&](int a, int b) {
      const auto key = std::minmax(a, b);
      auto it = mid.find(key);
      if (it != mid.end()) return it->second;
      const Vec3 m = (v[static_cast<std::size_t>(a)] + v[static_cast<std::size_t>(b)]) * 0.5;
      v.push_back(m * (1.0 / norm(m)));
      const int id = static_cast<int>(v.size()) - 1;
      mid.emplace(key, id);
      return id;
    };
    std::vector<std::array<int, 3>> next;
    for (const auto& t : f) {
      const int a = midpoint(t[0], t[1]), b = midpoint(t[1], t[2]), c = midpoint(t[2], t[0]);
      next.push_back({t[0], a, c});
      next.push_back({t[1], b, a});
      next.push_back({t[2], c, b});
      next.push_back({a, b, c});
    }
    f = std::move(next);
  }
  Patch out;
  for (const auto& t : f)
    out.triangles.push_back({{center + v[static_cast<std::size_t>(t[0])] * radius,
                              center + v[static_cast<std::size_t>(t[1])] * radius,
                              center + v[static_cast<std::size_t>(t[2])] * radius}});
  return out;
}

namespace {

template <class Height>
Patch grid(double half_width, int n, Height height) {
  if (n < 1 || half_width <= 0) throw Error(ErrorCode::InvalidArgument, "bad grid parameters");
  const auto at = [&](int i, int j) {
    const double x = -half_width + 2 * half_width * i / n;
    const double y = -half_width + 2 * half_width * j / n;
    return Vec3{x, y, height(x, y)};
  };
  Patch out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      out.triangles.push_back({{at(i, j), at(i + 1, j), at(i + 1, j + 1)}});
      out.triangles.push_back({{at(i, j), at(i + 1, j + 1), at(i, j + 1)}});
    }
  return out;
}

}  // namespace

Patch flat_square(double half_width, double height, int n) {
  return grid(half_width, n, [&](double, double) { return height; });
}

Patch wavy_sheet(double half_width, double amplitude, int n) {
  const double k = std::numbers::pi / half_width;
  return grid(half_width, n, [&](double x, double y) { return amplitude * std::sin(2 * k * x) * std::sin(k * y); });
}

Patch corner_patch() {
  const auto config = ProjectionConfig::standard();
  const Vec3 apex = config.sigma[0];
  const Vec3 toward = config.sigma[1] - apex, side = config.sigma[2] - apex;
  const Vec3 base = apex + (config.sigma[3] - apex) * 0.05;
  return {{PatchTriangle{{base + toward * 0.05 + side * 0.05, base + toward * 0.15 + side * 0.05,
                          base + toward * 0.05 + side * 0.15}}}};
}

std::vector<std::pair<std::string, Patch>> corpus_patches() {
  const double r = ProjectionConfig::standard().r;
  return {
      {"sphere", icosphere({0, 0, 0}, 1.5 * r, 2)},
      {"small_sphere", icosphere({0.2 * r, 0, 0}, 0.3 * r, 1)},
      {"tiny_sphere", icosphere({0.3 * r, -0.2 * r, 0.1 * r}, 0.12 * r, 1)},
      {"offset_sphere", icosphere({0, 0.5 * r, 0.5 * r}, 1.2 * r, 2)},
      {"square", flat_square(2 * r, 0.1 * r, 8)},
      {"wavy", wavy_sheet(2 * r, 0.5 * r, 12)},
      {"corner", corner_patch()},
  };
}

LabelledSphere two_sphere_instance(int n) {
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "ring size must be at least 3");
  // Vertices: 0 top apex, 1..n upper ring, n+1..2n lower ring, 2n+1 bottom apex.
  LabelledSphere out;
  const int top = 0, bottom = 2 * n + 1;
  const auto upper = [&](int i) { return 1 + (i % n); };
  const auto lower = [&](int i) { return n + 1 + (i % n); };
  for (int i = 0; i < n; ++i) {
    out.mesh.triangles.push_back({top, upper(i), upper(i + 1)});
    out.labels.push_back(0);
  }
  for (int i = 0; i < n; ++i) {
    out.mesh.triangles.push_back({upper(i), lower(i), lower(i + 1)});
    out.mesh.triangles.push_back({upper(i), lower(i + 1), upper(i + 1)});
    out.labels.push_back(kDegenerate);
    out.labels.push_back(kDegenerate);
  }
  for (int i = 0; i < n; ++i) {
    out.mesh.triangles.push_back({bottom, lower(i + 1), lower(i)});
    out.labels.push_back(1);
  }
  return out;
}

}  // namespace kneser
