#include "kneser/skeleton_push.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

#include "kneser/error.hpp"
#include "kneser/parallel.hpp"

namespace kneser {

double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
Vec3 cross(const Vec3& a, const Vec3& b) { return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x}; }
double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

double PatchTriangle::area() const { return 0.5 * norm(cross(v[1] - v[0], v[2] - v[0])); }

Vec3 PatchTriangle::unit_normal() const {
  const Vec3 n = cross(v[1] - v[0], v[2] - v[0]);
  const double len = norm(n);
  return len > 0 ? n * (1.0 / len) : Vec3{};
}

double Patch::area() const {
  double a = 0;
  for (const auto& t : triangles) a += t.area();
  return a;
}

// ---------------------------------------------------------------------------
// patch v1

namespace {

std::string strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  return std::string(hash == std::string_view::npos ? line : line.substr(0, hash));
}

std::vector<std::string> words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

double parse_double(const std::string& s, int line_no) {
  double v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size() || !std::isfinite(v))
    throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": bad number '" + s + "'");
  return v;
}

}  // namespace

Patch parse_patch(std::string_view text) {
  std::vector<std::pair<int, std::vector<std::string>>> lines;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = std::min(text.find('\n', start), text.size());
    ++line_no;
    auto w = words(strip_comment(text.substr(start, end - start)));
    if (!w.empty()) lines.emplace_back(line_no, std::move(w));
    start = end + 1;
  }
  if (lines.size() < 2 || lines[0].second != std::vector<std::string>{"patch", "1"})
    throw Error(ErrorCode::Parse, "expected header 'patch 1'");
  const auto& count_line = lines[1].second;
  if (count_line.size() != 2 || count_line[0] != "triangles")
    throw Error(ErrorCode::Parse, "line " + std::to_string(lines[1].first) + ": expected 'triangles <n>'");
  long long n = 0;
  const auto& cs = count_line[1];
  const auto res = std::from_chars(cs.data(), cs.data() + cs.size(), n);
  if (res.ec != std::errc() || res.ptr != cs.data() + cs.size() || n < 0)
    throw Error(ErrorCode::Parse, "bad triangle count '" + cs + "'");
  if (static_cast<long long>(lines.size()) - 2 != n)
    throw Error(ErrorCode::Parse, "expected " + std::to_string(n) + " triangle lines, found " +
                                      std::to_string(lines.size() - 2));
  const auto config = ProjectionConfig::standard();
  Patch patch;
  for (std::size_t i = 2; i < lines.size(); ++i) {
    const auto& [no, w] = lines[i];
    if (w.size() != 9) throw Error(ErrorCode::Parse, "line " + std::to_string(no) + ": expected 9 numbers");
    PatchTriangle t;
    for (int k = 0; k < 3; ++k) {
      t.v[static_cast<std::size_t>(k)] = {parse_double(w[static_cast<std::size_t>(3 * k)], no),
                                          parse_double(w[static_cast<std::size_t>(3 * k + 1)], no),
                                          parse_double(w[static_cast<std::size_t>(3 * k + 2)], no)};
      if (!config.strictly_inside(t.v[static_cast<std::size_t>(k)]))
        throw Error(ErrorCode::Parse, "line " + std::to_string(no) + ": vertex outside the simplex");
    }
    patch.triangles.push_back(t);
  }
  return patch;
}

std::string format_patch(const Patch& patch) {
  std::string out = "patch 1\ntriangles " + std::to_string(patch.triangles.size()) + "\n";
  char buf[64];
  for (const auto& t : patch.triangles) {
    bool first = true;
    for (const auto& p : t.v)
      for (double c : {p.x, p.y, p.z}) {
        std::snprintf(buf, sizeof buf, "%.17g", c);
        if (!first) out += ' ';
        out += buf;
        first = false;
      }
    out += '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Configuration and constants

ProjectionConfig ProjectionConfig::standard() {
  ProjectionConfig c;
  const double s = 1.0 / std::sqrt(2.0);
  c.sigma = {Vec3{0.5, 0, -0.5 * s}, Vec3{-0.5, 0, -0.5 * s}, Vec3{0, 0.5, 0.5 * s}, Vec3{0, -0.5, 0.5 * s}};
  c.r = c.inradius() / 3.0;
  return c;
}

std::array<std::pair<Vec3, double>, 4> ProjectionConfig::faces() const {
  std::array<std::pair<Vec3, double>, 4> out;
  const Vec3 centroid = (sigma[0] + sigma[1] + sigma[2] + sigma[3]) * 0.25;
  for (std::size_t k = 0; k < 4; ++k) {
    const Vec3& a = sigma[(k + 1) % 4];
    const Vec3& b = sigma[(k + 2) % 4];
    const Vec3& c = sigma[(k + 3) % 4];
    Vec3 n = cross(b - a, c - a);
    n = n * (1.0 / norm(n));
    if (dot(n, centroid - a) > 0) n = n * -1.0;
    out[k] = {n, dot(n, a)};
  }
  return out;
}

double ProjectionConfig::inradius() const {
  const Vec3 centroid = (sigma[0] + sigma[1] + sigma[2] + sigma[3]) * 0.25;
  double best = std::numeric_limits<double>::infinity();
  for (const auto& [n, h] : faces()) best = std::min(best, h - dot(n, centroid));
  return best;
}

bool ProjectionConfig::strictly_inside(const Vec3& p) const {
  for (const auto& [n, h] : faces())
    if (dot(n, p) >= h) return false;
  return true;
}

Constants constants(const ProjectionConfig& config) {
  Constants c;
  c.r = config.r;
  const double cube = config.r * config.r * config.r;
  c.ball_coefficient = Rational(4, 3);
  // K = integral of 4 r^2 / rho^2 over B(0, 2r) = 4 r^2 * 4 pi * 2r.
  c.k_coefficient = Rational(4) * Rational(4) * Rational(2);
  c.nu0_exact = Rational(2) * (c.ball_coefficient + c.k_coefficient) / c.ball_coefficient;
  c.ball_volume = c.ball_coefficient.to_double() * std::numbers::pi * cube;
  c.k = c.k_coefficient.to_double() * std::numbers::pi * cube;
  c.nu0 = c.nu0_exact.to_double();
  return c;
}

double k_by_quadrature(double r) {
  using boost::math::quadrature::gauss_kronrod;
  const double R = 2 * r;
  // 2 pi * 2 * int_0^R dz int_0^sqrt(R^2 - z^2) 4 r^2 s / (s^2 + z^2) ds
  const auto inner = [&](double z) {
    const double top = std::sqrt(std::max(0.0, R * R - z * z));
    const double mid = std::min(z, top);
    const auto f = [&](double s) { return 4 * r * r * s / (s * s + z * z); };
    // Above s = z integrate in log s, where the integrand is smooth.
    const auto g = [&](double t) {
      const double s = std::exp(t);
      return f(s) * s;
    };
    const double upper = mid < top ? gauss_kronrod<double, 31>::integrate(g, std::log(mid), std::log(top), 10, 1e-9) : 0.0;
    return gauss_kronrod<double, 31>::integrate(f, 0.0, mid, 10, 1e-9) + upper;
  };
  // z = R w^2 tames the logarithmic singularity of the inner integral at z = 0.
  const auto outer = [&](double w) { return w > 0 ? inner(R * w * w) * 2 * R * w : 0.0; };
  return 4 * std::numbers::pi * gauss_kronrod<double, 31>::integrate(outer, 0.0, 1.0, 10, 1e-9);
}

// ---------------------------------------------------------------------------
// Projections

Vec3 radial_project(const ProjectionConfig& config, const Vec3& u, const Vec3& x) {
  const Vec3 d = x - u;
  const double rho = norm(d);
  if (rho == 0) throw Error(ErrorCode::CenterHit, "point coincides with the projection center");
  const double R = 2 * config.r;
  return rho < R ? u + d * (R / rho) : x;
}

Vec3 boundary_project(const ProjectionConfig& config, const Vec3& u, const Vec3& x) {
  const Vec3 d = x - u;
  if (norm(d) == 0) throw Error(ErrorCode::CenterHit, "point coincides with the projection center");
  double t = std::numeric_limits<double>::infinity();
  for (const auto& [n, h] : config.faces()) {
    const double rate = dot(n, d);
    if (rate > 0) t = std::min(t, (h - dot(n, u)) / rate);
  }
  return u + d * t;
}

double projection_jacobian(const ProjectionConfig& config, const Vec3& u, const Vec3& x, const Vec3& n) {
  const Vec3 d = x - u;
  const double rho = norm(d);
  const double R = 2 * config.r;
  if (rho >= R) return 1.0;
  return R * R * std::abs(dot(n, d)) / (rho * rho * rho);
}

double jacobian_bound(const ProjectionConfig& config, const Vec3& u, const Vec3& x) {
  const double q = 2 * config.r / norm(x - u);
  return q * q;
}

double distance_to_triangle(const Vec3& p, const PatchTriangle& t) {
  // Closest point by Voronoi region classification.
  const Vec3 &a = t.v[0], &b = t.v[1], &c = t.v[2];
  const Vec3 ab = b - a, ac = c - a, ap = p - a;
  const double d1 = dot(ab, ap), d2 = dot(ac, ap);
  if (d1 <= 0 && d2 <= 0) return norm(ap);
  const Vec3 bp = p - b;
  const double d3 = dot(ab, bp), d4 = dot(ac, bp);
  if (d3 >= 0 && d4 <= d3) return norm(bp);
  const double vc = d1 * d4 - d3 * d2;
  if (vc <= 0 && d1 >= 0 && d3 <= 0) return norm(p - (a + ab * (d1 / (d1 - d3))));
  const Vec3 cp = p - c;
  const double d5 = dot(ab, cp), d6 = dot(ac, cp);
  if (d6 >= 0 && d5 <= d6) return norm(cp);
  const double vb = d5 * d2 - d1 * d6;
  if (vb <= 0 && d2 >= 0 && d6 <= 0) return norm(p - (a + ac * (d2 / (d2 - d6))));
  const double va = d3 * d6 - d5 * d4;
  if (va <= 0 && (d4 - d3) >= 0 && (d5 - d6) >= 0)
    return norm(p - (b + (c - b) * ((d4 - d3) / ((d4 - d3) + (d5 - d6)))));
  const double denom = 1.0 / (va + vb + vc);
  return norm(p - (a + ab * (vb * denom) + ac * (vc * denom)));
}

namespace {

constexpr double kRelTol = 1e-4;
constexpr int kMaxLevel = 6;
constexpr double kOnSurface = 1e-12;

struct Rule {
  double a, b, c, w;
};

// Degree-5 seven-point rule on the triangle (barycentric points, weights sum to 1).
constexpr std::array<Rule, 7> kRule = {{
    {1.0 / 3, 1.0 / 3, 1.0 / 3, 0.225},
    {0.0597158717897698, 0.4701420641051151, 0.4701420641051151, 0.1323941527885062},
    {0.4701420641051151, 0.0597158717897698, 0.4701420641051151, 0.1323941527885062},
    {0.4701420641051151, 0.4701420641051151, 0.0597158717897698, 0.1323941527885062},
    {0.7974269853530873, 0.1012865073234563, 0.1012865073234563, 0.1259391805448271},
    {0.1012865073234563, 0.7974269853530873, 0.1012865073234563, 0.1259391805448271},
    {0.1012865073234563, 0.1012865073234563, 0.7974269853530873, 0.1259391805448271},
}};

struct Sums {
  double projected = 0, outside = 0, bound = 0;
  std::size_t points = 0, violations = 0;

  Sums& operator+=(const Sums& o) {
    projected += o.projected;
    outside += o.outside;
    bound += o.bound;
    points += o.points;
    violations += o.violations;
    return *this;
  }
};

std::array<PatchTriangle, 4> split(const PatchTriangle& t) {
  const Vec3 m01 = (t.v[0] + t.v[1]) * 0.5, m12 = (t.v[1] + t.v[2]) * 0.5, m02 = (t.v[0] + t.v[2]) * 0.5;
  return {PatchTriangle{{t.v[0], m01, m02}}, PatchTriangle{{m01, t.v[1], m12}}, PatchTriangle{{m02, m12, t.v[2]}},
          PatchTriangle{{m01, m12, m02}}};
}

struct RadialIntegrand {
  const ProjectionConfig& config;
  const Vec3& u;
  Vec3 normal;

  Sums rule(const PatchTriangle& t) const {
    Sums s;
    const double area = t.area();
    const double R = 2 * config.r;
    for (const auto& q : kRule) {
      const Vec3 x = t.v[0] * q.a + t.v[1] * q.b + t.v[2] * q.c;
      const double rho = norm(x - u);
      if (rho >= R) {
        s.projected += q.w * area;
        s.outside += q.w * area;
        continue;
      }
      const double j = projection_jacobian(config, u, x, normal);
      const double bound = jacobian_bound(config, u, x);
      ++s.points;
      if (j > bound * (1 + 1e-12)) ++s.violations;
      s.projected += q.w * area * j;
      s.bound += q.w * area * bound;
    }
    return s;
  }

  Sums integrate(const PatchTriangle& t, const Sums& coarse, int level) const {
    const double R = 2 * config.r;
    Sums fine;
    std::array<Sums, 4> parts;
    const auto children = split(t);
    for (std::size_t k = 0; k < 4; ++k) {
      if (distance_to_triangle(u, children[k]) >= R) {
        const double area = children[k].area();
        parts[k].projected = parts[k].outside = area;
      } else {
        parts[k] = rule(children[k]);
      }
      fine.projected += parts[k].projected;
      fine.bound += parts[k].bound;
    }
    const bool converged = std::abs(fine.projected - coarse.projected) <= kRelTol * std::abs(fine.projected) &&
                           std::abs(fine.bound - coarse.bound) <= kRelTol * std::abs(fine.bound);
    if (converged || level >= kMaxLevel) {
      Sums out;
      for (const auto& p : parts) out += p;
      return out;
    }
    Sums out;
    for (std::size_t k = 0; k < 4; ++k) {
      if (distance_to_triangle(u, children[k]) >= R)
        out += parts[k];
      else
        out += integrate(children[k], parts[k], level + 1);
    }
    return out;
  }
};

}  // namespace

ProjectedArea projected_area(const ProjectionConfig& config, const Vec3& u, const Patch& patch) {
  ProjectedArea out;
  const double R = 2 * config.r;
  for (const auto& t : patch.triangles) {
    const double area = t.area();
    if (area == 0) continue;
    const double d = distance_to_triangle(u, t);
    if (d < kOnSurface) throw Error(ErrorCode::CenterOnSurface, "projection center lies on the patch");
    if (d >= R) {
      out.projected += area;
      out.outside += area;
      continue;
    }
    RadialIntegrand f{config, u, t.unit_normal()};
    const Sums s = f.integrate(t, f.rule(t), 1);
    out.projected += s.projected;
    out.outside += s.outside;
    out.bound_integral += s.bound;
    out.points += s.points;
    out.violations += s.violations;
  }
  return out;
}

namespace {

struct BoundaryIntegrand {
  const ProjectionConfig& config;
  const Vec3& u;
  Vec3 normal;

  double value(const Vec3& x) const {
    const Vec3 d = x - u;
    const double rho = norm(d);
    const Vec3 w = d * (1.0 / rho);
    double t = std::numeric_limits<double>::infinity();
    Vec3 face_normal;
    for (const auto& [n, h] : config.faces()) {
      const double rate = dot(n, d);
      if (rate <= 0) continue;
      const double tk = (h - dot(n, u)) / rate;
      if (tk < t) {
        t = tk;
        face_normal = n;
      }
    }
    return t * t * std::abs(dot(normal, w)) / std::abs(dot(face_normal, w));
  }

  double rule(const PatchTriangle& tri) const {
    double s = 0;
    const double area = tri.area();
    for (const auto& q : kRule) s += q.w * area * value(tri.v[0] * q.a + tri.v[1] * q.b + tri.v[2] * q.c);
    return s;
  }

  double integrate(const PatchTriangle& tri, double coarse, int level) const {
    const auto children = split(tri);
    std::array<double, 4> parts{};
    double fine = 0;
    for (std::size_t k = 0; k < 4; ++k) fine += parts[k] = rule(children[k]);
    if (std::abs(fine - coarse) <= kRelTol * std::abs(fine) || level >= kMaxLevel) return fine;
    double out = 0;
    for (std::size_t k = 0; k < 4; ++k) out += integrate(children[k], parts[k], level + 1);
    return out;
  }
};

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

double unit_interval(std::uint64_t h) { return static_cast<double>(h >> 11) * 0x1.0p-53; }

}  // namespace

double boundary_projected_area(const ProjectionConfig& config, const Vec3& u, const Patch& patch) {
  double total = 0;
  for (const auto& t : patch.triangles) {
    if (t.area() == 0) continue;
    if (distance_to_triangle(u, t) < kOnSurface)
      throw Error(ErrorCode::CenterOnSurface, "projection center lies on the patch");
    BoundaryIntegrand f{config, u, t.unit_normal()};
    total += f.integrate(t, f.rule(t), 1);
  }
  return total;
}

Vec3 sample_ball(std::uint64_t seed, std::uint64_t index, double r) {
  const std::uint64_t key = splitmix64(seed ^ splitmix64(index));
  for (std::uint64_t attempt = 0;; ++attempt) {
    const std::uint64_t base = splitmix64(key + 3 * attempt);
    const Vec3 p{2 * unit_interval(splitmix64(base)) - 1, 2 * unit_interval(splitmix64(base + 1)) - 1,
                 2 * unit_interval(splitmix64(base + 2)) - 1};
    if (dot(p, p) < 1) return p * r;
  }
}

DilatationSamples sample_dilatations(const ProjectionConfig& config, const Patch& patch) {
  const double area = patch.area();
  if (!(area > 0)) throw Error(ErrorCode::ZeroArea, "patch has zero area");
  if (config.samples < 1) throw Error(ErrorCode::InvalidArgument, "at least one sample is required");
  DilatationSamples out;
  out.ratio.assign(config.samples, 0.0);
  std::vector<std::size_t> checks(config.samples, 0), violations(config.samples, 0);
  parallel_chunks(config.samples, 64, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const Vec3 u = sample_ball(config.seed, i, config.r);
      try {
        const auto p = projected_area(config, u, patch);
        out.ratio[i] = p.projected / area;
        checks[i] = p.points;
        violations[i] = p.violations;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::CenterOnSurface) throw;
        out.ratio[i] = std::numeric_limits<double>::infinity();
      }
    }
  });
  for (std::size_t i = 0; i < config.samples; ++i) {
    out.jacobian_checks += checks[i];
    out.jacobian_violations += violations[i];
  }
  return out;
}

ProjectionEstimate estimate_from_samples(const ProjectionConfig& config, const DilatationSamples& samples, double nu) {
  const auto c = constants(config);
  ProjectionEstimate e;
  e.nu = nu;
  e.samples = samples.ratio.size();
  e.bad = static_cast<std::size_t>(
      std::count_if(samples.ratio.begin(), samples.ratio.end(), [&](double x) { return x > nu; }));
  const double n = static_cast<double>(e.samples);
  const double p = static_cast<double>(e.bad) / n;
  e.estimate = c.ball_volume * p;
  e.stderr_ = c.ball_volume * std::sqrt(p * (1 - p) / n);
  e.bound = (c.ball_volume + c.k) / nu;
  e.pass = e.estimate - 3 * e.stderr_ <= e.bound;
  e.jacobian_checks = samples.jacobian_checks;
  e.jacobian_violations = samples.jacobian_violations;
  return e;
}

ProjectionEstimate bad_set_volume(const ProjectionConfig& config, const Patch& patch, double nu) {
  return estimate_from_samples(config, sample_dilatations(config, patch), nu);
}

GoodCenter find_good_center(const ProjectionConfig& config, const Patch& patch, std::uint64_t max_attempts) {
  const double area = patch.area();
  if (!(area > 0)) throw Error(ErrorCode::ZeroArea, "patch has zero area");
  const double nu0 = constants(config).nu0;
  for (std::uint64_t i = 0; i < max_attempts; ++i) {
    const Vec3 u = sample_ball(config.seed, i, config.r);
    double ratio = 0;
    try {
      ratio = projected_area(config, u, patch).projected / area;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::CenterOnSurface) throw;
      continue;
    }
    if (ratio <= nu0) return {u, i + 1, ratio, boundary_projected_area(config, u, patch) / area};
  }
  throw Error(ErrorCode::SampleBudgetExhausted,
              "no good center among " + std::to_string(max_attempts) + " samples");
}

// ---------------------------------------------------------------------------
// Collapse

namespace {

using Edge = std::pair<int, int>;

Edge edge_of(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

class Classes {
 public:
  int find(int x) {
    auto it = parent_.find(x);
    if (it == parent_.end() || it->second == x) return x;
    const int root = find(it->second);
    parent_[x] = root;
    return root;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::map<int, int> parent_;
};

}  // namespace

void check_sphere(const SphereMesh& mesh) {
  if (mesh.triangles.empty()) throw Error(ErrorCode::NotASphere, "empty mesh");
  std::map<Edge, std::vector<int>> edges;
  std::map<int, std::vector<int>> star;
  for (std::size_t i = 0; i < mesh.triangles.size(); ++i) {
    const auto& t = mesh.triangles[i];
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2])
      throw Error(ErrorCode::NotASphere, "triangle " + std::to_string(i) + " repeats a vertex");
    for (int k = 0; k < 3; ++k) {
      edges[edge_of(t[static_cast<std::size_t>(k)], t[static_cast<std::size_t>((k + 1) % 3)])].push_back(
          static_cast<int>(i));
      star[t[static_cast<std::size_t>(k)]].push_back(static_cast<int>(i));
    }
  }
  for (const auto& [e, tris] : edges)
    if (tris.size() != 2)
      throw Error(ErrorCode::NotASphere, "edge (" + std::to_string(e.first) + "," + std::to_string(e.second) +
                                             ") lies on " + std::to_string(tris.size()) + " triangles");
  // Vertex links must be single cycles.
  for (const auto& [v, tris] : star) {
    Classes link;
    std::set<int> nodes;
    for (int ti : tris) {
      const auto& t = mesh.triangles[static_cast<std::size_t>(ti)];
      std::array<int, 2> others{};
      for (int k = 0, n = 0; k < 3; ++k)
        if (t[static_cast<std::size_t>(k)] != v) others[static_cast<std::size_t>(n++)] = t[static_cast<std::size_t>(k)];
      link.unite(others[0], others[1]);
      nodes.insert(others[0]);
      nodes.insert(others[1]);
    }
    const int root = link.find(*nodes.begin());
    for (int x : nodes)
      if (link.find(x) != root) throw Error(ErrorCode::NotASphere, "vertex " + std::to_string(v) + " is pinched");
  }
  Classes comp;
  for (const auto& [e, tris] : edges) comp.unite(tris[0], tris[1]);
  for (std::size_t i = 0; i < mesh.triangles.size(); ++i)
    if (comp.find(static_cast<int>(i)) != 0) throw Error(ErrorCode::NotASphere, "mesh is disconnected");
  const long long chi = static_cast<long long>(star.size()) - static_cast<long long>(edges.size()) +
                        static_cast<long long>(mesh.triangles.size());
  if (chi != 2) throw Error(ErrorCode::NotASphere, "Euler characteristic " + std::to_string(chi));
}

std::vector<Generator> collapse_extract(const SphereMesh& mesh, const std::vector<int>& labels) {
  if (labels.size() != mesh.triangles.size())
    throw Error(ErrorCode::InconsistentLabels, std::to_string(labels.size()) + " labels for " +
                                                   std::to_string(mesh.triangles.size()) + " triangles");
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] < kDegenerate)
      throw Error(ErrorCode::InconsistentLabels, "triangle " + std::to_string(i) + " has an invalid label");
  check_sphere(mesh);

  Classes vertices;
  for (std::size_t i = 0; i < mesh.triangles.size(); ++i)
    if (labels[i] == kDegenerate) {
      const auto& t = mesh.triangles[i];
      vertices.unite(t[0], t[1]);
      vertices.unite(t[0], t[2]);
    }

  // Nondegenerate triangles sharing a nondegenerate quotient edge are joined.
  std::map<Edge, std::vector<int>> by_edge;
  for (std::size_t i = 0; i < mesh.triangles.size(); ++i) {
    if (labels[i] == kDegenerate) continue;
    const auto& t = mesh.triangles[i];
    for (int k = 0; k < 3; ++k) {
      const int a = vertices.find(t[static_cast<std::size_t>(k)]);
      const int b = vertices.find(t[static_cast<std::size_t>((k + 1) % 3)]);
      if (a != b) by_edge[edge_of(a, b)].push_back(static_cast<int>(i));
    }
  }
  Classes groups;
  for (const auto& [e, tris] : by_edge)
    for (int t : tris) groups.unite(tris.front(), t);

  std::map<int, std::size_t> slot;
  std::vector<Generator> out;
  for (std::size_t i = 0; i < mesh.triangles.size(); ++i) {
    if (labels[i] == kDegenerate) continue;
    const int root = groups.find(static_cast<int>(i));
    auto [it, fresh] = slot.emplace(root, out.size());
    if (fresh) out.emplace_back();
    out[it->second].triangles.push_back(static_cast<int>(i));
  }
  return out;
}

}  // namespace kneser
