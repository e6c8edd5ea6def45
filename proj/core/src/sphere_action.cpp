#include "coadjoint/sphere_action.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss.hpp>

#include "coadjoint/errors.hpp"

namespace coadjoint {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kOnSphereTolerance = 1e-9;
constexpr double kFixedPointTolerance = 1e-12;

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Vec3 scale(const Vec3& a, double s) { return {a[0] * s, a[1] * s, a[2] * s}; }

Vec3 add(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }

double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

// Rodrigues rotation of v by angle about the unit axis u.
Vec3 rotate(const Vec3& v, const Vec3& u, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return add(add(scale(v, c), scale(cross(u, v), s)), scale(u, dot(u, v) * (1.0 - c)));
}

// Right-handed orthonormal frame (e1, e2, u).
std::pair<Vec3, Vec3> frame(const Vec3& u) {
  const Vec3 helper = std::abs(u[0]) < 0.9 ? Vec3{1.0, 0.0, 0.0} : Vec3{0.0, 1.0, 0.0};
  Vec3 e1 = cross(helper, u);
  e1 = scale(e1, 1.0 / norm(e1));
  return {e1, cross(u, e1)};
}

void check_on_sphere(const Vec3& x) {
  if (std::abs(norm(x) - 1.0) > kOnSphereTolerance)
    throw InvalidInput("point is off the unit sphere (|x| = " + std::to_string(norm(x)) + ")");
}

Vec3 loop_axis(const RotationLoop& loop) {
  const double speed = norm(loop.angular_velocity);
  if (loop.turns < 1) throw InvalidInput("loop: turns must be positive");
  if (std::abs(speed - kTwoPi * loop.turns) > 1e-9 * speed)
    throw InvalidInput("loop: |angular velocity| must be 2 pi * turns so that g_1 = +-I");
  return scale(loop.angular_velocity, 1.0 / speed);
}

// Integral over theta in [lo, hi], phi in [0, 2pi) of integrand(y) * omega(d_theta y, d_phi y),
// y(theta, phi) = cos(theta) u + sin(theta) (cos(phi) e1 + sin(phi) e2).
template <class F>
double cap_integral(const SphereOrbit& orbit, const Vec3& u, double lo, double hi, int phi_points,
                    F&& integrand) {
  const auto [e1, e2] = frame(u);
  const double h = kTwoPi / phi_points;
  auto ring = [&](double theta) {
    const double ct = std::cos(theta);
    const double st = std::sin(theta);
    double s = 0.0;
    for (int k = 0; k < phi_points; ++k) {
      const double phi = h * k;
      const Vec3 radial = add(scale(e1, std::cos(phi)), scale(e2, std::sin(phi)));
      const Vec3 tangent_phi = add(scale(e1, -std::sin(phi)), scale(e2, std::cos(phi)));
      const Vec3 y = add(scale(u, ct), scale(radial, st));
      const Vec3 dy_theta = add(scale(u, -st), scale(radial, ct));
      const Vec3 dy_phi = scale(tangent_phi, st);
      s += integrand(y) * orbit.omega(y, dy_theta, dy_phi);
    }
    return s * h;  // periodic trapezoid
  };
  return boost::math::quadrature::gauss<double, 30>::integrate(ring, lo, hi);
}

}  // namespace

SphereOrbit::SphereOrbit(std::int64_t m) : m_(m) {
  if (m == 0) throw InvalidInput("m: must be nonzero");
}

double SphereOrbit::total_area() const { return static_cast<double>(m_ < 0 ? -m_ : m_); }

double SphereOrbit::density() const { return total_area() / (4.0 * std::numbers::pi); }

double SphereOrbit::omega(const Vec3& y, const Vec3& u, const Vec3& v) const {
  return density() * dot(y, cross(u, v));
}

RotationLoop cartan_loop(const SphereOrbit& orbit, int turns, int resolution) {
  if (turns < 1) throw InvalidInput("turns: must be positive");
  const double sign = orbit.m() > 0 ? 1.0 : -1.0;
  return {{0.0, 0.0, sign * kTwoPi * turns}, turns, resolution};
}

double moment_hamiltonian(const SphereOrbit& orbit, const Vec3& generator, const Vec3& x) {
  check_on_sphere(x);
  return -orbit.density() * dot(generator, x);
}

ActionResult action_around_loop(const SphereOrbit& orbit, const RotationLoop& loop, const Vec3& x) {
  if (loop.resolution < 16) throw InvalidInput("resolution: must be at least 16");
  check_on_sphere(x);
  const Vec3 u = loop_axis(loop);
  const double total_angle = norm(loop.angular_velocity);
  const int n = loop.resolution;

  ActionResult r;
  // composite trapezoid in t
  double lo = 0.0;
  double hi = 0.0;
  double sum = 0.0;
  for (int k = 0; k <= n; ++k) {
    const double t = static_cast<double>(k) / n;
    const double f = moment_hamiltonian(orbit, loop.angular_velocity, rotate(x, u, total_angle * t));
    if (k == 0) lo = hi = f;
    lo = std::min(lo, f);
    hi = std::max(hi, f);
    sum += (k == 0 || k == n) ? 0.5 * f : f;
  }
  r.hamiltonian_term = sum / n;
  r.hamiltonian_spread = hi - lo;

  const double z0 = std::clamp(dot(x, u), -1.0, 1.0);
  const double total = orbit.total_area();
  const double winding = loop.turns;
  double area_complementary = 0.0;
  if (1.0 - std::abs(z0) < kFixedPointTolerance) {
    // constant curve: S is empty, or the whole sphere taken with reversed orientation
    r.fixed_point = true;
    r.area_term = 0.0;
    r.area_quadrature = 0.0;
    area_complementary = -total;
  } else {
    const double theta0 = std::acos(z0);
    auto one = [](const Vec3&) { return 1.0; };
    r.area_term = winding * orbit.density() * kTwoPi * (1.0 - z0);
    r.area_quadrature = winding * cap_integral(orbit, u, 0.0, theta0, n, one);
    area_complementary = -winding * cap_integral(orbit, u, theta0, std::numbers::pi, n, one);
  }
  r.kappa = std::polar(1.0, kTwoPi * (r.area_term - r.hamiltonian_term));
  r.kappa_complementary = std::polar(1.0, kTwoPi * (area_complementary - r.hamiltonian_term));
  return r;
}

SphereQuadrature sphere_quadrature(const SphereOrbit& orbit, const RotationLoop& loop) {
  const Vec3 u = loop_axis(loop);
  SphereQuadrature q;
  q.area = cap_integral(orbit, u, 0.0, std::numbers::pi, loop.resolution,
                        [](const Vec3&) { return 1.0; });
  q.hamiltonian_moment =
      cap_integral(orbit, u, 0.0, std::numbers::pi, loop.resolution, [&](const Vec3& y) {
        return -orbit.density() * dot(loop.angular_velocity, y);
      });
  return q;
}

SweepReport base_point_sweep(const SphereOrbit& orbit, const RotationLoop& loop, int count,
                             double tolerance) {
  if (count < 2) throw InvalidInput("points: must be at least 2");
  const Vec3 u = loop_axis(loop);
  const auto [e1, e2] = frame(u);
  constexpr double kGoldenAngle = 2.399963229728653;

  SweepReport rep;
  rep.tolerance = tolerance;
  std::complex<double> mean{0.0, 0.0};
  for (int k = 0; k < count; ++k) {
    const double theta = std::numbers::pi * k / (count - 1);
    const double phi = kGoldenAngle * k;
    Vec3 x = add(scale(u, std::cos(theta)),
                 scale(add(scale(e1, std::cos(phi)), scale(e2, std::sin(phi))), std::sin(theta)));
    x = scale(x, 1.0 / norm(x));
    auto res = action_around_loop(orbit, loop, x);
    mean += res.kappa;
    rep.max_cap_deviation = std::max(rep.max_cap_deviation, std::abs(res.kappa_complementary - res.kappa));
    rep.points.push_back(x);
    rep.results.push_back(res);
  }
  for (std::size_t i = 0; i < rep.results.size(); ++i)
    for (std::size_t j = i + 1; j < rep.results.size(); ++j)
      rep.max_deviation = std::max(rep.max_deviation, std::abs(rep.results[i].kappa - rep.results[j].kappa));
  rep.kappa = mean / std::abs(mean);

  const auto q = sphere_quadrature(orbit, loop);
  rep.normalization_residual = std::abs(q.hamiltonian_moment);
  rep.total_area_residual = std::abs(q.area - orbit.total_area());
  rep.within_tolerance = rep.max_deviation < tolerance;
  return rep;
}

}  // namespace coadjoint
