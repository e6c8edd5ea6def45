#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

namespace coadjoint {

using Vec3 = std::array<double, 3>;

/// Coadjoint orbit of SU(2) as the unit sphere, with the invariant area form
/// scaled so the total symplectic area is |m|. The point x corresponds to
/// nu(x) = |m| / (4 pi) * x in su(2)^* = R^3.
class SphereOrbit {
 public:
  /// Throws InvalidInput for m == 0.
  explicit SphereOrbit(std::int64_t m);

  std::int64_t m() const { return m_; }
  double total_area() const;
  /// omega = density * (area form of the unit sphere).
  double density() const;
  /// KKS form at y evaluated on tangent vectors u, v: density * <y, u x v>.
  double omega(const Vec3& y, const Vec3& u, const Vec3& v) const;

 private:
  std::int64_t m_;
};

/// g_t = exp(t A) in the maximal torus, acting on the sphere as a rotation
/// with angular velocity `angular_velocity`. A half-turn in SU(2) is a full
/// turn on the sphere, so |angular_velocity| = 2 pi * turns.
struct RotationLoop {
  Vec3 angular_velocity{0.0, 0.0, 0.0};
  int turns = 1;
  int resolution = 2048;

  /// Endpoint g_1 = (-I)^turns.
  int endpoint_sign() const { return turns % 2 == 0 ? 1 : -1; }
};

/// Loop in the Cartan (z) direction ending at (-I)^turns, oriented so the
/// Hamiltonian at the north pole is -m/2 * turns.
RotationLoop cartan_loop(const SphereOrbit& orbit, int turns = 1, int resolution = 2048);

/// f_A(x) = -nu(x)(A). Throws InvalidInput if |x| differs from 1 by more
/// than 1e-9.
double moment_hamiltonian(const SphereOrbit& orbit, const Vec3& generator, const Vec3& x);

struct ActionResult {
  /// Integral of omega over the cap bounded by the trajectory (0 for fixed points).
  double area_term = 0.0;
  /// Same, by product quadrature of the form itself.
  double area_quadrature = 0.0;
  /// Integral over [0,1] of f_t(psi_t(x)).
  double hamiltonian_term = 0.0;
  /// max - min of the Hamiltonian along the trajectory.
  double hamiltonian_spread = 0.0;
  std::complex<double> kappa;
  /// kappa computed with the complementary cap.
  std::complex<double> kappa_complementary;
  bool fixed_point = false;
};

/// exp(2 pi i (area - hamiltonian)) for the trajectory of x. Throws
/// InvalidInput when x is off the sphere or resolution < 16.
ActionResult action_around_loop(const SphereOrbit& orbit, const RotationLoop& loop, const Vec3& x);

struct SweepReport {
  std::vector<Vec3> points;
  std::vector<ActionResult> results;
  /// Mean of the computed kappas, renormalised to the unit circle.
  std::complex<double> kappa;
  double max_deviation = 0.0;
  double max_cap_deviation = 0.0;
  /// |integral of f omega| over the sphere.
  double normalization_residual = 0.0;
  /// |integral of omega - |m||.
  double total_area_residual = 0.0;
  double tolerance = 1e-6;
  bool within_tolerance = false;
};

/// Evaluates action_around_loop at `count` points on latitudes spaced
/// evenly from pole to pole (poles included). Throws InvalidInput for
/// count < 2.
SweepReport base_point_sweep(const SphereOrbit& orbit, const RotationLoop& loop, int count,
                             double tolerance = 1e-6);

/// Integral of f omega and of omega over the sphere, product quadrature
/// (Gauss-Legendre in latitude, trapezoid in longitude).
struct SphereQuadrature {
  double area = 0.0;
  double hamiltonian_moment = 0.0;
};
SphereQuadrature sphere_quadrature(const SphereOrbit& orbit, const RotationLoop& loop);

}  // namespace coadjoint
