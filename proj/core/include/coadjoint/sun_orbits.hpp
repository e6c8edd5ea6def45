#pragma once

#include <cstdint>
#include <vector>

#include "coadjoint/center.hpp"
#include "coadjoint/root_system.hpp"

namespace coadjoint {

/// Coadjoint orbit of SU(n) in block form.
///
/// partition = (n_1 <= ... <= n_k) sums to n - 1; the stabiliser is
/// S(U(n_1) x ... x U(n_k) x U(1)), the trailing block carrying
/// coefficient 0. Lambda(A_1, ..., A_k) = prod det(A_j)^{m_j}.
struct SunOrbitSpec {
  int n = 2;
  std::vector<int> partition;
  std::vector<std::int64_t> m;

  /// Throws InvalidInput describing the first violated constraint.
  void validate() const;
  /// Block sizes including the trailing 1.
  std::vector<int> blocks() const;
  /// sum_j n_j m_j; throws std::overflow_error if it does not fit.
  std::int64_t q_dot_m() const;
};

/// kappa at z = e^{2 pi i a / n} I: z^{q.m}, i.e. phase a (q.m) / n mod 1.
RootOfUnity kappa_closed_form(const SunOrbitSpec& spec, std::int64_t a);

struct SunBound {
  std::int64_t q_dot_m = 0;
  std::int64_t gcd = 0;
  /// n / gcd(q.m, n): size of the image of z -> z^{q.m} on the center.
  std::int64_t bound = 1;
  /// gcd(q.m, n) == 1, i.e. the bound equals n.
  bool coprime = false;
};

SunBound pi1_bound_sun(const SunOrbitSpec& spec);

/// Weight on A_{n-1} with the given block structure and character:
/// eta = -sum_r (m_r - m_{r+1}) varpi_{s_r}, s_r = n_1 + ... + n_r,
/// m_{k+1} = 0.
RationalWeight to_weight(const SunOrbitSpec& spec);

/// Center element of SU(n) equal to e^{2 pi i a / n} I, i.e. the class of
/// the coweight -a varpi^v_1. cg must be the center of A_{n-1}.
CenterElement sun_center_element(const CenterGroup& cg, std::int64_t a);

/// Nondecreasing partitions of total into positive parts, lexicographic.
std::vector<std::vector<int>> nondecreasing_partitions(int total);

/// Every spec with n in [n_min, n_max] and m entries in [m_min, m_max],
/// partitions in nondecreasing_partitions order and m in odometer order.
std::vector<SunOrbitSpec> enumerate_sun_specs(int n_min, int n_max, std::int64_t m_min,
                                              std::int64_t m_max);

}  // namespace coadjoint
