#pragma once

#include <vector>

#include "coadjoint/root_system.hpp"

namespace coadjoint {

/// A coadjoint orbit, specified by a point eta of the Cartan subalgebra dual
/// in fundamental-weight coordinates.
///
/// Coordinates are those of the highest weight -2 pi i eta; the character
/// Lambda of the stabiliser is e^{-eta} on the torus. The root system is
/// held by pointer and must outlive the datum.
class OrbitDatum {
 public:
  OrbitDatum(const RootSystem& rs, RationalWeight eta);

  const RootSystem& root_system() const { return *rs_; }
  const RationalWeight& eta() const { return eta_; }

 private:
  const RootSystem* rs_;
  RationalWeight eta_;
};

struct StabilizerReport {
  /// Roots with <eta, coroot> = 0, in root-system order.
  std::vector<Root> levi_roots;
  /// Roots with <eta, coroot> >= 0.
  std::vector<Root> parabolic_roots;
  /// Simple system of the Levi, in the simple-root basis of the ambient system.
  std::vector<Root> levi_simple_roots;
  CartanType levi_type;
  /// Dimension of the center of the stabiliser: rank - rank(levi_type).
  int center_torus_rank = 0;
  bool regular = false;
};

StabilizerReport stabilizer(const OrbitDatum& od);

/// True iff every fundamental-weight coordinate of eta is an integer.
bool is_quantizable(const OrbitDatum& od);

/// Real dimension of the orbit: #roots - #levi roots.
int symplectic_dimension(const OrbitDatum& od);

/// For a simple type A_{n-1}: sizes of the diagonal blocks U(n_1) x ... of
/// the stabiliser, read left to right. Throws InvalidInput for other types.
std::vector<int> type_a_blocks(const OrbitDatum& od);

}  // namespace coadjoint
