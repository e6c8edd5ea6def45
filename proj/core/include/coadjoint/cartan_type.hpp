#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

namespace coadjoint {

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

/// One simple factor, e.g. {'D', 4}.
struct SimpleFactor {
  char series;
  int rank;

  friend bool operator==(const SimpleFactor&, const SimpleFactor&) = default;
  friend auto operator<=>(const SimpleFactor&, const SimpleFactor&) = default;
};

/// Cartan type of a semisimple algebra as an ordered list of simple factors.
///
/// Rank constraints: A >= 1, B >= 2, C >= 3, D >= 4, E in {6,7,8}, F = 4,
/// G = 2. An empty factor list is allowed and denotes the zero algebra
/// (it shows up as the semisimple part of a regular stabilizer).
class CartanType {
 public:
  CartanType() = default;
  explicit CartanType(std::vector<SimpleFactor> factors);

  /// "A3", "d4", "A2xA1", "e8 x g2". Case-insensitive, 'x' separated.
  static CartanType parse(std::string_view text);

  const std::vector<SimpleFactor>& factors() const { return factors_; }
  int rank() const;
  bool empty() const { return factors_.empty(); }

  /// "A2xA1"; "" for the empty type.
  std::string to_string() const;

  friend bool operator==(const CartanType&, const CartanType&) = default;

 private:
  std::vector<SimpleFactor> factors_;
};

/// Throws InvalidInput when the rank is not allowed for the series.
void validate_factor(const SimpleFactor& f);

/// Cartan matrix with entry(i, j) = <alpha_j, coroot_i>, Bourbaki node
/// numbering, block diagonal over the factors.
IntMatrix cartan_matrix(const CartanType& type);

/// Identifies the Dynkin diagram encoded by a Cartan matrix in the same
/// orientation. Factors are sorted by series letter, then rank.
/// Rank-2 double bonds are reported as B2. Returns nullopt when the matrix
/// is not of finite type.
std::optional<CartanType> classify_cartan_matrix(const IntMatrix& a);

}  // namespace coadjoint
