#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "coadjoint/cartan_type.hpp"
#include "coadjoint/rational.hpp"

namespace coadjoint {

/// Integer vector in the simple-root basis. Also used for coroots, in the
/// simple-coroot basis.
struct Root {
  std::vector<std::int64_t> coords;

  std::int64_t height() const;
  bool is_positive() const;
  Root operator-() const;

  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root&, const Root&) = default;
};

/// Integer vector in the fundamental-weight basis: coords[i] = <w, coroot_i>.
struct Weight {
  std::vector<std::int64_t> coords;

  static Weight zero(std::size_t rank) { return {std::vector<std::int64_t>(rank, 0)}; }
  std::size_t rank() const { return coords.size(); }
  bool is_dominant() const;
  bool is_regular_dominant() const;

  Weight operator+(const Weight& other) const;
  Weight operator-(const Weight& other) const;
  Weight operator-() const;
  Weight operator*(std::int64_t c) const;

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;
};

/// Rational vector in the fundamental-weight basis.
struct RationalWeight {
  std::vector<Rational> coords;

  RationalWeight() = default;
  explicit RationalWeight(std::vector<Rational> c) : coords(std::move(c)) {}
  explicit RationalWeight(const Weight& w);

  /// Comma separated list of rationals: "1,0", "1/2,-3".
  static RationalWeight parse(std::string_view text);

  std::size_t rank() const { return coords.size(); }
  bool is_integral() const;
  /// Throws NotQuantizable naming the first non-integral coordinate.
  Weight to_integral() const;
  RationalWeight scaled(const Rational& c) const;
  std::string to_string() const;

  friend bool operator==(const RationalWeight&, const RationalWeight&) = default;
};

/// Roots, coroots and Weyl-group data of a semisimple Cartan type.
///
/// Roots are produced by breadth-first closure of the simple roots under
/// simple reflections. roots() lists the positive roots sorted by height
/// then coordinates, followed by their negatives in the same order;
/// coroots() is parallel to roots().
class RootSystem {
 public:
  explicit RootSystem(CartanType type);

  const CartanType& type() const { return type_; }
  int rank() const { return static_cast<int>(cartan_.rows()); }
  const IntMatrix& cartan_matrix() const { return cartan_; }

  std::span<const Root> roots() const { return roots_; }
  std::span<const Root> positive_roots() const {
    return std::span<const Root>(roots_).first(num_positive_);
  }
  std::span<const Root> coroots() const { return coroots_; }
  std::span<const Root> positive_coroots() const {
    return std::span<const Root>(coroots_).first(num_positive_);
  }
  std::size_t num_positive() const { return num_positive_; }

  /// Index into roots(), or -1.
  std::ptrdiff_t index_of(const Root& root) const;
  const Root& coroot_of(const Root& root) const;

  /// Half squared lengths of the simple roots, normalised so the shortest
  /// root in each factor has value 1.
  std::span<const std::int64_t> half_lengths() const { return half_lengths_; }

  /// All-ones weight: half the sum of the positive roots.
  Weight rho() const { return {std::vector<std::int64_t>(static_cast<std::size_t>(rank()), 1)}; }
  Weight fundamental_weight(int i) const;

  /// Expansion of a root in the fundamental-weight basis.
  Weight root_as_weight(const Root& root) const;
  /// Expansion of a weight in the simple-root basis (rational in general).
  std::vector<Rational> weight_in_root_basis(const RationalWeight& w) const;

  /// <beta, coroot> for a root in the simple-root basis and a coroot in the
  /// simple-coroot basis.
  std::int64_t root_coroot_pairing(const Root& beta, const Root& coroot) const;

  /// s_i(w) = w - <w, coroot_i> alpha_i.
  Weight reflect(const Weight& w, int i) const;
  Root reflect(const Root& r, int i) const;

  /// Positive coroot of maximal height in the simple-coroot basis (for a
  /// product type, the first such one in sort order).
  const Root& highest_coroot() const;

 private:
  CartanType type_;
  IntMatrix cartan_;
  std::vector<std::int64_t> half_lengths_;
  std::vector<Root> roots_;
  std::vector<Root> coroots_;
  std::size_t num_positive_ = 0;
  std::map<Root, std::size_t> index_;
};

RootSystem build_root_system(const CartanType& type);

/// <w, coroot>, exact. Throws InvalidInput on rank mismatch.
Rational pair(const RationalWeight& w, const Root& coroot);
std::int64_t pair(const Weight& w, const Root& coroot);

/// Orbit of w under the group generated by the simple reflections, sorted.
std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& w);

/// Orbit point with the sign of a Weyl element reaching it.
struct SignedWeight {
  Weight weight;
  int sign;
};

/// Orbit of a regular weight (trivial stabiliser) with sgn(w) attached to
/// each point, sorted by weight. Throws InvalidInput for singular weights.
std::vector<SignedWeight> signed_regular_orbit(const RootSystem& rs, const Weight& w);

}  // namespace coadjoint
