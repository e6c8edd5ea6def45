#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "coadjoint/center.hpp"
#include "coadjoint/orbit.hpp"

namespace coadjoint {

struct KappaEntry {
  CenterElement element;
  RootOfUnity value;
};

/// Values of the symplectic-action character on every central loop endpoint.
struct KappaTable {
  std::vector<KappaEntry> entries;
  std::int64_t center_order = 1;
  std::int64_t image_size = 1;
  bool injective = true;

  const RootOfUnity& at(const CenterElement& z) const;
};

/// Where a lower bound on the fundamental group of Ham comes from.
enum class BoundProvenance {
  /// Lambda injective on the center: bound is the center order.
  kInjectiveOnCenter,
  /// Lambda not injective: bound is the size of its image.
  kImageSize,
  /// Image is trivial: bound 1.
  kTrivial,
};

/// Wire names: "paper_theorem", "derived_image_size", "trivial".
std::string_view to_string(BoundProvenance p);

struct Pi1Bound {
  std::int64_t value = 1;
  BoundProvenance provenance = BoundProvenance::kTrivial;
};

Pi1Bound pi1_lower_bound(const KappaTable& table);

/// kappa(z) = Lambda(z) = e^{-eta}(z) for every z in the center.
/// Throws NotQuantizable when eta is not integral.
KappaTable kappa_on_center(const OrbitDatum& od, const CenterGroup& cg);

/// Weyl dimension formula, exact. Throws InvalidInput for non-dominant hw.
BigInt weyl_dimension(const RootSystem& rs, const Weight& hw);

/// Denominator floor used by weyl_character_at_torus.
inline constexpr double kDefaultWeylDenominatorFloor = 1e-12;

/// Character of the irreducible representation with highest weight hw at a
/// torus point. The point is given by the values t[i] = e^{varpi_i}(t) of
/// the fundamental weights, so e^{mu}(t) = prod_i t[i]^{mu_i}.
///
/// Throws SingularTorusPoint when |Weyl denominator| < floor (central and
/// other non-generic points); use kappa_via_weyl_oracle there.
std::complex<double> weyl_character_at_torus(const RootSystem& rs, const Weight& hw,
                                             std::span<const std::complex<double>> t,
                                             double floor = kDefaultWeylDenominatorFloor);

/// Torus point exp(2 pi i x) for a rational coweight x in the
/// fundamental-coweight basis, in the format weyl_character_at_torus takes.
std::vector<std::complex<double>> torus_point_from_coweight(const RootSystem& rs,
                                                            std::span<const Rational> coweight);

/// chi(pi*)(z) / dim pi for the irreducible pi of highest weight eta,
/// computed from the Weyl character formula at the central point.
///
/// The alternating sums are specialised along exp(2 pi i (x + s * 2rho^v))
/// and the 0/0 limit at s = 0 is taken by differentiating numerator and
/// denominator #positive-roots times; all exponents and phases are exact,
/// only the final quotient is complex. A non-dominant eta is first moved to
/// the dominant chamber (same orbit). Requires integral eta (NotQuantizable)
/// and regular eta (Unsupported).
RootOfUnity kappa_via_weyl_oracle(const OrbitDatum& od, const CenterElement& z,
                                  const CenterGroup& cg);

}  // namespace coadjoint
