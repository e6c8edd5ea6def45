#include "coadjoint/character.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>

#include "coadjoint/errors.hpp"

namespace coadjoint {

const RootOfUnity& KappaTable::at(const CenterElement& z) const {
  for (const auto& e : entries)
    if (e.element == z) return e.value;
  throw InvalidInput("element is not in the kappa table");
}

std::string_view to_string(BoundProvenance p) {
  switch (p) {
    case BoundProvenance::kInjectiveOnCenter: return "paper_theorem";
    case BoundProvenance::kImageSize: return "derived_image_size";
    case BoundProvenance::kTrivial: return "trivial";
  }
  return "trivial";
}

Pi1Bound pi1_lower_bound(const KappaTable& table) {
  if (table.injective) return {table.center_order, BoundProvenance::kInjectiveOnCenter};
  if (table.image_size == 1) return {1, BoundProvenance::kTrivial};
  return {table.image_size, BoundProvenance::kImageSize};
}

KappaTable kappa_on_center(const OrbitDatum& od, const CenterGroup& cg) {
  // Lambda = e^{-eta} on the torus; to_integral throws NotQuantizable
  const Weight lambda = -od.eta().to_integral();
  KappaTable table;
  table.center_order = cg.order();
  std::set<RootOfUnity> image;
  for (auto& z : cg.elements()) {
    const RootOfUnity v = cg.pairing(lambda, z);
    image.insert(v);
    table.entries.push_back({std::move(z), v});
  }
  table.image_size = static_cast<std::int64_t>(image.size());
  table.injective = table.image_size == table.center_order;
  return table;
}

BigInt weyl_dimension(const RootSystem& rs, const Weight& hw) {
  if (hw.rank() != static_cast<std::size_t>(rs.rank()))
    throw InvalidInput("weyl_dimension: rank mismatch");
  if (!hw.is_dominant()) throw InvalidInput("weyl_dimension: highest weight is not dominant");
  const Weight shifted = hw + rs.rho();
  BigInt num = 1;
  BigInt den = 1;
  for (const auto& co : rs.positive_coroots()) {
    num *= pair(shifted, co);
    den *= co.height();  // <rho, coroot> = height in the coroot basis
  }
  if (num % den != 0) throw std::logic_error("Weyl dimension is not an integer");
  return num / den;
}

namespace {

std::complex<double> torus_monomial(const Weight& mu, std::span<const std::complex<double>> t) {
  std::complex<double> v{1.0, 0.0};
  for (std::size_t i = 0; i < mu.rank(); ++i) {
    const std::int64_t e = mu.coords[i];
    if (e == 0) continue;
    const std::complex<double> base = e > 0 ? t[i] : 1.0 / t[i];
    std::complex<double> p{1.0, 0.0};
    std::complex<double> b = base;
    for (std::uint64_t k = static_cast<std::uint64_t>(e > 0 ? e : -e); k; k >>= 1) {
      if (k & 1U) p *= b;
      b *= b;
    }
    v *= p;
  }
  return v;
}

std::complex<double> alternating_sum(const std::vector<SignedWeight>& orbit,
                                     std::span<const std::complex<double>> t) {
  std::complex<double> s{0.0, 0.0};
  for (const auto& [mu, sign] : orbit) s += static_cast<double>(sign) * torus_monomial(mu, t);
  return s;
}

}  // namespace

std::complex<double> weyl_character_at_torus(const RootSystem& rs, const Weight& hw,
                                             std::span<const std::complex<double>> t, double floor) {
  if (t.size() != static_cast<std::size_t>(rs.rank()))
    throw InvalidInput("torus point: expected " + std::to_string(rs.rank()) + " phases");
  if (hw.rank() != t.size()) throw InvalidInput("highest weight: rank mismatch");
  if (!hw.is_dominant()) throw InvalidInput("highest weight is not dominant");
  for (const auto& ti : t)
    if (ti == std::complex<double>{0.0, 0.0}) throw InvalidInput("torus phase must be nonzero");

  const auto denominator = alternating_sum(signed_regular_orbit(rs, rs.rho()), t);
  if (std::abs(denominator) < floor)
    throw SingularTorusPoint("Weyl denominator below floor at this torus point; perturb t "
                             "(central points are singular, use kappa_via_weyl_oracle)");
  const auto numerator = alternating_sum(signed_regular_orbit(rs, hw + rs.rho()), t);
  return numerator / denominator;
}

std::vector<std::complex<double>> torus_point_from_coweight(const RootSystem& rs,
                                                            std::span<const Rational> coweight) {
  const int r = rs.rank();
  if (coweight.size() != static_cast<std::size_t>(r)) throw InvalidInput("coweight rank mismatch");
  std::vector<std::complex<double>> t;
  t.reserve(r);
  for (int k = 0; k < r; ++k) {
    const auto fk = rs.weight_in_root_basis(RationalWeight(rs.fundamental_weight(k)));
    Rational phase = 0;
    for (int i = 0; i < r; ++i) phase += coweight[i] * fk[i];
    const RootOfUnity v(phase);
    t.push_back(v.value());
  }
  return t;
}

namespace {

BigInt falling(std::int64_t e, int j) {
  BigInt out = 1;
  for (int i = 0; i < j; ++i) out *= e - i;
  return out;
}

// The alternating sum at exp(2 pi i (x + s 2rho^v)) is
// sum sgn * zeta_mu * q^{e_mu} with q = e^{2 pi i s}, zeta_mu = e^{2 pi i <mu, x>}
// and e_mu = <mu, 2rho^v>. Returns its q-derivatives of order 0..n at q = 1.
std::vector<std::complex<double>> specialised_derivatives(
    const RootSystem& rs, const std::vector<SignedWeight>& orbit,
    std::span<const std::int64_t> coweight, int n) {
  // group terms by the exact phase <mu, x> mod 1
  std::map<RootOfUnity, std::vector<std::pair<int, std::int64_t>>> groups;
  for (const auto& [mu, sign] : orbit) {
    const auto mu_roots = rs.weight_in_root_basis(RationalWeight(mu));
    Rational phase = 0;
    for (std::size_t i = 0; i < coweight.size(); ++i) phase += mu_roots[i] * coweight[i];
    std::int64_t e = 0;  // <mu, 2 rho^v>
    for (const auto& co : rs.positive_coroots()) e += pair(mu, co);
    groups[RootOfUnity(phase)].emplace_back(sign, e);
  }
  std::vector<std::complex<double>> out(n + 1);
  for (int j = 0; j <= n; ++j) {
    for (const auto& [zeta, terms] : groups) {
      BigInt s = 0;
      for (const auto& [sign, e] : terms) s += sign * falling(e, j);
      out[j] += zeta.value() * s.convert_to<double>();
    }
  }
  return out;
}

}  // namespace

RootOfUnity kappa_via_weyl_oracle(const OrbitDatum& od, const CenterElement& z, const CenterGroup& cg) {
  const RootSystem& rs = od.root_system();
  Weight hw = od.eta().to_integral();
  for (const auto& co : rs.positive_coroots())
    if (pair(hw, co) == 0)
      throw Unsupported("Weyl-character oracle needs a regular weight (stabiliser = maximal torus)");
  // dominant representative of the same orbit
  for (bool moved = true; moved;) {
    moved = false;
    for (int i = 0; i < rs.rank(); ++i)
      if (hw.coords[i] < 0) {
        hw = rs.reflect(hw, i);
        moved = true;
      }
  }

  const auto x = cg.coweight_representative(z);
  const int n = static_cast<int>(rs.num_positive());
  const auto num = specialised_derivatives(rs, signed_regular_orbit(rs, hw + rs.rho()), x, n);
  const auto den = specialised_derivatives(rs, signed_regular_orbit(rs, rs.rho()), x, n);

  // both sides vanish to order n at the central point
  const double scale = std::max(std::abs(num[n]), 1.0);
  for (int j = 0; j < n; ++j)
    if (std::abs(num[j]) > 1e-9 * scale || std::abs(den[j]) > 1e-9 * std::abs(den[n]))
      throw std::logic_error("Weyl quotient does not vanish to full order at a central point");

  const double dim = weyl_dimension(rs, hw).convert_to<double>();
  const std::complex<double> chi_over_dim = num[n] / den[n] / dim;
  const std::complex<double> kappa = std::conj(chi_over_dim);  // chi(pi*) = conj chi(pi)

  const std::int64_t order = cg.order();
  const double turns = std::arg(kappa) / (2.0 * std::numbers::pi) * static_cast<double>(order);
  const RootOfUnity snapped(static_cast<std::int64_t>(std::llround(turns)), order);
  if (std::abs(snapped.value() - kappa) > 1e-9)
    throw std::logic_error("Weyl quotient at a central point is not a root of unity of the center order");
  return snapped;
}

}  // namespace coadjoint
