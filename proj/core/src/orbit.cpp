#include "coadjoint/orbit.hpp"

#include <algorithm>
#include <set>

#include "coadjoint/errors.hpp"

namespace coadjoint {

OrbitDatum::OrbitDatum(const RootSystem& rs, RationalWeight eta) : rs_(&rs), eta_(std::move(eta)) {
  if (eta_.rank() != static_cast<std::size_t>(rs.rank()))
    throw InvalidInput("weight: expected " + std::to_string(rs.rank()) + " coordinates for " +
                       rs.type().to_string() + ", got " + std::to_string(eta_.rank()));
}

StabilizerReport stabilizer(const OrbitDatum& od) {
  const RootSystem& rs = od.root_system();
  StabilizerReport rep;
  const auto roots = rs.roots();
  const auto coroots = rs.coroots();
  std::set<Root> positive_levi;
  for (std::size_t k = 0; k < roots.size(); ++k) {
    const Rational p = pair(od.eta(), coroots[k]);
    if (p == 0) {
      rep.levi_roots.push_back(roots[k]);
      if (k < rs.num_positive()) positive_levi.insert(roots[k]);
    }
    if (p >= 0) rep.parabolic_roots.push_back(roots[k]);
  }
  rep.regular = rep.levi_roots.empty();

  // simple system: positive levi roots that are not a sum of two positive levi roots
  for (std::size_t k = 0; k < rs.num_positive(); ++k) {
    const Root& beta = roots[k];
    if (!positive_levi.contains(beta)) continue;
    bool decomposable = false;
    for (const Root& gamma : positive_levi) {
      if (gamma.height() >= beta.height()) continue;
      Root rest = beta;
      for (std::size_t i = 0; i < rest.coords.size(); ++i) rest.coords[i] -= gamma.coords[i];
      if (positive_levi.contains(rest)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) rep.levi_simple_roots.push_back(beta);
  }

  const int l = static_cast<int>(rep.levi_simple_roots.size());
  if (l > 0) {
    IntMatrix a(l, l);
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j)
        a(i, j) = rs.root_coroot_pairing(rep.levi_simple_roots[j], rs.coroot_of(rep.levi_simple_roots[i]));
    auto type = classify_cartan_matrix(a);
    if (!type) throw std::logic_error("levi subsystem is not of finite type");
    rep.levi_type = *type;
  }
  rep.center_torus_rank = rs.rank() - l;
  return rep;
}

bool is_quantizable(const OrbitDatum& od) { return od.eta().is_integral(); }

int symplectic_dimension(const OrbitDatum& od) {
  const RootSystem& rs = od.root_system();
  int levi = 0;
  for (const auto& co : rs.coroots())
    if (pair(od.eta(), co) == 0) ++levi;
  return static_cast<int>(rs.roots().size()) - levi;
}

std::vector<int> type_a_blocks(const OrbitDatum& od) {
  const auto& factors = od.root_system().type().factors();
  if (factors.size() != 1 || factors[0].series != 'A')
    throw InvalidInput("block structure is defined for simple type A only");
  std::vector<int> blocks;
  int run = 1;
  for (const auto& c : od.eta().coords) {
    if (c != 0) {
      blocks.push_back(run);
      run = 1;
    } else {
      ++run;
    }
  }
  blocks.push_back(run);
  return blocks;
}

}  // namespace coadjoint
