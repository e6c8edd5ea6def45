#include "coadjoint/root_system.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "coadjoint/errors.hpp"

namespace coadjoint {

std::int64_t Root::height() const { return std::accumulate(coords.begin(), coords.end(), std::int64_t{0}); }

bool Root::is_positive() const {
  return std::any_of(coords.begin(), coords.end(), [](auto c) { return c > 0; });
}

Root Root::operator-() const {
  Root out = *this;
  for (auto& c : out.coords) c = -c;
  return out;
}

bool Weight::is_dominant() const {
  return std::all_of(coords.begin(), coords.end(), [](auto c) { return c >= 0; });
}

bool Weight::is_regular_dominant() const {
  return std::all_of(coords.begin(), coords.end(), [](auto c) { return c > 0; });
}

namespace {

void require_same_rank(std::size_t a, std::size_t b, const char* what) {
  if (a != b)
    throw InvalidInput(std::string(what) + ": rank mismatch (" + std::to_string(a) + " vs " +
                       std::to_string(b) + ")");
}

}  // namespace

Weight Weight::operator+(const Weight& other) const {
  require_same_rank(rank(), other.rank(), "weight sum");
  Weight out = *this;
  for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += other.coords[i];
  return out;
}

Weight Weight::operator-(const Weight& other) const { return *this + (-other); }

Weight Weight::operator-() const { return *this * -1; }

Weight Weight::operator*(std::int64_t c) const {
  Weight out = *this;
  for (auto& x : out.coords) x *= c;
  return out;
}

RationalWeight::RationalWeight(const Weight& w) {
  coords.reserve(w.rank());
  for (auto c : w.coords) coords.emplace_back(c);
}

RationalWeight RationalWeight::parse(std::string_view text) {
  std::vector<Rational> coords;
  std::size_t pos = 0;
  while (true) {
    const std::size_t end = std::min(text.find(',', pos), text.size());
    coords.push_back(parse_rational(text.substr(pos, end - pos)));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return RationalWeight(std::move(coords));
}

bool RationalWeight::is_integral() const {
  return std::all_of(coords.begin(), coords.end(), [](const Rational& c) { return is_integer(c); });
}

Weight RationalWeight::to_integral() const {
  Weight w;
  w.coords.reserve(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (!is_integer(coords[i]))
      throw NotQuantizable("non-integral weight: coordinate " + std::to_string(i + 1) + " is " +
                           coadjoint::to_string(coords[i]));
    w.coords.push_back(to_int64(coords[i]));
  }
  return w;
}

RationalWeight RationalWeight::scaled(const Rational& c) const {
  RationalWeight out = *this;
  for (auto& x : out.coords) x *= c;
  return out;
}

std::string RationalWeight::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ',';
    out += coadjoint::to_string(coords[i]);
  }
  return out;
}

namespace {

// l_i = (alpha_i, alpha_i)/2 with l_i a_ij = l_j a_ji; shortest root 1 per component.
std::vector<std::int64_t> symmetrizer(const IntMatrix& a) {
  const int r = static_cast<int>(a.rows());
  std::vector<Rational> l(r, Rational(0));
  std::vector<std::int64_t> out(r, 0);
  for (int s = 0; s < r; ++s) {
    if (l[s] != 0) continue;
    std::vector<int> comp{s};
    l[s] = 1;
    for (std::size_t k = 0; k < comp.size(); ++k) {
      const int i = comp[k];
      for (int j = 0; j < r; ++j) {
        if (j == i || a(i, j) == 0 || l[j] != 0) continue;
        l[j] = l[i] * ratio(a(i, j), a(j, i));
        comp.push_back(j);
      }
    }
    Rational smallest = l[comp[0]];
    for (int i : comp) smallest = std::min(smallest, l[i]);
    for (int i : comp) out[i] = to_int64(l[i] / smallest);
  }
  return out;
}

}  // namespace

RootSystem::RootSystem(CartanType type)
    : type_(std::move(type)), cartan_(coadjoint::cartan_matrix(type_)) {
  const int r = rank();
  if (r == 0) throw InvalidInput("root system of rank 0");
  half_lengths_ = symmetrizer(cartan_);

  std::set<Root> seen;
  std::deque<Root> queue;
  for (int i = 0; i < r; ++i) {
    Root e{std::vector<std::int64_t>(r, 0)};
    e.coords[i] = 1;
    seen.insert(e);
    queue.push_back(std::move(e));
  }
  while (!queue.empty()) {
    const Root cur = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < r; ++i) {
      Root next = reflect(cur, i);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }

  std::vector<Root> positive;
  for (const auto& root : seen)
    if (root.is_positive()) positive.push_back(root);
  std::sort(positive.begin(), positive.end(), [](const Root& x, const Root& y) {
    if (x.height() != y.height()) return x.height() < y.height();
    return x.coords > y.coords;
  });
  num_positive_ = positive.size();
  roots_ = positive;
  for (const auto& p : positive) roots_.push_back(-p);

  coroots_.reserve(roots_.size());
  for (const auto& root : roots_) {
    // (alpha, alpha)/2 = 1/2 sum_ij c_i c_j l_i a_ij
    std::int64_t twice_norm = 0;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        twice_norm += root.coords[i] * root.coords[j] * half_lengths_[i] * cartan_(i, j);
    const std::int64_t norm = twice_norm / 2;
    Root co{std::vector<std::int64_t>(r, 0)};
    for (int i = 0; i < r; ++i) {
      const std::int64_t num = root.coords[i] * half_lengths_[i];
      if (num % norm != 0) throw std::logic_error("non-integral coroot expansion");
      co.coords[i] = num / norm;
    }
    coroots_.push_back(std::move(co));
  }
  for (std::size_t k = 0; k < roots_.size(); ++k) index_.emplace(roots_[k], k);
}

std::ptrdiff_t RootSystem::index_of(const Root& root) const {
  const auto it = index_.find(root);
  return it == index_.end() ? -1 : static_cast<std::ptrdiff_t>(it->second);
}

const Root& RootSystem::coroot_of(const Root& root) const {
  const auto k = index_of(root);
  if (k < 0) throw InvalidInput("not a root of " + type_.to_string());
  return coroots_[static_cast<std::size_t>(k)];
}

Weight RootSystem::fundamental_weight(int i) const {
  if (i < 0 || i >= rank()) throw InvalidInput("fundamental weight index out of range");
  Weight w = Weight::zero(static_cast<std::size_t>(rank()));
  w.coords[i] = 1;
  return w;
}

Weight RootSystem::root_as_weight(const Root& root) const {
  require_same_rank(root.coords.size(), static_cast<std::size_t>(rank()), "root_as_weight");
  Weight w = Weight::zero(static_cast<std::size_t>(rank()));
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) w.coords[i] += cartan_(i, j) * root.coords[j];
  return w;
}

std::vector<Rational> RootSystem::weight_in_root_basis(const RationalWeight& w) const {
  const int r = rank();
  require_same_rank(w.rank(), static_cast<std::size_t>(r), "weight_in_root_basis");
  // Gauss-Jordan on [A | w]
  std::vector<std::vector<Rational>> m(r, std::vector<Rational>(r + 1));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) m[i][j] = cartan_(i, j);
    m[i][r] = w.coords[i];
  }
  for (int col = 0; col < r; ++col) {
    int piv = col;
    while (m[piv][col] == 0) ++piv;
    std::swap(m[piv], m[col]);
    const Rational inv = 1 / m[col][col];
    for (auto& x : m[col]) x *= inv;
    for (int i = 0; i < r; ++i) {
      if (i == col || m[i][col] == 0) continue;
      const Rational f = m[i][col];
      for (int j = col; j <= r; ++j) m[i][j] -= f * m[col][j];
    }
  }
  std::vector<Rational> out(r);
  for (int i = 0; i < r; ++i) out[i] = m[i][r];
  return out;
}

std::int64_t RootSystem::root_coroot_pairing(const Root& beta, const Root& coroot) const {
  require_same_rank(beta.coords.size(), static_cast<std::size_t>(rank()), "root_coroot_pairing");
  require_same_rank(coroot.coords.size(), static_cast<std::size_t>(rank()), "root_coroot_pairing");
  std::int64_t s = 0;
  for (int l = 0; l < rank(); ++l) {
    if (coroot.coords[l] == 0) continue;
    for (int k = 0; k < rank(); ++k) s += coroot.coords[l] * cartan_(l, k) * beta.coords[k];
  }
  return s;
}

Weight RootSystem::reflect(const Weight& w, int i) const {
  // alpha_i = column i of the Cartan matrix in the fundamental-weight basis
  Weight out = w;
  const std::int64_t c = w.coords[i];
  if (c == 0) return out;
  for (int k = 0; k < rank(); ++k) out.coords[k] -= c * cartan_(k, i);
  return out;
}

Root RootSystem::reflect(const Root& root, int i) const {
  std::int64_t c = 0;
  for (int j = 0; j < rank(); ++j) c += cartan_(i, j) * root.coords[j];
  Root out = root;
  out.coords[i] -= c;
  return out;
}

const Root& RootSystem::highest_coroot() const {
  const auto pos = positive_coroots();
  return *std::max_element(pos.begin(), pos.end(), [](const Root& x, const Root& y) {
    return x.height() < y.height();
  });
}

RootSystem build_root_system(const CartanType& type) { return RootSystem(type); }

Rational pair(const RationalWeight& w, const Root& coroot) {
  require_same_rank(w.rank(), coroot.coords.size(), "pair");
  Rational s = 0;
  for (std::size_t i = 0; i < w.rank(); ++i) s += w.coords[i] * coroot.coords[i];
  return s;
}

std::int64_t pair(const Weight& w, const Root& coroot) {
  require_same_rank(w.rank(), coroot.coords.size(), "pair");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < w.rank(); ++i) s += w.coords[i] * coroot.coords[i];
  return s;
}

std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& w) {
  require_same_rank(w.rank(), static_cast<std::size_t>(rs.rank()), "weyl_orbit");
  std::set<Weight> seen{w};
  std::vector<Weight> frontier{w};
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const auto& v : frontier)
      for (int i = 0; i < rs.rank(); ++i) {
        if (v.coords[i] == 0) continue;
        Weight u = rs.reflect(v, i);
        if (seen.insert(u).second) next.push_back(std::move(u));
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::vector<SignedWeight> signed_regular_orbit(const RootSystem& rs, const Weight& w) {
  require_same_rank(w.rank(), static_cast<std::size_t>(rs.rank()), "signed_regular_orbit");
  for (const auto& co : rs.positive_coroots())
    if (pair(w, co) == 0) throw InvalidInput("weight is not regular");
  std::map<Weight, int> sign{{w, 1}};
  std::vector<Weight> frontier{w};
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const auto& v : frontier) {
      const int s = sign.at(v);
      for (int i = 0; i < rs.rank(); ++i) {
        Weight u = rs.reflect(v, i);
        if (sign.emplace(u, -s).second) next.push_back(std::move(u));
      }
    }
    frontier = std::move(next);
  }
  std::vector<SignedWeight> out;
  out.reserve(sign.size());
  for (const auto& [v, s] : sign) out.push_back({v, s});
  return out;
}

}  // namespace coadjoint
