#include "coadjoint/center.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "coadjoint/errors.hpp"

namespace coadjoint {

RootOfUnity::RootOfUnity(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw InvalidInput("root of unity needs a positive denominator");
  num = floor_mod(num, den);
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

RootOfUnity::RootOfUnity(const Rational& phase) {
  const BigInt& den = boost::multiprecision::denominator(phase);
  BigInt num = boost::multiprecision::numerator(phase) % den;
  if (num < 0) num += den;
  *this = RootOfUnity(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

std::complex<double> RootOfUnity::value() const {
  // exact at the quarter turns
  if (num_ == 0) return {1.0, 0.0};
  if (4 * num_ == den_) return {0.0, 1.0};
  if (2 * num_ == den_) return {-1.0, 0.0};
  if (4 * num_ == 3 * den_) return {0.0, -1.0};
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(num_) / static_cast<double>(den_));
}

RootOfUnity RootOfUnity::inverse() const { return RootOfUnity(-num_, den_); }

RootOfUnity RootOfUnity::pow(std::int64_t k) const {
  // reduce first so num * k cannot overflow for any den that fits
  const auto kk = static_cast<__int128>(floor_mod(k, den_)) * num_ % den_;
  return RootOfUnity(static_cast<std::int64_t>(kk), den_);
}

RootOfUnity RootOfUnity::operator*(const RootOfUnity& other) const {
  const std::int64_t l = std::lcm(den_, other.den_);
  return RootOfUnity(num_ * (l / den_) + other.num_ * (l / other.den_), l);
}

std::string RootOfUnity::to_string() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

CenterGroup::CenterGroup(const RootSystem& rs) : rank_(rs.rank()) {
  const IntMatrix& a = rs.cartan_matrix();
  // coroot lattice in the fundamental-coweight basis = rows of A = columns of A^T
  smith_ = smith_normal_form(a.transpose());
  for (int k = 0; k < rank_; ++k) {
    const std::int64_t d = smith_.diagonal(k, k);
    if (d == 0) throw InvalidInput("degenerate Cartan matrix");
    if (d > 1) {
      divisors_.push_back(d);
      divisor_rows_.push_back(k);
    }
  }

  // <w, x> = x^T A^{-1} w = x^T adj(A) w / det(A)
  det_ = determinant(a);
  std::vector<std::vector<Rational>> inv(rank_);
  for (int j = 0; j < rank_; ++j) {
    RationalWeight e(Weight::zero(static_cast<std::size_t>(rank_)));
    e.coords[j] = 1;
    inv[j] = rs.weight_in_root_basis(e);  // column j of A^{-1}
  }
  for (int k : divisor_rows_) {
    std::vector<std::int64_t> u(rank_, 0);
    for (int j = 0; j < rank_; ++j) {
      Rational s = 0;
      for (int i = 0; i < rank_; ++i) s += smith_.left_inverse(i, k) * inv[j][i];
      u[j] = to_int64(s * det_);
    }
    dual_.push_back(std::move(u));
  }
}

std::int64_t CenterGroup::order() const {
  return std::accumulate(divisors_.begin(), divisors_.end(), std::int64_t{1}, std::multiplies<>());
}

CenterElement CenterGroup::identity() const {
  return {std::vector<std::int64_t>(divisors_.size(), 0)};
}

std::vector<CenterElement> CenterGroup::generators() const {
  std::vector<CenterElement> out;
  for (std::size_t k = 0; k < divisors_.size(); ++k) {
    CenterElement g = identity();
    g.coords[k] = 1;
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<CenterElement> CenterGroup::elements() const {
  std::vector<CenterElement> out;
  out.reserve(static_cast<std::size_t>(order()));
  CenterElement cur = identity();
  while (true) {
    out.push_back(cur);
    int k = static_cast<int>(divisors_.size()) - 1;
    while (k >= 0 && ++cur.coords[k] == divisors_[k]) cur.coords[k--] = 0;
    if (k < 0) break;
  }
  return out;
}

bool CenterGroup::contains(const CenterElement& a) const {
  if (a.coords.size() != divisors_.size()) return false;
  for (std::size_t k = 0; k < divisors_.size(); ++k)
    if (a.coords[k] < 0 || a.coords[k] >= divisors_[k]) return false;
  return true;
}

void CenterGroup::check(const CenterElement& z) const {
  if (!contains(z)) throw InvalidInput("element is not in the center group");
}

CenterElement CenterGroup::compose(const CenterElement& a, const CenterElement& b) const {
  check(a);
  check(b);
  CenterElement out = identity();
  for (std::size_t k = 0; k < divisors_.size(); ++k)
    out.coords[k] = (a.coords[k] + b.coords[k]) % divisors_[k];
  return out;
}

CenterElement CenterGroup::power(const CenterElement& a, std::int64_t k) const {
  check(a);
  CenterElement out = identity();
  for (std::size_t i = 0; i < divisors_.size(); ++i) {
    const auto v = static_cast<__int128>(floor_mod(k, divisors_[i])) * a.coords[i] % divisors_[i];
    out.coords[i] = static_cast<std::int64_t>(v);
  }
  return out;
}

std::int64_t CenterGroup::element_order(const CenterElement& a) const {
  check(a);
  std::int64_t o = 1;
  for (std::size_t k = 0; k < divisors_.size(); ++k)
    o = std::lcm(o, divisors_[k] / std::gcd(a.coords[k], divisors_[k]));
  return o;
}

CenterElement CenterGroup::from_coweight(std::span<const std::int64_t> coweight) const {
  if (static_cast<int>(coweight.size()) != rank_)
    throw InvalidInput("coweight rank mismatch");
  CenterElement out = identity();
  for (std::size_t k = 0; k < divisors_.size(); ++k) {
    const int row = divisor_rows_[k];
    __int128 s = 0;
    for (int j = 0; j < rank_; ++j) s += static_cast<__int128>(smith_.left(row, j)) * coweight[j];
    const auto d = static_cast<__int128>(divisors_[k]);
    s %= d;
    if (s < 0) s += d;
    out.coords[k] = static_cast<std::int64_t>(s);
  }
  return out;
}

std::vector<std::int64_t> CenterGroup::coweight_representative(const CenterElement& z) const {
  check(z);
  std::vector<std::int64_t> x(rank_, 0);
  for (std::size_t k = 0; k < divisors_.size(); ++k)
    for (int i = 0; i < rank_; ++i) x[i] += smith_.left_inverse(i, divisor_rows_[k]) * z.coords[k];
  return x;
}

RootOfUnity CenterGroup::pairing(const Weight& w, const CenterElement& z) const {
  check(z);
  if (static_cast<int>(w.rank()) != rank_) throw InvalidInput("central pairing: rank mismatch");
  const std::int64_t den = std::llabs(det_);
  const std::int64_t sign = det_ < 0 ? -1 : 1;
  __int128 num = 0;
  for (std::size_t k = 0; k < divisors_.size(); ++k) {
    if (z.coords[k] == 0) continue;
    __int128 dot = 0;
    for (int j = 0; j < rank_; ++j) dot += static_cast<__int128>(dual_[k][j]) * w.coords[j];
    num = (num + (dot % den) * z.coords[k]) % den;
  }
  return RootOfUnity(static_cast<std::int64_t>(num * sign % den), den);
}

CenterGroup compute_center(const RootSystem& rs) { return CenterGroup(rs); }

RootOfUnity central_pairing(const Weight& w, const CenterElement& z, const CenterGroup& cg) {
  return cg.pairing(w, z);
}

}  // namespace coadjoint
