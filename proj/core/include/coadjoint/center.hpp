#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "coadjoint/root_system.hpp"
#include "coadjoint/smith.hpp"

namespace coadjoint {

/// e^{2 pi i num/den}, stored as a reduced fraction with 0 <= num < den.
class RootOfUnity {
 public:
  RootOfUnity() = default;
  RootOfUnity(std::int64_t num, std::int64_t den);
  explicit RootOfUnity(const Rational& phase);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  /// Multiplicative order, equal to den().
  std::int64_t order() const { return den_; }
  bool is_one() const { return num_ == 0; }

  std::complex<double> value() const;
  RootOfUnity inverse() const;
  RootOfUnity pow(std::int64_t k) const;
  RootOfUnity operator*(const RootOfUnity& other) const;

  std::string to_string() const;

  friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
  friend auto operator<=>(const RootOfUnity&, const RootOfUnity&) = default;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Coset of the coweight lattice modulo the coroot lattice, in the
/// coordinates diagonalised by the Smith form: coords[k] lives in Z/d_k.
struct CenterElement {
  std::vector<std::int64_t> coords;

  friend bool operator==(const CenterElement&, const CenterElement&) = default;
  friend auto operator<=>(const CenterElement&, const CenterElement&) = default;
};

/// Center of the simply connected group, realised as P^v / Q^v.
///
/// Coweights are written in the fundamental-coweight basis, where the
/// coroot lattice is spanned by the rows of the Cartan matrix. The Smith
/// form of the transposed Cartan matrix splits the quotient into cyclic
/// factors Z/d_k (only d_k > 1 are kept).
///
/// The element labelled by a coweight x is exp(2 pi i x) in the maximal
/// torus, so a weight w takes the value e^{2 pi i <w, x>} on it.
class CenterGroup {
 public:
  explicit CenterGroup(const RootSystem& rs);

  int rank() const { return rank_; }
  std::span<const std::int64_t> divisors() const { return divisors_; }
  std::int64_t order() const;

  CenterElement identity() const;
  std::vector<CenterElement> generators() const;
  /// All elements in mixed-radix order (first coordinate slowest).
  std::vector<CenterElement> elements() const;

  CenterElement compose(const CenterElement& a, const CenterElement& b) const;
  CenterElement power(const CenterElement& a, std::int64_t k) const;
  std::int64_t element_order(const CenterElement& a) const;
  bool contains(const CenterElement& a) const;

  /// Class of a coweight (fundamental-coweight coordinates).
  CenterElement from_coweight(std::span<const std::int64_t> coweight) const;
  /// A coweight representing the class.
  std::vector<std::int64_t> coweight_representative(const CenterElement& z) const;

  /// Phase <w, x> mod 1 for z = [x]. Throws InvalidInput on rank mismatch
  /// or a malformed element.
  RootOfUnity pairing(const Weight& w, const CenterElement& z) const;

  const SmithForm& smith() const { return smith_; }

 private:
  void check(const CenterElement& z) const;

  int rank_ = 0;
  SmithForm smith_;
  std::vector<std::int64_t> divisors_;
  std::vector<int> divisor_rows_;
  // <w, generator_k> = (dual_[k] . w) / det_ mod 1
  std::vector<std::vector<std::int64_t>> dual_;
  std::int64_t det_ = 1;
};

CenterGroup compute_center(const RootSystem& rs);

/// Canonical pairing (P/Q) x (P^v/Q^v) -> Q/Z: the value of e^{w} on z.
RootOfUnity central_pairing(const Weight& w, const CenterElement& z, const CenterGroup& cg);

}  // namespace coadjoint
