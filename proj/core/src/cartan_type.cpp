#include "coadjoint/cartan_type.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <numeric>

#include "coadjoint/errors.hpp"

namespace coadjoint {

void validate_factor(const SimpleFactor& f) {
  const int r = f.rank;
  bool ok = false;
  switch (f.series) {
    case 'A': ok = r >= 1; break;
    case 'B': ok = r >= 2; break;
    case 'C': ok = r >= 3; break;
    case 'D': ok = r >= 4; break;
    case 'E': ok = r >= 6 && r <= 8; break;
    case 'F': ok = r == 4; break;
    case 'G': ok = r == 2; break;
    default:
      throw InvalidInput(std::string("unknown series '") + f.series + "'");
  }
  if (!ok)
    throw InvalidInput(std::string("invalid rank ") + std::to_string(r) + " for series " +
                       f.series);
}

CartanType::CartanType(std::vector<SimpleFactor> factors) : factors_(std::move(factors)) {
  for (const auto& f : factors_) validate_factor(f);
}

CartanType CartanType::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)))
      s.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  if (s.empty()) throw InvalidInput("empty Cartan type");

  std::vector<SimpleFactor> factors;
  std::size_t pos = 0;
  while (true) {
    const std::size_t end = std::min(s.find('X', pos), s.size());
    const std::string_view tok = std::string_view(s).substr(pos, end - pos);
    if (tok.size() < 2 || !std::isalpha(static_cast<unsigned char>(tok[0])))
      throw InvalidInput("malformed Cartan type '" + std::string(text) + "'");
    int rank = 0;
    const auto digits = tok.substr(1);
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
    if (ec != std::errc{} || ptr != digits.data() + digits.size())
      throw InvalidInput("malformed Cartan type '" + std::string(text) + "'");
    factors.push_back({tok[0], rank});
    if (end == s.size()) break;
    pos = end + 1;
  }
  return CartanType(std::move(factors));
}

int CartanType::rank() const {
  return std::accumulate(factors_.begin(), factors_.end(), 0,
                         [](int acc, const SimpleFactor& f) { return acc + f.rank; });
}

std::string CartanType::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += 'x';
    out += factors_[i].series;
    out += std::to_string(factors_[i].rank);
  }
  return out;
}

namespace {

// Bonds written as (i, j, a_ij, a_ji) with 0-based Bourbaki labels.
void simple_block(const SimpleFactor& f, IntMatrix& a, int off) {
  const int n = f.rank;
  for (int i = 0; i < n; ++i) a(off + i, off + i) = 2;
  auto bond = [&](int i, int j, std::int64_t aij = -1, std::int64_t aji = -1) {
    a(off + i, off + j) = aij;
    a(off + j, off + i) = aji;
  };
  switch (f.series) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 2 < n; ++i) bond(i, i + 1);
      bond(n - 2, n - 1, -1, -2);  // alpha_n short
      break;
    case 'C':
      for (int i = 0; i + 2 < n; ++i) bond(i, i + 1);
      bond(n - 2, n - 1, -2, -1);  // alpha_n long
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) bond(i, i + 1);
      bond(n - 3, n - 1);
      break;
    case 'E':
      bond(0, 2);
      bond(1, 3);
      for (int i = 2; i + 1 < n; ++i) bond(i, i + 1);
      break;
    case 'F':
      bond(0, 1);
      bond(1, 2, -1, -2);  // alpha_3 short
      bond(2, 3);
      break;
    case 'G':
      bond(0, 1, -3, -1);  // alpha_1 short
      break;
    default:
      break;
  }
}

}  // namespace

IntMatrix cartan_matrix(const CartanType& type) {
  const int r = type.rank();
  IntMatrix a = IntMatrix::Zero(r, r);
  int off = 0;
  for (const auto& f : type.factors()) {
    simple_block(f, a, off);
    off += f.rank;
  }
  return a;
}

namespace {

std::optional<SimpleFactor> classify_component(const IntMatrix& a, const std::vector<int>& nodes) {
  const int n = static_cast<int>(nodes.size());
  if (n == 1) return SimpleFactor{'A', 1};

  std::vector<int> degree(n, 0);
  int multi_bonds = 0;
  int triple = 0;
  int edges = 0;
  // short end of the (unique) double bond, local indices
  int dbl_short = -1;
  int dbl_long = -1;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const std::int64_t aij = a(nodes[i], nodes[j]);
      const std::int64_t aji = a(nodes[j], nodes[i]);
      if (aij == 0) continue;
      ++edges;
      ++degree[i];
      ++degree[j];
      const std::int64_t prod = aij * aji;
      if (prod == 1) continue;
      ++multi_bonds;
      if (prod == 3) {
        ++triple;
      } else if (prod == 2) {
        // the row holding -2 belongs to the short root
        dbl_short = aij == -2 ? i : j;
        dbl_long = aij == -2 ? j : i;
      } else {
        return std::nullopt;
      }
    }
  }
  if (edges != n - 1 || multi_bonds > 1) return std::nullopt;  // not a tree / too many
  if (triple) return n == 2 ? std::optional<SimpleFactor>({'G', 2}) : std::nullopt;

  const int branch = static_cast<int>(std::count_if(degree.begin(), degree.end(),
                                                    [](int d) { return d >= 3; }));
  if (multi_bonds == 1) {
    if (branch) return std::nullopt;
    if (n == 2) return SimpleFactor{'B', 2};
    if (degree[dbl_short] == 1) return SimpleFactor{'B', n};
    if (degree[dbl_long] == 1) return SimpleFactor{'C', n};
    if (n == 4) return SimpleFactor{'F', 4};
    return std::nullopt;
  }
  if (branch == 0) return SimpleFactor{'A', n};
  if (branch > 1) return std::nullopt;

  // simply laced with one branch node: arm lengths decide D or E
  const int center = static_cast<int>(std::find_if(degree.begin(), degree.end(),
                                                   [](int d) { return d >= 3; }) -
                                      degree.begin());
  if (degree[center] != 3) return std::nullopt;
  std::vector<int> arms;
  for (int j = 0; j < n; ++j) {
    if (j == center || a(nodes[center], nodes[j]) == 0) continue;
    int len = 1;
    int prev = center;
    int cur = j;
    while (true) {
      int next = -1;
      for (int k = 0; k < n; ++k)
        if (k != prev && k != cur && a(nodes[cur], nodes[k]) != 0) next = k;
      if (next < 0) break;
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return SimpleFactor{'D', n};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return SimpleFactor{'E', n};
  return std::nullopt;
}

}  // namespace

std::optional<CartanType> classify_cartan_matrix(const IntMatrix& a) {
  const int r = static_cast<int>(a.rows());
  if (a.cols() != r) return std::nullopt;
  for (int i = 0; i < r; ++i) {
    if (a(i, i) != 2) return std::nullopt;
    for (int j = 0; j < r; ++j)
      if (i != j && (a(i, j) > 0 || ((a(i, j) == 0) != (a(j, i) == 0)))) return std::nullopt;
  }

  std::vector<int> component(r, -1);
  std::vector<SimpleFactor> factors;
  for (int s = 0; s < r; ++s) {
    if (component[s] >= 0) continue;
    std::vector<int> nodes{s};
    component[s] = s;
    for (std::size_t k = 0; k < nodes.size(); ++k)
      for (int j = 0; j < r; ++j)
        if (component[j] < 0 && a(nodes[k], j) != 0) {
          component[j] = s;
          nodes.push_back(j);
        }
    std::sort(nodes.begin(), nodes.end());
    auto f = classify_component(a, nodes);
    if (!f) return std::nullopt;
    factors.push_back(*f);
  }
  std::sort(factors.begin(), factors.end());
  return CartanType(std::move(factors));
}

}  // namespace coadjoint
