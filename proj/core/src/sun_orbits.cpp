#include "coadjoint/sun_orbits.hpp"

#include <numeric>
#include <stdexcept>

#include "coadjoint/errors.hpp"

namespace coadjoint {

void SunOrbitSpec::validate() const {
  if (n < 2) throw InvalidInput("n: must be at least 2, got " + std::to_string(n));
  if (partition.empty()) throw InvalidInput("partition: must be nonempty");
  long total = 0;
  for (std::size_t j = 0; j < partition.size(); ++j) {
    if (partition[j] <= 0) throw InvalidInput("partition: parts must be positive");
    if (j > 0 && partition[j] < partition[j - 1])
      throw InvalidInput("partition: parts must be nondecreasing");
    total += partition[j];
  }
  if (total != n - 1)
    throw InvalidInput("partition: parts sum to " + std::to_string(total) + ", expected n-1 = " +
                       std::to_string(n - 1));
  if (m.size() != partition.size())
    throw InvalidInput("m: expected " + std::to_string(partition.size()) + " entries, got " +
                       std::to_string(m.size()));
}

std::vector<int> SunOrbitSpec::blocks() const {
  std::vector<int> b = partition;
  b.push_back(1);
  return b;
}

std::int64_t SunOrbitSpec::q_dot_m() const {
  std::int64_t s = 0;
  for (std::size_t j = 0; j < partition.size(); ++j) {
    std::int64_t term = 0;
    if (__builtin_mul_overflow(static_cast<std::int64_t>(partition[j]), m[j], &term) ||
        __builtin_add_overflow(s, term, &s))
      throw std::overflow_error("q.m does not fit in 64 bits");
  }
  return s;
}

namespace {

// q.m mod n without forming q.m
std::int64_t q_dot_m_mod(const SunOrbitSpec& spec) {
  std::int64_t r = 0;
  for (std::size_t j = 0; j < spec.partition.size(); ++j)
    r = (r + floor_mod(spec.partition[j], spec.n) * floor_mod(spec.m[j], spec.n)) % spec.n;
  return r;
}

}  // namespace

RootOfUnity kappa_closed_form(const SunOrbitSpec& spec, std::int64_t a) {
  spec.validate();
  return RootOfUnity(floor_mod(a, spec.n) * q_dot_m_mod(spec) % spec.n, spec.n);
}

SunBound pi1_bound_sun(const SunOrbitSpec& spec) {
  spec.validate();
  SunBound b;
  b.q_dot_m = spec.q_dot_m();
  b.gcd = std::gcd(q_dot_m_mod(spec), static_cast<std::int64_t>(spec.n));
  b.bound = spec.n / b.gcd;
  b.coprime = b.gcd == 1;
  return b;
}

RationalWeight to_weight(const SunOrbitSpec& spec) {
  spec.validate();
  std::vector<Rational> coords(static_cast<std::size_t>(spec.n - 1), Rational(0));
  int boundary = 0;
  for (std::size_t r = 0; r < spec.partition.size(); ++r) {
    boundary += spec.partition[r];
    const std::int64_t next = r + 1 < spec.m.size() ? spec.m[r + 1] : 0;
    coords[static_cast<std::size_t>(boundary - 1)] = -(Rational(spec.m[r]) - next);
  }
  return RationalWeight(std::move(coords));
}

CenterElement sun_center_element(const CenterGroup& cg, std::int64_t a) {
  std::vector<std::int64_t> x(static_cast<std::size_t>(cg.rank()), 0);
  if (x.empty()) throw InvalidInput("center of rank 0");
  x[0] = -floor_mod(a, cg.order());
  return cg.from_coweight(x);
}

std::vector<std::vector<int>> nondecreasing_partitions(int total) {
  std::vector<std::vector<int>> out;
  if (total <= 0) return out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int min_part) -> void {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = min_part; p <= remaining; ++p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, total, 1);
  return out;
}

std::vector<SunOrbitSpec> enumerate_sun_specs(int n_min, int n_max, std::int64_t m_min,
                                              std::int64_t m_max) {
  if (n_min < 2 || n_max < n_min || m_max < m_min) throw InvalidInput("empty sweep box");
  std::vector<SunOrbitSpec> out;
  for (int n = n_min; n <= n_max; ++n) {
    for (const auto& q : nondecreasing_partitions(n - 1)) {
      std::vector<std::int64_t> m(q.size(), m_min);
      while (true) {
        out.push_back({n, q, m});
        std::size_t k = m.size();
        while (k > 0 && m[k - 1] == m_max) m[--k] = m_min;
        if (k == 0) break;
        ++m[k - 1];
      }
    }
  }
  return out;
}

}  // namespace coadjoint
