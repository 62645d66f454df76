#pragma once

// Coefficient-box enumeration of rho^{-1}(C) + lift(shift), independent of the
// Fincke-Pohst enumerator. Practical for small rank only.

#include <cmath>
#include <cstdint>
#include <map>
#include <vector>

#include "theta_forge/codelattice.hpp"

namespace theta_forge::oracle {

using theta_forge::Ambient;
using theta_forge::Code;
using theta_forge::Word;

// Elements of O (one coordinate) with p * norm <= scaled_bound, grouped by
// residue mod P and the integer p * norm.
struct Coordinate {
  std::int64_t scaled;
  unsigned residue;
};

inline std::vector<Coordinate> coordinate_elements(unsigned p, std::int64_t scaled_bound) {
  // pI - J has smallest eigenvalue 1, so |a_k| <= sqrt(scaled_bound).
  const auto box = static_cast<std::int64_t>(std::floor(std::sqrt(static_cast<double>(scaled_bound)))) + 1;
  std::vector<Coordinate> out;
  Ambient a(p - 1, -box);
  while (true) {
    const std::int64_t sn = theta_forge::scaled_norm(p, a);
    if (sn <= scaled_bound) {
      std::int64_t s = 0;
      for (auto v : a) s += v;
      out.push_back({sn, static_cast<unsigned>(((s % p) + p) % p)});
    }
    std::size_t k = 0;
    while (k < a.size() && a[k] == box) a[k++] = -box;
    if (k == a.size()) break;
    ++a[k];
  }
  return out;
}

// counts[p*norm] over all x in O^n with rho(x) in `words`.
inline std::map<std::int64_t, std::uint64_t> brute_norm_counts(unsigned p, std::size_t n, const std::vector<Word>& words,
                                                                std::int64_t scaled_bound) {
  const auto elems = coordinate_elements(p, scaled_bound);
  // table[residue][scaled] = count
  std::vector<std::map<std::int64_t, std::uint64_t>> table(p);
  for (const auto& e : elems) ++table[e.residue][e.scaled];
  std::map<std::int64_t, std::uint64_t> total;
  for (const auto& w : words) {
    std::map<std::int64_t, std::uint64_t> acc{{0, 1}};
    for (std::size_t i = 0; i < n; ++i) {
      std::map<std::int64_t, std::uint64_t> next;
      for (const auto& [s1, c1] : acc)
        for (const auto& [s2, c2] : table[w[i]])
          if (s1 + s2 <= scaled_bound) next[s1 + s2] += c1 * c2;
      acc = std::move(next);
    }
    for (const auto& [s, c] : acc) total[s] += c;
  }
  return total;
}

}  // namespace theta_forge::oracle
